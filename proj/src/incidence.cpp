#include "hcproj/incidence.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>

#include "hcproj/union_find.hpp"

namespace hcproj {

IntMatrix build_incidence(const Digraph& d) {
    IntMatrix c(d.n(), d.m());
    for (int j = 0; j < d.m(); ++j) {
        c.at(d.tail(j), j) = 1;
        c.at(d.head(j), j) = -1;
    }
    return c;
}

std::pair<IntMatrix, IntMatrix> split_incidence(const IntMatrix& c) {
    for (int j = 0; j < c.cols; ++j) {
        int plus = 0, minus = 0, other = 0;
        for (int i = 0; i < c.rows; ++i) {
            if (c.at(i, j) == 1)
                ++plus;
            else if (c.at(i, j) == -1)
                ++minus;
            else if (c.at(i, j) != 0)
                ++other;
        }
        if (plus != 1 || minus != 1 || other != 0)
            throw std::invalid_argument("column " + std::to_string(j) +
                                        " is not an incidence column (one +1, one -1)");
    }
    IntMatrix cplus(c.rows, c.cols), cminus(c.rows, c.cols);
    for (int i = 0; i < c.rows; ++i) {
        for (int j = 0; j < c.cols; ++j) {
            std::int64_t v = c.at(i, j);
            if (v > 0)
                cplus.at(i, j) = v;
            else if (v < 0)
                cminus.at(i, j) = v;
        }
    }
    return {std::move(cplus), std::move(cminus)};
}

IntMatrix restrict_columns(const IntMatrix& mx, const std::vector<int>& cols) {
    IntMatrix out(mx.rows, static_cast<int>(cols.size()));
    for (int i = 0; i < mx.rows; ++i)
        for (int jj = 0; jj < out.cols; ++jj)
            out.at(i, jj) = mx.at(i, cols[jj]);
    return out;
}

namespace {

// One-step fraction-free elimination. Entries after step k are k+1 minors of
// the input, so the divisions are exact. Returns the rank, or -1 if a value
// left the representable range of T (only possible for T = int64).
template <typename T>
int bareiss_rank(const IntMatrix& mx) {
    const int rows = mx.rows, cols = mx.cols;
    std::vector<std::vector<T>> a(rows, std::vector<T>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a[i][j] = T(mx.at(i, j));

    constexpr bool checked = std::is_same_v<T, __int128>;
    // Bound chosen so products of two in-range values fit in __int128.
    const __int128 limit = (__int128(1) << 62);

    T prev = T(1);
    int rank = 0;
    int pivot_col = 0;
    while (rank < rows && pivot_col < cols) {
        int pivot_row = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[i][pivot_col] != T(0)) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            ++pivot_col;
            continue;
        }
        std::swap(a[rank], a[pivot_row]);
        const T pivot = a[rank][pivot_col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = pivot_col + 1; j < cols; ++j) {
                T num = a[i][j] * pivot - a[i][pivot_col] * a[rank][j];
                a[i][j] = num / prev;
                if constexpr (checked) {
                    if (a[i][j] > limit || a[i][j] < -limit)
                        return -1;
                }
            }
            a[i][pivot_col] = T(0);
        }
        prev = pivot;
        ++rank;
        ++pivot_col;
    }
    return rank;
}

} // namespace

int rank_exact(const IntMatrix& mx) {
    if (mx.rows == 0 || mx.cols == 0)
        return 0;
    bool small = true;
    const std::int64_t limit = std::int64_t(1) << 62;
    for (std::int64_t v : mx.a) {
        if (v > limit || v < -limit) {
            small = false;
            break;
        }
    }
    if (small) {
        int r = bareiss_rank<__int128>(mx);
        if (r >= 0)
            return r;
    }
    return bareiss_rank<boost::multiprecision::cpp_int>(mx);
}

int rank_by_components(const Digraph& d, const std::vector<int>& arc_subset) {
    UnionFind uf(d.n());
    for (int j : arc_subset)
        uf.unite(d.tail(j), d.head(j));
    return d.n() - uf.components();
}

int rank_exact_arc_subset(const Digraph& d, const std::vector<int>& arc_subset) {
    IntMatrix c(d.n(), static_cast<int>(arc_subset.size()));
    for (int jj = 0; jj < c.cols; ++jj) {
        c.at(d.tail(arc_subset[jj]), jj) = 1;
        c.at(d.head(arc_subset[jj]), jj) = -1;
    }
    return rank_exact(c);
}

} // namespace hcproj
