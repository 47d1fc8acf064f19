#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcproj/digraph.hpp"

namespace hcproj {

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// n x m incidence matrix: +1 where arc j leaves vertex i, -1 where it enters.
IntMatrix build_incidence(const Digraph& d);

/// Splits into the nonnegative part and the nonpositive part; the two sum back
/// to the input elementwise. Requires an incidence matrix (one +1 and one -1
/// per column); throws std::invalid_argument otherwise.
std::pair<IntMatrix, IntMatrix> split_incidence(const IntMatrix& c);

/// Copy of the selected columns, in the given order.
IntMatrix restrict_columns(const IntMatrix& mx, const std::vector<int>& cols);

/// Rank over the rationals by fraction-free (Bareiss) elimination. All
/// arithmetic is exact: int64 with overflow detection, falling back to
/// arbitrary precision when intermediate minors grow too large.
int rank_exact(const IntMatrix& mx);

/// n minus the number of weakly connected components of (V, arc_subset);
/// isolated vertices count as components. Equals rank_exact of the
/// column-restricted incidence matrix.
int rank_by_components(const Digraph& d, const std::vector<int>& arc_subset);

/// rank_exact of the incidence matrix restricted to the given arcs, built
/// directly without materializing the full n x m matrix.
int rank_exact_arc_subset(const Digraph& d, const std::vector<int>& arc_subset);

} // namespace hcproj
