#include "hcproj/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "hcproj/errors.hpp"
#include "hcproj/rng.hpp"
#include "hcproj/union_find.hpp"

namespace hcproj {

namespace {

struct HamiltonSearch {
    const Digraph& d;
    std::vector<char> visited;
    std::vector<int> path_arcs;

    explicit HamiltonSearch(const Digraph& graph) : d(graph), visited(graph.n(), 0) {}

    bool extend(int v, int depth) {
        if (depth == d.n()) {
            int back = d.arc_id(v, 0);
            if (back >= 0) {
                path_arcs.push_back(back);
                return true;
            }
            return false;
        }
        for (int j : d.out_arcs(v)) {
            int w = d.head(j);
            if (visited[w])
                continue;
            visited[w] = 1;
            path_arcs.push_back(j);
            if (extend(w, depth + 1))
                return true;
            path_arcs.pop_back();
            visited[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> brute_force_hamiltonian(const Digraph& d) {
    if (d.n() > kBruteForceMaxN)
        throw TooLargeError(d.n(), kBruteForceMaxN);
    if (d.n() < 2)
        return std::nullopt;
    HamiltonSearch search(d);
    search.visited[0] = 1;
    if (!search.extend(0, 1))
        return std::nullopt;
    std::vector<int> arcs = search.path_arcs;
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

namespace {

struct CoverSearch {
    const Digraph& d;
    std::vector<char> head_used;
    std::vector<int> chosen;
    std::vector<std::vector<int>> results;

    explicit CoverSearch(const Digraph& graph) : d(graph), head_used(graph.n(), 0) {}

    void assign(int v) {
        if (v == d.n()) {
            std::vector<int> cover = chosen;
            std::sort(cover.begin(), cover.end());
            results.push_back(std::move(cover));
            return;
        }
        for (int j : d.out_arcs(v)) {
            int w = d.head(j);
            if (head_used[w])
                continue;
            head_used[w] = 1;
            chosen.push_back(j);
            assign(v + 1);
            chosen.pop_back();
            head_used[w] = 0;
        }
    }
};

} // namespace

std::vector<std::vector<int>> enumerate_cycle_covers(const Digraph& d) {
    if (d.n() > kEnumerationMaxN)
        throw TooLargeError(d.n(), kEnumerationMaxN);
    if (d.n() == 0)
        return {};
    CoverSearch search(d);
    search.assign(0);
    std::sort(search.results.begin(), search.results.end());
    return search.results;
}

std::vector<std::vector<int>> enumerate_hamiltonian_cycles(const Digraph& d) {
    std::vector<std::vector<int>> out;
    if (d.n() < 2)
        return out;
    for (auto& cover : enumerate_cycle_covers(d)) {
        UnionFind uf(d.n());
        for (int j : cover)
            uf.unite(d.tail(j), d.head(j));
        if (uf.components() == 1)
            out.push_back(cover);
    }
    return out; // covers are already sorted
}

namespace {

constexpr int kDegreeCap = 2;

// Adds up to `target` extra arcs under the degree caps; attempts are bounded
// so saturated instances terminate.
void add_random_arcs(std::vector<std::pair<int, int>>& arcs, std::vector<int>& outd,
                     std::vector<int>& ind, int n, int target, SplitMix64& rng) {
    auto exists = [&](int t, int h) {
        return std::find(arcs.begin(), arcs.end(), std::make_pair(t, h)) != arcs.end();
    };
    int added = 0;
    for (int attempt = 0; attempt < 40 * target + 40 && added < target; ++attempt) {
        int t = static_cast<int>(rng.below(n));
        int h = static_cast<int>(rng.below(n));
        if (t == h || outd[t] >= kDegreeCap || ind[h] >= kDegreeCap || exists(t, h))
            continue;
        arcs.emplace_back(t, h);
        ++outd[t];
        ++ind[h];
        ++added;
    }
}

} // namespace

GeneratedInstance generate(const InstanceSpec& spec) {
    if (spec.n < 3)
        throw std::invalid_argument("generate requires n >= 3");
    if (spec.cls == DegreeClassKind::Outside)
        throw std::invalid_argument("generate supports Gamma and BoundTwo only");
    const int n = spec.n;
    const int extras = static_cast<int>(spec.density * n + 0.5);

    if (spec.plant_hc) {
        SplitMix64 rng(derive_seed(spec.seed, 0x9a1e));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
        std::vector<std::pair<int, int>> arcs;
        arcs.reserve(n + extras);
        std::vector<int> outd(n, 1), ind(n, 1);
        for (int i = 0; i < n; ++i)
            arcs.emplace_back(perm[i], perm[(i + 1) % n]);
        add_random_arcs(arcs, outd, ind, n, extras, rng);
        GeneratedInstance out{Digraph(n, std::move(arcs)), std::vector<int>(n)};
        std::iota(out.planted->begin(), out.planted->end(), 0);
        return out;
    }

    // Direct sampling under the caps; for Gamma, reject until the classifier
    // agrees (the cycle seed is absent, so connectivity is not guaranteed).
    const int target_m = n + extras;
    const int retries = spec.cls == DegreeClassKind::Gamma ? 2000 : 1;
    for (int round = 0; round < retries; ++round) {
        SplitMix64 rng(derive_seed(spec.seed, 0xb0d2 + round));
        std::vector<std::pair<int, int>> arcs;
        std::vector<int> outd(n, 0), ind(n, 0);
        add_random_arcs(arcs, outd, ind, n, target_m, rng);
        Digraph d(n, std::move(arcs));
        if (spec.cls == DegreeClassKind::BoundTwo)
            return {std::move(d), std::nullopt};
        if (classify(d).kind == DegreeClassKind::Gamma)
            return {std::move(d), std::nullopt};
    }
    throw UnsatisfiableError("no Gamma instance found for n=" + std::to_string(n) +
                             " density=" + std::to_string(spec.density));
}

Digraph gen_two_cycles_bridge(int c1, int c2) {
    if (c1 < 2 || c2 < 2)
        throw std::invalid_argument("cycle lengths must be at least 2");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < c1; ++i)
        arcs.emplace_back(i, (i + 1) % c1);
    for (int i = 0; i < c2; ++i)
        arcs.emplace_back(c1 + i, c1 + (i + 1) % c2);
    arcs.emplace_back(0, c1);
    return Digraph(c1 + c2, std::move(arcs));
}

} // namespace hcproj
