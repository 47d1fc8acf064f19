#include "hcproj/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcproj/errors.hpp"
#include "hcproj/incidence.hpp"

namespace hcproj {

const char* verdict_token(Verdict v) {
    switch (v) {
    case Verdict::Hamiltonian: return "HAMILTONIAN";
    case Verdict::NoPerfectMatching: return "NO_PM";
    case Verdict::GreedyStuck: return "STUCK";
    case Verdict::ExactExhausted: return "EXHAUSTED";
    case Verdict::NotStronglyConnected: return "NOT_STRONG";
    case Verdict::DegreeOutsideClass: return "BAD_DEGREE";
    }
    return "?";
}

std::pair<Digraph, SplitMap> split_degree_two(const Digraph& d) {
    SplitMap map;
    map.original = d;
    for (int v = 0; v < d.n(); ++v) {
        if (d.out_degree(v) > 2 || d.in_degree(v) > 2)
            throw std::invalid_argument("vertex " + std::to_string(v) + " exceeds degree bound 2");
        if (d.out_degree(v) == 2 && d.in_degree(v) == 2)
            map.split_vertices.push_back(v);
    }
    std::vector<int> out_id(d.n());
    for (int v = 0; v < d.n(); ++v)
        out_id[v] = v;
    map.out_copy.resize(map.split_vertices.size());
    for (std::size_t s = 0; s < map.split_vertices.size(); ++s) {
        out_id[map.split_vertices[s]] = d.n() + static_cast<int>(s);
        map.out_copy[s] = d.n() + static_cast<int>(s);
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.m() + map.split_vertices.size());
    for (int j = 0; j < d.m(); ++j)
        arcs.emplace_back(out_id[d.tail(j)], d.head(j)); // in-arcs keep the original head id
    for (std::size_t s = 0; s < map.split_vertices.size(); ++s) {
        map.bridge_arcs.push_back(static_cast<int>(arcs.size()));
        arcs.emplace_back(map.split_vertices[s], map.out_copy[s]);
    }
    Digraph split(d.n() + static_cast<int>(map.split_vertices.size()), std::move(arcs));
    return {std::move(split), std::move(map)};
}

std::vector<int> unsplit(const SplitMap& map, const std::vector<int>& split_arc_set) {
    std::vector<int> arcs;
    arcs.reserve(split_arc_set.size());
    for (int j : split_arc_set)
        if (j < map.original.m())
            arcs.push_back(j);
    std::sort(arcs.begin(), arcs.end());
    if (!is_hamiltonian_subgraph(map.original, arcs))
        throw NotHamiltonianAfterUnsplitError(arcs);
    return arcs;
}

namespace {

struct Prepared {
    Digraph work;                 // the graph the matching machinery runs on
    std::optional<SplitMap> map;  // set when the input was routed through splitting
    ProjectorGraph g;
    ComponentDecomposition dec;
};

// Degree/connectivity gate shared by both solve modes. Returns an early
// outcome or the prepared working graph.
std::optional<SolveOutcome> gate(const Digraph& d, Prepared& prep) {
    DegreeClass cls = classify(d);
    if (cls.kind == DegreeClassKind::Outside)
        return SolveOutcome{Verdict::DegreeOutsideClass};
    if (!is_strongly_connected(d))
        return SolveOutcome{Verdict::NotStronglyConnected};
    if (cls.kind == DegreeClassKind::BoundTwo) {
        auto [split, map] = split_degree_two(d);
        prep.work = std::move(split);
        prep.map = std::move(map);
    } else {
        prep.work = d;
    }
    prep.g = project(prep.work);
    prep.dec = decompose(prep.g);
    return std::nullopt;
}

struct RankEvaluator {
    const Digraph& d;
    RankPath path;
    bool audit;

    int operator()(const std::vector<int>& arc_set) const {
        int by_components = -1, by_elimination = -1;
        if (path == RankPath::Components || audit)
            by_components = rank_by_components(d, arc_set);
        if (path == RankPath::Exact || audit)
            by_elimination = rank_exact_arc_subset(d, arc_set);
        if (audit && by_components != by_elimination)
            throw std::logic_error("rank cross-check failed: components " +
                                   std::to_string(by_components) + " vs elimination " +
                                   std::to_string(by_elimination));
        return path == RankPath::Components ? by_components : by_elimination;
    }
};

// Maps a working-graph arc set back to the input digraph and verifies it.
std::vector<int> finish_hamiltonian(const Digraph& d, const Prepared& prep,
                                    const std::vector<int>& work_arcs) {
    std::vector<int> arcs = prep.map ? unsplit(*prep.map, work_arcs) : work_arcs;
    std::sort(arcs.begin(), arcs.end());
    if (!is_hamiltonian_subgraph(d, arcs))
        throw std::logic_error("solver produced an arc set that is not a Hamiltonian cycle");
    return arcs;
}

} // namespace

SolveOutcome greedy_flip_search(const Digraph& work, const ProjectorGraph& g,
                                const ComponentDecomposition& dec, const Matching& start,
                                const SolveOptions& opts) {
    RankEvaluator rank{work, opts.rank_path, opts.audit_rank};
    const int target = work.n() - 1;

    std::vector<int> order = dec.cycle_components;
    if (opts.order == FlipOrder::Descending)
        std::reverse(order.begin(), order.end());
    const int k = static_cast<int>(order.size());
    const int passes = opts.max_passes > 0 ? opts.max_passes : std::max(k, 1);

    Matching current = start;
    int current_rank = rank(lift(g, current));
    SolveOutcome out{Verdict::GreedyStuck};
    out.codes_visited = 1;

    for (int pass = 0; pass < passes && current_rank < target; ++pass) {
        bool accepted = false;
        for (int ci : order) {
            Matching candidate = flip(g, dec, current, ci);
            int candidate_rank = rank(lift(g, candidate));
            ++out.codes_visited;
            if (candidate_rank > current_rank) {
                current = std::move(candidate);
                current_rank = candidate_rank;
                ++out.flips_used;
                accepted = true;
                if (current_rank == target)
                    break;
            }
        }
        if (!accepted)
            break;
    }

    out.best_rank = current_rank;
    out.final_code = code_of(dec, current).str();
    if (current_rank == target) {
        out.verdict = Verdict::Hamiltonian;
        out.arcs = lift(g, current);
    }
    return out;
}

SolveOutcome solve_greedy(const Digraph& d, const SolveOptions& opts) {
    Prepared prep;
    if (auto early = gate(d, prep))
        return *early;
    Matching initial = hopcroft_karp(prep.g);
    if (!initial.is_perfect(prep.g)) {
        SolveOutcome out{Verdict::NoPerfectMatching};
        out.hall = hall_violation(prep.g);
        return out;
    }
    SolveOutcome out = greedy_flip_search(prep.work, prep.g, prep.dec, initial, opts);
    if (out.verdict == Verdict::Hamiltonian)
        out.arcs = finish_hamiltonian(d, prep, out.arcs);
    return out;
}

SolveOutcome solve_exact(const Digraph& d, const SolveOptions& opts) {
    Prepared prep;
    if (auto early = gate(d, prep))
        return *early;
    Matching initial = hopcroft_karp(prep.g);
    if (!initial.is_perfect(prep.g)) {
        SolveOutcome out{Verdict::NoPerfectMatching};
        out.hall = hall_violation(prep.g);
        return out;
    }
    RankEvaluator rank{prep.work, opts.rank_path, opts.audit_rank};
    const int target = prep.work.n() - 1;

    MatchingEnumerator en(prep.g, prep.dec);
    ComponentCode code;
    Matching m;
    SolveOutcome out{Verdict::ExactExhausted};
    while (en.next(code, m)) {
        if (out.codes_visited == opts.code_cap)
            throw CapExceededError(opts.code_cap);
        ++out.codes_visited;
        if (rank(lift(prep.g, m)) == target) {
            out.verdict = Verdict::Hamiltonian;
            out.arcs = finish_hamiltonian(d, prep, lift(prep.g, m));
            out.final_code = code.str();
            return out;
        }
    }
    return out;
}

std::optional<std::vector<int>> find_second_hc(const Digraph& d, const std::vector<int>& known,
                                               std::uint64_t code_cap) {
    if (!is_hamiltonian_subgraph(d, known))
        throw std::invalid_argument("the given arc set is not a Hamiltonian cycle");
    Prepared prep;
    if (auto early = gate(d, prep))
        throw std::invalid_argument("digraph outside the solvable classes");

    // Image of the known cycle in the working graph: original arc ids, plus
    // every bridge arc when the input was split.
    std::vector<int> known_work = known;
    if (prep.map) {
        known_work.insert(known_work.end(), prep.map->bridge_arcs.begin(),
                          prep.map->bridge_arcs.end());
        std::sort(known_work.begin(), known_work.end());
    }
    Matching known_matching = Matching::from_edges(prep.g, known_work);
    ComponentCode code = code_of(prep.dec, known_matching);
    const ComponentCode home = code;
    RankEvaluator rank{prep.work, RankPath::Components, false};
    const int target = prep.work.n() - 1;

    auto increment = [](ComponentCode& c) {
        int i = static_cast<int>(c.bits.size()) - 1;
        while (i >= 0 && c.bits[i] == 1)
            c.bits[i--] = 0;
        if (i >= 0)
            c.bits[i] = 1;
        // all-ones wraps to all-zeros
    };

    if (home.bits.empty())
        return std::nullopt; // unique perfect matching: no other candidate

    std::uint64_t examined = 0;
    increment(code);
    std::vector<int> known_sorted = known;
    std::sort(known_sorted.begin(), known_sorted.end());
    while (!(code == home)) {
        if (examined == code_cap)
            throw CapExceededError(code_cap);
        ++examined;
        Matching m = matching_from_code(prep.g, prep.dec, code);
        // Acceptance keeps the rank at least at the incumbent's n-1, which
        // pins it to exactly n-1: a Hamiltonian candidate.
        if (rank(lift(prep.g, m)) == target) {
            std::vector<int> arcs = finish_hamiltonian(d, prep, lift(prep.g, m));
            if (arcs != known_sorted)
                return arcs;
        }
        increment(code);
    }
    return std::nullopt;
}

} // namespace hcproj
