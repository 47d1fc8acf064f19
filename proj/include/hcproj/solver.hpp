#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcproj/digraph.hpp"
#include "hcproj/matching.hpp"
#include "hcproj/projector.hpp"

namespace hcproj {

enum class Verdict {
    Hamiltonian,
    NoPerfectMatching,
    GreedyStuck,
    ExactExhausted,
    NotStronglyConnected,
    DegreeOutsideClass,
};

/// Wire token: HAMILTONIAN | NO_PM | STUCK | EXHAUSTED | NOT_STRONG | BAD_DEGREE.
const char* verdict_token(Verdict v);

enum class RankPath { Components, Exact };
enum class FlipOrder { Ascending, Descending };

struct SolveOptions {
    int max_passes = 0;                  // 0: one pass per cycle component, at least 1
    std::uint64_t code_cap = 1ull << 20; // exact / second-cycle enumeration bound
    bool audit_rank = false;             // cross-check both rank paths at every evaluation
    FlipOrder order = FlipOrder::Ascending;
    RankPath rank_path = RankPath::Components;
};

struct SolveOutcome {
    Verdict verdict;
    std::vector<int> arcs;                // Hamiltonian: sorted arc ids of the input digraph
    int flips_used = 0;                   // accepted flips (greedy)
    std::uint64_t codes_visited = 0;      // codes whose rank was evaluated
    int best_rank = -1;                   // greedy: rank reached
    std::string final_code;               // greedy: code where the search stopped
    std::optional<HallWitness> hall;      // NoPerfectMatching
};

/// Record of the degree-two vertex splitting. Vertices with in- and
/// out-degree both 2 become an in-copy (original id, keeps the in-arcs) and
/// an out-copy (new id, takes the out-arcs) joined by a bridge arc. Arc j < m
/// of the split graph is the image of original arc j; arcs m.. are bridges.
struct SplitMap {
    Digraph original;
    std::vector<int> split_vertices; // ascending original ids
    std::vector<int> out_copy;       // per split vertex: its out-copy id
    std::vector<int> bridge_arcs;    // arc ids in the split graph
};

/// Throws std::invalid_argument when some degree exceeds 2.
std::pair<Digraph, SplitMap> split_degree_two(const Digraph& d);

/// Drops bridge arcs and maps the rest back to original arc ids. The result
/// is verified; NotHamiltonianAfterUnsplitError signals a broken mapping.
std::vector<int> unsplit(const SplitMap& map, const std::vector<int>& split_arc_set);

/// Flip search from the deterministic initial matching: visit cycle
/// components in order, accept a flip only when the lifted rank strictly
/// increases, stop at rank n-1 or after a pass without acceptances.
SolveOutcome solve_greedy(const Digraph& d, const SolveOptions& opts = {});

/// Enumerates every component code (all perfect matchings) and reports the
/// first whose lifted arc set has rank n-1; exact within the code cap.
/// Throws CapExceededError when codes remain beyond the cap.
SolveOutcome solve_exact(const Digraph& d, const SolveOptions& opts = {});

/// Continues code enumeration after the given cycle's own code, keeping only
/// rank-preserving candidates (rank stays n-1); returns the first Hamiltonian
/// cycle distinct from `known` as an arc set, or nothing when exhausted.
std::optional<std::vector<int>> find_second_hc(const Digraph& d, const std::vector<int>& known,
                                               std::uint64_t code_cap = 1ull << 20);

/// Greedy flip search from an explicit starting matching on an already built
/// projector; exposed for replaying recorded runs and for the audit harness.
SolveOutcome greedy_flip_search(const Digraph& work, const ProjectorGraph& g,
                                const ComponentDecomposition& dec, const Matching& start,
                                const SolveOptions& opts);

} // namespace hcproj
