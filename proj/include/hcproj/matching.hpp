#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcproj/projector.hpp"

namespace hcproj {

/// Set of edges, no two sharing a vertex. `mate` maps every global vertex to
/// its matched edge id, -1 when exposed.
struct Matching {
    std::vector<int> edges; // sorted edge ids
    std::vector<int> mate;  // size 2n

    /// Validates vertex-disjointness; throws std::invalid_argument.
    static Matching from_edges(const ProjectorGraph& g, std::vector<int> edge_ids);

    int size() const { return static_cast<int>(edges.size()); }
    bool is_perfect(const ProjectorGraph& g) const { return size() == g.n(); }
    /// Some exposed global vertex id, or -1 when perfect.
    int exposed_vertex() const;
    bool contains(int edge) const;
};

/// Maximum-cardinality matching. Deterministic: adjacency is scanned in
/// ascending edge-id order and augmenting paths are taken lowest-index-first.
Matching hopcroft_karp(const ProjectorGraph& g);

/// The matching when it covers everything, otherwise nothing (a Hall witness
/// is then available from hall_violation).
std::optional<Matching> perfect_matching(const ProjectorGraph& g);

/// A set S on one side with |N(S)| < |S|, in side-local indices.
struct HallWitness {
    bool y_side = true;
    std::vector<int> set;
    std::vector<int> neighbors;
};

/// Empty when a perfect matching exists; otherwise a violating set derived
/// from the final alternating-reachability layering (on the Y side).
std::optional<HallWitness> hall_violation(const ProjectorGraph& g);

/// Arc ids selected by a matching; edge ids and arc ids coincide.
std::vector<int> lift(const ProjectorGraph& g, const Matching& m);

/// One bit per cycle component, in component order: 0 selects the canonical
/// alternating class (the one containing the component's lowest edge id).
struct ComponentCode {
    std::vector<std::uint8_t> bits;

    std::string str() const; // "0110"; empty code -> "-"
    bool operator==(const ComponentCode&) const = default;
};

/// Code of a perfect matching. Throws NotPerfectError when a vertex is exposed.
ComponentCode code_of(const ComponentDecomposition& dec, const Matching& m);

/// The unique perfect matching selecting each path's forced class and each
/// cycle's class per its bit. Throws NoPerfectMatchingError with an odd path
/// component as witness when none exists.
Matching matching_from_code(const ProjectorGraph& g, const ComponentDecomposition& dec,
                            const ComponentCode& code);

/// Replaces the matching's edges inside one cycle component by the opposite
/// alternating class. Perfection is preserved; applying it twice restores the
/// input; exactly that component's code bit toggles.
Matching flip(const ProjectorGraph& g, const ComponentDecomposition& dec, const Matching& m,
              int cycle_component_index);

struct MatchingCount {
    unsigned long long labeled = 0; // saturates at max when overflowed is set
    bool overflowed = false;
    std::size_t weight_classes = 0; // cycle components + 1 when feasible
    std::size_t cycle_components = 0;
};

/// 0 when some path component is odd, else 2^(#cycle components), plus the
/// number of code-weight classes.
MatchingCount count_matchings(const ComponentDecomposition& dec);

/// Lazy stream over all perfect matchings, paired with their codes, in
/// lexicographic code order. Constructing it throws NoPerfectMatchingError
/// when no perfect matching exists.
class MatchingEnumerator {
public:
    MatchingEnumerator(const ProjectorGraph& g, const ComponentDecomposition& dec);

    /// False when the stream is exhausted.
    bool next(ComponentCode& code_out, Matching& matching_out);

private:
    const ProjectorGraph& g_;
    const ComponentDecomposition& dec_;
    ComponentCode code_;
    bool done_ = false;
    bool first_ = true;
};

/// Collects at most `cap` items from the stream.
std::vector<std::pair<ComponentCode, Matching>> enumerate_matchings(
    const ProjectorGraph& g, const ComponentDecomposition& dec, std::uint64_t cap);

} // namespace hcproj
