#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcproj/digraph.hpp"

namespace hcproj {

// Size guards for the exhaustive procedures.
inline constexpr int kBruteForceMaxN = 24;
inline constexpr int kEnumerationMaxN = 16;

/// Ground-truth Hamiltonicity by pure backtracking over out-neighbors in
/// ascending order, so the cycle found is the lexicographically first vertex
/// sequence from vertex 0. Shares nothing with the matching pipeline.
/// Throws TooLargeError above the guard.
std::optional<std::vector<int>> brute_force_hamiltonian(const Digraph& d);

/// All spanning arc subsets with in- and out-degree exactly 1 everywhere,
/// by assigning one out-arc per vertex with in-degree pruning.
/// Throws TooLargeError above the guard.
std::vector<std::vector<int>> enumerate_cycle_covers(const Digraph& d);

/// The cycle covers that form a single weak component, sorted.
std::vector<std::vector<int>> enumerate_hamiltonian_cycles(const Digraph& d);

struct InstanceSpec {
    int n = 0;
    DegreeClassKind cls = DegreeClassKind::Gamma;
    bool plant_hc = true;
    std::uint64_t seed = 0;
    double density = 0.5; // extra arcs beyond the base, as a fraction of n
};

struct GeneratedInstance {
    Digraph digraph;
    std::optional<std::vector<int>> planted; // arc ids of the planted cycle
};

/// Deterministic per spec. Planting lays down a random n-cycle and then adds
/// extra arcs under the class degree caps; non-planted generation samples
/// arcs directly under the caps and, for Gamma, retries until the classifier
/// agrees. Throws UnsatisfiableError when retries run out.
GeneratedInstance generate(const InstanceSpec& spec);

/// Two disjoint directed cycles of the given lengths plus one arc from the
/// first to the second: every vertex keeps an in- and an out-arc, yet the
/// digraph is not strongly connected.
Digraph gen_two_cycles_bridge(int c1, int c2);

} // namespace hcproj
