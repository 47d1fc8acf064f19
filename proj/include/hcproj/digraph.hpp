#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hcproj {

/// Simple digraph: no self loops, no duplicate arcs. Vertices are dense
/// 0-based ids; arc j is always arcs()[j], so arc ids are stable.
class Digraph {
public:
    Digraph() = default;

    /// Validates simplicity and id ranges; throws std::invalid_argument.
    Digraph(int n, std::vector<std::pair<int, int>> arcs);

    int n() const { return n_; }
    int m() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int tail(int arc) const { return arcs_[arc].first; }
    int head(int arc) const { return arcs_[arc].second; }

    /// Arc ids leaving / entering a vertex, ascending.
    const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }
    const std::vector<int>& in_arcs(int v) const { return in_arcs_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_arcs_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_arcs_[v].size()); }

    /// Arc id of (tail, head), or -1 if absent.
    int arc_id(int tail, int head) const;
    bool has_arc(int tail, int head) const { return arc_id(tail, head) >= 0; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_arcs_;
    std::vector<std::vector<int>> in_arcs_;
    std::unordered_map<std::uint64_t, int> arc_index_;
};

/// Text format: header "n m", then m lines "tail head". Lines starting with
/// '#' and blank lines are skipped; trailing whitespace is ignored.
/// Self loops and duplicate arcs are reported with their line number.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph load_digraph_file(const std::string& path);

/// Canonical serialization in the text format (newline-terminated).
std::string format_digraph(const Digraph& d);

/// One-line serialization "n m;t h;t h;..." used in audit witnesses.
std::string format_digraph_inline(const Digraph& d);
Digraph parse_digraph_inline(const std::string& text);

enum class DegreeClassKind { Gamma, BoundTwo, Outside };

const char* degree_class_name(DegreeClassKind kind);

struct DegreeClass {
    DegreeClassKind kind;
    std::vector<int> out_degree;
    std::vector<int> in_degree;
};

/// True iff every ordered vertex pair is joined by a directed path
/// (vacuously true for n = 1).
bool is_strongly_connected(const Digraph& d);

/// Gamma: strongly connected with 1 <= d+, d- <= 2 everywhere.
/// BoundTwo: d+, d- <= 2 everywhere. Outside: anything else.
DegreeClass classify(const Digraph& d);

/// Shared vertex v with head(a) = tail(b) = v; empty when the arcs do not
/// chain, and always empty for an arc against itself.
std::optional<int> forward_relation(const Digraph& d, int arc_a, int arc_b);

/// True iff the arc set forms one directed simple cycle: every touched vertex
/// has exactly one in- and one out-arc inside L, and L is a single closed walk.
bool is_simple_cycle(const Digraph& d, const std::vector<int>& arc_set);

/// True iff the arc set is a Hamiltonian cycle of d: |L| = n >= 2, in- and
/// out-degree exactly 1 at every vertex, and (V, L) strongly connected.
bool is_hamiltonian_subgraph(const Digraph& d, const std::vector<int>& arc_set);

} // namespace hcproj
