#pragma once

#include <utility>
#include <vector>

#include "hcproj/digraph.hpp"

namespace hcproj {

/// Balanced bipartite graph on out-copies X (global ids 0..n-1) and in-copies
/// Y (global ids n..2n-1). Edge j joins x_tail(arc j) to y_head(arc j), so
/// edge ids and arc ids coincide. Its incidence matrix stacks the
/// nonnegative split part over the negated nonpositive part.
class ProjectorGraph {
public:
    ProjectorGraph() = default;

    /// Direct construction from side size and (x, y) side-local endpoints.
    ProjectorGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int x_of(int edge) const { return edges_[edge].first; }
    int y_of(int edge) const { return edges_[edge].second; }

    int x_global(int xi) const { return xi; }
    int y_global(int yi) const { return n_ + yi; }

    /// Edge ids at a side-local vertex, ascending.
    const std::vector<int>& adj_x(int xi) const { return adj_x_[xi]; }
    const std::vector<int>& adj_y(int yi) const { return adj_y_[yi]; }

    /// Edge ids at a global vertex id (X block then Y block).
    const std::vector<int>& adj(int global) const {
        return global < n_ ? adj_x_[global] : adj_y_[global - n_];
    }
    int degree(int global) const { return static_cast<int>(adj(global).size()); }

    /// Endpoint of `edge` opposite to global vertex id `global`.
    int other_end(int edge, int global) const {
        int xg = x_global(edges_[edge].first);
        return xg == global ? y_global(edges_[edge].second) : xg;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_x_;
    std::vector<std::vector<int>> adj_y_;
};

/// Projector graph of a digraph: one edge per arc. Accepts any degree class;
/// degree bounds on the sides mirror the digraph's out/in degrees.
ProjectorGraph project(const Digraph& d);

/// One connected component of a max-degree-2 bipartite graph.
/// Path: vertices in walk order from the endpoint with the smaller global id
/// (a single isolated vertex is a path with no edges). Cycle: closed walk from
/// the smallest vertex id toward its smaller incident edge id; edges[i] joins
/// vertices[i] and vertices[i+1 mod size]. Cycles have even length.
struct Component {
    bool is_cycle = false;
    std::vector<int> vertices; // global ids, walk order
    std::vector<int> edges;    // walk order

    int min_edge_position() const;
};

struct ComponentDecomposition {
    std::vector<Component> components;  // ordered by smallest contained vertex id
    std::vector<int> vertex_component;  // global vertex id -> component index
    std::vector<int> edge_component;    // edge id -> component index
    std::vector<int> cycle_components;  // indices of cycle components, ascending
};

/// Exact partition into paths and even cycles.
/// Throws DegreeTooHighError if any vertex has degree > 2.
ComponentDecomposition decompose(const ProjectorGraph& g);

/// The two alternating edge classes of a cycle component: disjoint perfect
/// matchings of the component whose union is its edge set. First is the
/// canonical class, the one containing the component's lowest edge id.
std::pair<std::vector<int>, std::vector<int>> two_matchings_of_cycle(const Component& comp);

} // namespace hcproj
