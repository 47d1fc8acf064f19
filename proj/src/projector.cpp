#include "hcproj/projector.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcproj/errors.hpp"

namespace hcproj {

ProjectorGraph::ProjectorGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), adj_x_(n), adj_y_(n) {
    for (int j = 0; j < static_cast<int>(edges_.size()); ++j) {
        auto [x, y] = edges_[j];
        if (x < 0 || x >= n_ || y < 0 || y >= n_)
            throw std::invalid_argument("edge " + std::to_string(j) + " endpoint out of range");
        adj_x_[x].push_back(j);
        adj_y_[y].push_back(j);
    }
}

ProjectorGraph project(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(d.m());
    for (int j = 0; j < d.m(); ++j)
        edges.emplace_back(d.tail(j), d.head(j));
    return ProjectorGraph(d.n(), std::move(edges));
}

int Component::min_edge_position() const {
    int best = 0;
    for (int i = 1; i < static_cast<int>(edges.size()); ++i)
        if (edges[i] < edges[best])
            best = i;
    return best;
}

ComponentDecomposition decompose(const ProjectorGraph& g) {
    const int total = 2 * g.n();
    for (int v = 0; v < total; ++v)
        if (g.degree(v) > 2)
            throw DegreeTooHighError(v, g.degree(v));

    ComponentDecomposition dec;
    dec.vertex_component.assign(total, -1);
    dec.edge_component.assign(g.m(), -1);

    std::vector<char> seen(total, 0);
    // One step along the walk, never back over prev_edge. Returns {-1, -1}
    // at a dead end.
    auto step = [&g](int v, int prev_edge) -> std::pair<int, int> {
        for (int e : g.adj(v))
            if (e != prev_edge)
                return {e, g.other_end(e, v)};
        return {-1, -1};
    };

    // Scanning vertices in ascending global id yields components already
    // ordered by their smallest contained vertex.
    for (int start = 0; start < total; ++start) {
        if (seen[start])
            continue;

        // Probe one direction: either we fall off an endpoint (path) or we
        // come back to start (cycle).
        bool is_cycle = false;
        int endpoint = start;
        for (int v = start, prev = -1;;) {
            auto [e, w] = step(v, prev);
            if (e < 0) {
                endpoint = v;
                break;
            }
            if (w == start) {
                is_cycle = true;
                break;
            }
            v = w;
            prev = e;
        }

        Component comp;
        comp.is_cycle = is_cycle;
        if (is_cycle) {
            // start is the smallest vertex of the component; head toward the
            // smaller incident edge for a canonical rotation.
            const auto& adj = g.adj(start);
            int e = std::min(adj[0], adj[1]);
            int v = start;
            do {
                comp.vertices.push_back(v);
                comp.edges.push_back(e);
                seen[v] = 1;
                int w = g.other_end(e, v);
                const auto& wadj = g.adj(w);
                e = (wadj[0] == e) ? wadj[1] : wadj[0];
                v = w;
            } while (v != start);
        } else {
            // Walk the whole path from the endpoint we found, then orient it
            // from its smaller-id end.
            comp.vertices.push_back(endpoint);
            for (int v = endpoint, prev = -1;;) {
                auto [e, w] = step(v, prev);
                if (e < 0)
                    break;
                comp.edges.push_back(e);
                comp.vertices.push_back(w);
                v = w;
                prev = e;
            }
            if (comp.vertices.back() < comp.vertices.front()) {
                std::reverse(comp.vertices.begin(), comp.vertices.end());
                std::reverse(comp.edges.begin(), comp.edges.end());
            }
            for (int u : comp.vertices)
                seen[u] = 1;
        }

        int index = static_cast<int>(dec.components.size());
        for (int u : comp.vertices)
            dec.vertex_component[u] = index;
        for (int e : comp.edges)
            dec.edge_component[e] = index;
        if (comp.is_cycle)
            dec.cycle_components.push_back(index);
        dec.components.push_back(std::move(comp));
    }
    return dec;
}

std::pair<std::vector<int>, std::vector<int>> two_matchings_of_cycle(const Component& comp) {
    if (!comp.is_cycle)
        throw std::invalid_argument("component is not a cycle");
    const int len = static_cast<int>(comp.edges.size());
    const int anchor = comp.min_edge_position();
    std::vector<int> a, b;
    for (int i = 0; i < len; ++i) {
        if (((i - anchor) % 2 + 2) % 2 == 0)
            a.push_back(comp.edges[i]);
        else
            b.push_back(comp.edges[i]);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {std::move(a), std::move(b)};
}

} // namespace hcproj
