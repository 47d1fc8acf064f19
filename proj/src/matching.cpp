#include "hcproj/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "hcproj/errors.hpp"

namespace hcproj {

Matching Matching::from_edges(const ProjectorGraph& g, std::vector<int> edge_ids) {
    Matching m;
    m.mate.assign(2 * g.n(), -1);
    std::sort(edge_ids.begin(), edge_ids.end());
    for (int e : edge_ids) {
        if (e < 0 || e >= g.m())
            throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
        int xg = g.x_global(g.x_of(e));
        int yg = g.y_global(g.y_of(e));
        if (m.mate[xg] != -1 || m.mate[yg] != -1)
            throw std::invalid_argument("edges share a vertex: not a matching");
        m.mate[xg] = e;
        m.mate[yg] = e;
    }
    m.edges = std::move(edge_ids);
    return m;
}

int Matching::exposed_vertex() const {
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] == -1)
            return v;
    return -1;
}

bool Matching::contains(int edge) const {
    return std::binary_search(edges.begin(), edges.end(), edge);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Layered BFS/DFS maximum matching. mate_x / mate_y hold edge ids.
struct HopcroftKarpState {
    const ProjectorGraph& g;
    std::vector<int> mate_x, mate_y; // side-local vertex -> edge id or -1
    std::vector<int> dist;

    explicit HopcroftKarpState(const ProjectorGraph& graph)
        : g(graph), mate_x(graph.n(), -1), mate_y(graph.n(), -1), dist(graph.n()) {}

    bool bfs() {
        std::queue<int> q;
        int free_dist = kInf;
        for (int x = 0; x < g.n(); ++x) {
            if (mate_x[x] == -1) {
                dist[x] = 0;
                q.push(x);
            } else {
                dist[x] = kInf;
            }
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (dist[x] >= free_dist)
                continue;
            for (int e : g.adj_x(x)) {
                int y = g.y_of(e);
                int nx = mate_y[y] == -1 ? -1 : g.x_of(mate_y[y]);
                if (nx == -1) {
                    free_dist = std::min(free_dist, dist[x] + 1);
                } else if (dist[nx] == kInf) {
                    dist[nx] = dist[x] + 1;
                    q.push(nx);
                }
            }
        }
        return free_dist != kInf;
    }

    bool dfs(int x) {
        for (int e : g.adj_x(x)) {
            int y = g.y_of(e);
            int nx = mate_y[y] == -1 ? -1 : g.x_of(mate_y[y]);
            if (nx == -1 || (dist[nx] == dist[x] + 1 && dfs(nx))) {
                mate_x[x] = e;
                mate_y[y] = e;
                return true;
            }
        }
        dist[x] = kInf;
        return false;
    }

    void run() {
        while (bfs())
            for (int x = 0; x < g.n(); ++x)
                if (mate_x[x] == -1)
                    dfs(x);
    }
};

} // namespace

Matching hopcroft_karp(const ProjectorGraph& g) {
    HopcroftKarpState st(g);
    st.run();
    std::vector<int> edges;
    for (int x = 0; x < g.n(); ++x)
        if (st.mate_x[x] != -1)
            edges.push_back(st.mate_x[x]);
    return Matching::from_edges(g, std::move(edges));
}

std::optional<Matching> perfect_matching(const ProjectorGraph& g) {
    Matching m = hopcroft_karp(g);
    if (m.is_perfect(g))
        return m;
    return std::nullopt;
}

std::optional<HallWitness> hall_violation(const ProjectorGraph& g) {
    Matching m = hopcroft_karp(g);
    if (m.is_perfect(g))
        return std::nullopt;
    // Alternating reachability from the free Y vertices: unmatched edge into
    // X, matched edge back into Y. S = reachable Y, N(S) = reachable X, and
    // |N(S)| = |S| - #free Y.
    std::vector<char> seen_y(g.n(), 0), seen_x(g.n(), 0);
    std::queue<int> q;
    for (int y = 0; y < g.n(); ++y) {
        if (m.mate[g.y_global(y)] == -1) {
            seen_y[y] = 1;
            q.push(y);
        }
    }
    while (!q.empty()) {
        int y = q.front();
        q.pop();
        for (int e : g.adj_y(y)) {
            int x = g.x_of(e);
            if (seen_x[x])
                continue;
            seen_x[x] = 1;
            int back = m.mate[g.x_global(x)];
            if (back != -1 && !seen_y[g.y_of(back)]) {
                seen_y[g.y_of(back)] = 1;
                q.push(g.y_of(back));
            }
        }
    }
    HallWitness w;
    w.y_side = true;
    for (int y = 0; y < g.n(); ++y)
        if (seen_y[y])
            w.set.push_back(y);
    for (int x = 0; x < g.n(); ++x)
        if (seen_x[x])
            w.neighbors.push_back(x);
    return w;
}

std::vector<int> lift(const ProjectorGraph&, const Matching& m) {
    return m.edges;
}

std::string ComponentCode::str() const {
    if (bits.empty())
        return "-";
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

ComponentCode code_of(const ComponentDecomposition& dec, const Matching& m) {
    int exposed = m.exposed_vertex();
    if (exposed != -1)
        throw NotPerfectError(exposed);
    ComponentCode code;
    code.bits.reserve(dec.cycle_components.size());
    for (int ci : dec.cycle_components) {
        const Component& comp = dec.components[ci];
        // The matching restricted to a cycle is one of the two alternating
        // classes; testing a single edge identifies which.
        auto [a, b] = two_matchings_of_cycle(comp);
        code.bits.push_back(m.contains(a.front()) ? 0 : 1);
    }
    return code;
}

Matching matching_from_code(const ProjectorGraph& g, const ComponentDecomposition& dec,
                            const ComponentCode& code) {
    if (code.bits.size() != dec.cycle_components.size())
        throw std::invalid_argument("code has " + std::to_string(code.bits.size()) +
                                    " bits, expected " +
                                    std::to_string(dec.cycle_components.size()));
    std::vector<int> edges;
    std::size_t cycle_index = 0;
    for (const Component& comp : dec.components) {
        if (comp.is_cycle) {
            auto [a, b] = two_matchings_of_cycle(comp);
            const auto& cls = code.bits[cycle_index++] ? b : a;
            edges.insert(edges.end(), cls.begin(), cls.end());
        } else {
            if (comp.vertices.size() % 2 != 0)
                throw NoPerfectMatchingError(comp.vertices);
            // A path with both ends exposed forces alternate edges starting
            // at the first one.
            for (std::size_t i = 0; i < comp.edges.size(); i += 2)
                edges.push_back(comp.edges[i]);
        }
    }
    return Matching::from_edges(g, std::move(edges));
}

Matching flip(const ProjectorGraph& g, const ComponentDecomposition& dec, const Matching& m,
              int cycle_component_index) {
    const Component& comp = dec.components.at(cycle_component_index);
    if (!comp.is_cycle)
        throw std::invalid_argument("component " + std::to_string(cycle_component_index) +
                                    " is not a cycle");
    int exposed = m.exposed_vertex();
    if (exposed != -1)
        throw NotPerfectError(exposed);
    auto [a, b] = two_matchings_of_cycle(comp);
    bool has_a = m.contains(a.front());
    const auto& drop = has_a ? a : b;
    const auto& add = has_a ? b : a;
    std::vector<int> edges;
    edges.reserve(m.edges.size());
    for (int e : m.edges)
        if (!std::binary_search(drop.begin(), drop.end(), e))
            edges.push_back(e);
    edges.insert(edges.end(), add.begin(), add.end());
    return Matching::from_edges(g, std::move(edges));
}

MatchingCount count_matchings(const ComponentDecomposition& dec) {
    MatchingCount out;
    out.cycle_components = dec.cycle_components.size();
    for (const Component& comp : dec.components) {
        if (!comp.is_cycle && comp.vertices.size() % 2 != 0)
            return out; // labeled = 0, no classes
    }
    out.weight_classes = out.cycle_components + 1;
    if (out.cycle_components >= 64) {
        out.labeled = std::numeric_limits<unsigned long long>::max();
        out.overflowed = true;
    } else {
        out.labeled = 1ull << out.cycle_components;
    }
    return out;
}

MatchingEnumerator::MatchingEnumerator(const ProjectorGraph& g,
                                       const ComponentDecomposition& dec)
    : g_(g), dec_(dec) {
    code_.bits.assign(dec.cycle_components.size(), 0);
    // Construction fails fast when no perfect matching exists at all.
    matching_from_code(g_, dec_, code_);
}

bool MatchingEnumerator::next(ComponentCode& code_out, Matching& matching_out) {
    if (done_)
        return false;
    if (!first_) {
        // Lexicographic successor: increment with the last bit least
        // significant.
        int i = static_cast<int>(code_.bits.size()) - 1;
        while (i >= 0 && code_.bits[i] == 1) {
            code_.bits[i] = 0;
            --i;
        }
        if (i < 0) {
            done_ = true;
            return false;
        }
        code_.bits[i] = 1;
    }
    first_ = false;
    code_out = code_;
    matching_out = matching_from_code(g_, dec_, code_);
    return true;
}

std::vector<std::pair<ComponentCode, Matching>> enumerate_matchings(
    const ProjectorGraph& g, const ComponentDecomposition& dec, std::uint64_t cap) {
    MatchingEnumerator en(g, dec);
    std::vector<std::pair<ComponentCode, Matching>> out;
    ComponentCode code;
    Matching m;
    while (out.size() < cap && en.next(code, m))
        out.emplace_back(code, m);
    return out;
}

} // namespace hcproj
