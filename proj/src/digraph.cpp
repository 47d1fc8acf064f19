#include "hcproj/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hcproj/errors.hpp"

namespace hcproj {

namespace {

std::uint64_t arc_key(int tail, int head) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
           static_cast<std::uint32_t>(head);
}

} // namespace

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    out_arcs_.resize(n_);
    in_arcs_.resize(n_);
    arc_index_.reserve(arcs_.size() * 2);
    for (int j = 0; j < static_cast<int>(arcs_.size()); ++j) {
        auto [t, h] = arcs_[j];
        if (t < 0 || t >= n_ || h < 0 || h >= n_)
            throw std::invalid_argument("arc " + std::to_string(j) + " has a vertex id out of range");
        if (t == h)
            throw std::invalid_argument("arc " + std::to_string(j) + " is a self loop");
        if (!arc_index_.emplace(arc_key(t, h), j).second)
            throw std::invalid_argument("arc " + std::to_string(j) + " duplicates an earlier arc");
        out_arcs_[t].push_back(j);
        in_arcs_[h].push_back(j);
    }
}

int Digraph::arc_id(int tail, int head) const {
    auto it = arc_index_.find(arc_key(tail, head));
    return it == arc_index_.end() ? -1 : it->second;
}

namespace {

// Strips comments/blank lines; returns trimmed payload lines with line numbers.
std::vector<std::pair<int, std::string>> payload_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos)
            continue;
        if (line[start] == '#')
            continue;
        out.emplace_back(lineno, line.substr(start));
    }
    return out;
}

int parse_int_field(std::istringstream& iss, int lineno, const char* what) {
    long long v;
    if (!(iss >> v))
        throw ParseError(lineno, std::string("expected ") + what);
    if (v < 0 || v > 1'000'000'000)
        throw ParseError(lineno, std::string(what) + " out of range");
    return static_cast<int>(v);
}

void expect_end(std::istringstream& iss, int lineno) {
    std::string rest;
    if (iss >> rest)
        throw ParseError(lineno, "unexpected trailing field '" + rest + "'");
}

} // namespace

Digraph parse_digraph(std::istream& in) {
    auto lines = payload_lines(in);
    if (lines.empty())
        throw ParseError(1, "missing header line 'n m'");
    std::istringstream header(lines[0].second);
    int n = parse_int_field(header, lines[0].first, "vertex count");
    int m = parse_int_field(header, lines[0].first, "arc count");
    expect_end(header, lines[0].first);
    if (static_cast<int>(lines.size()) - 1 != m) {
        int where = lines.size() > 1 ? lines.back().first : lines[0].first;
        throw ParseError(where, "expected " + std::to_string(m) + " arc lines, found " +
                                    std::to_string(lines.size() - 1));
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(m);
    // Track duplicates here so the error can name the offending line.
    std::vector<std::pair<int, int>> seen;
    for (int i = 1; i <= m; ++i) {
        auto [lineno, text] = lines[i];
        std::istringstream iss(text);
        int t = parse_int_field(iss, lineno, "tail");
        int h = parse_int_field(iss, lineno, "head");
        expect_end(iss, lineno);
        if (t >= n || h >= n)
            throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (t == h)
            throw ParseError(lineno, "self loop " + std::to_string(t) + " -> " + std::to_string(h));
        if (std::find(seen.begin(), seen.end(), std::make_pair(t, h)) != seen.end())
            throw ParseError(lineno, "duplicate arc " + std::to_string(t) + " -> " + std::to_string(h));
        seen.emplace_back(t, h);
        arcs.emplace_back(t, h);
    }
    return Digraph(n, std::move(arcs));
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Digraph load_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_digraph(in);
}

std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.n() << ' ' << d.m() << '\n';
    for (auto [t, h] : d.arcs())
        out << t << ' ' << h << '\n';
    return out.str();
}

std::string format_digraph_inline(const Digraph& d) {
    std::ostringstream out;
    out << d.n() << ' ' << d.m();
    for (auto [t, h] : d.arcs())
        out << ';' << t << ' ' << h;
    return out.str();
}

Digraph parse_digraph_inline(const std::string& text) {
    std::string unrolled = text;
    std::replace(unrolled.begin(), unrolled.end(), ';', '\n');
    return parse_digraph(unrolled);
}

const char* degree_class_name(DegreeClassKind kind) {
    switch (kind) {
    case DegreeClassKind::Gamma: return "Gamma";
    case DegreeClassKind::BoundTwo: return "BoundTwo";
    case DegreeClassKind::Outside: return "Outside";
    }
    return "?";
}

namespace {

// Reach counts over arbitrary arc subsets, following tails or heads.
int reachable_count(const Digraph& d, const std::vector<int>& arc_set, int start, bool forward,
                    std::vector<char>& visited) {
    std::vector<std::vector<int>> adj(d.n());
    for (int j : arc_set) {
        if (forward)
            adj[d.tail(j)].push_back(d.head(j));
        else
            adj[d.head(j)].push_back(d.tail(j));
    }
    std::fill(visited.begin(), visited.end(), 0);
    std::vector<int> stack{start};
    visited[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count;
}

} // namespace

bool is_strongly_connected(const Digraph& d) {
    if (d.n() <= 1)
        return true;
    std::vector<int> all(d.m());
    for (int j = 0; j < d.m(); ++j)
        all[j] = j;
    std::vector<char> visited(d.n());
    if (reachable_count(d, all, 0, true, visited) != d.n())
        return false;
    return reachable_count(d, all, 0, false, visited) == d.n();
}

DegreeClass classify(const Digraph& d) {
    DegreeClass result;
    result.out_degree.resize(d.n());
    result.in_degree.resize(d.n());
    bool bound_two = true;
    bool min_one = d.n() > 0;
    for (int v = 0; v < d.n(); ++v) {
        result.out_degree[v] = d.out_degree(v);
        result.in_degree[v] = d.in_degree(v);
        if (result.out_degree[v] > 2 || result.in_degree[v] > 2)
            bound_two = false;
        if (result.out_degree[v] < 1 || result.in_degree[v] < 1)
            min_one = false;
    }
    if (bound_two && min_one && is_strongly_connected(d))
        result.kind = DegreeClassKind::Gamma;
    else if (bound_two)
        result.kind = DegreeClassKind::BoundTwo;
    else
        result.kind = DegreeClassKind::Outside;
    return result;
}

std::optional<int> forward_relation(const Digraph& d, int arc_a, int arc_b) {
    if (arc_a == arc_b)
        return std::nullopt;
    if (d.head(arc_a) == d.tail(arc_b))
        return d.head(arc_a);
    return std::nullopt;
}

bool is_simple_cycle(const Digraph& d, const std::vector<int>& arc_set) {
    if (arc_set.empty())
        return false;
    std::vector<int> out_count(d.n(), 0), in_count(d.n(), 0);
    for (int j : arc_set) {
        ++out_count[d.tail(j)];
        ++in_count[d.head(j)];
    }
    std::vector<int> touched;
    for (int v = 0; v < d.n(); ++v) {
        if (out_count[v] || in_count[v]) {
            if (out_count[v] != 1 || in_count[v] != 1)
                return false;
            touched.push_back(v);
        }
    }
    // One in/out arc per touched vertex: a closed walk exists iff following
    // successors from any touched vertex returns after |touched| steps.
    std::vector<int> succ(d.n(), -1);
    for (int j : arc_set)
        succ[d.tail(j)] = d.head(j);
    int start = touched.front();
    int v = start;
    std::size_t steps = 0;
    do {
        v = succ[v];
        ++steps;
    } while (v != start && steps <= touched.size());
    return v == start && steps == touched.size() && steps == arc_set.size();
}

bool is_hamiltonian_subgraph(const Digraph& d, const std::vector<int>& arc_set) {
    if (d.n() < 2 || static_cast<int>(arc_set.size()) != d.n())
        return false;
    // A simple cycle with n arcs touches n distinct vertices, i.e. all of them.
    return is_simple_cycle(d, arc_set);
}

} // namespace hcproj
