#pragma once

// Graph model shared by the recognizers and the reductions: dense integer
// vertex ids, optional A/B side labels (A = vertical segments, B = horizontal
// segments), optional per-vertex names, adjacency kept both as an edge list
// and as per-vertex bitset rows.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stickkit {

enum class Side : uint8_t { A = 0, B = 1 };

inline char side_char(Side s) { return s == Side::A ? 'A' : 'B'; }

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;

    explicit Graph(int n, bool bipartite_labels = false) : n_(n), words_((n + 63) / 64) {
        adj_.assign(static_cast<size_t>(n_) * words_, 0);
        if (bipartite_labels) sides_.emplace(n_, Side::A);
    }

    int size() const { return n_; }
    bool has_sides() const { return sides_.has_value(); }

    Side side(int v) const { return (*sides_)[v]; }
    void set_side(int v, Side s) { (*sides_)[v] = s; }

    const std::string& name(int v) const {
        static const std::string empty;
        if (v < static_cast<int>(names_.size()) && !names_[v].empty()) return names_[v];
        return empty;
    }
    void set_name(int v, std::string s) {
        if (static_cast<int>(names_.size()) < n_) names_.resize(n_);
        names_[v] = std::move(s);
    }
    bool has_names() const { return !names_.empty(); }

    // Label for diagnostics: the name when present, else the id.
    std::string label(int v) const {
        const std::string& s = name(v);
        return s.empty() ? std::to_string(v) : s;
    }

    bool has_edge(int u, int v) const {
        return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex id");
        if (has_edge(u, v)) return;
        adj_[static_cast<size_t>(u) * words_ + (v >> 6)] |= (uint64_t{1} << (v & 63));
        adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= (uint64_t{1} << (u & 63));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = adj_[static_cast<size_t>(v) * words_ + w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += __builtin_popcountll(adj_[static_cast<size_t>(v) * words_ + w]);
        return d;
    }

    const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
    int words() const { return words_; }

    // Every edge must join an A-vertex to a B-vertex when sides are present.
    void check_sides_consistent() const {
        if (!has_sides()) return;
        for (auto [u, v] : edges_)
            if (side(u) == side(v))
                throw std::invalid_argument("same-side edge " + label(u) + "-" + label(v));
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<std::vector<Side>> sides_;
    std::vector<std::string> names_;
};

// -------- bipartition check --------

struct BipartitionResult {
    bool bipartite = false;
    std::vector<Side> coloring;   // valid when bipartite
    std::vector<int> odd_cycle;   // vertex list of an odd cycle otherwise
};

// Deterministic 2-coloring: components are explored from their lowest vertex
// id, which receives color A. On failure returns an odd cycle extracted from
// the BFS tree.
inline BipartitionResult validate_bipartition(const Graph& g) {
    const int n = g.size();
    BipartitionResult r;
    std::vector<int> color(n, -1), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // walk both endpoints up to their common ancestor
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    size_t k = 0;
                    while (k + 1 < pu.size() && k + 1 < pv.size() && pu[k + 1] == pv[k + 1]) ++k;
                    r.bipartite = false;
                    for (size_t i = k; i < pu.size(); ++i) r.odd_cycle.push_back(pu[i]);
                    for (size_t i = pv.size(); i-- > k + 1;) r.odd_cycle.push_back(pv[i]);
                    return r;
                }
            }
        }
    }
    r.bipartite = true;
    r.coloring.resize(n);
    for (int v = 0; v < n; ++v) r.coloring[v] = color[v] == 0 ? Side::A : Side::B;
    return r;
}

inline bool is_connected(const Graph& g) {
    const int n = g.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

// -------- text format --------
//
//   # comment
//   graph <n> bipartite|plain
//   name <id> <string>
//   side <id> A|B        (required for every vertex when bipartite)
//   edge <id> <id>

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false, bipartite = false;
    Graph g;
    std::vector<char> side_seen;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "graph") {
            if (have_header) fail("duplicate header");
            int n;
            std::string kind;
            if (!(ls >> n >> kind) || n < 0) fail("malformed header");
            if (kind == "bipartite") bipartite = true;
            else if (kind != "plain") fail("malformed header: expected bipartite|plain");
            g = Graph(n, bipartite);
            side_seen.assign(n, 0);
            have_header = true;
        } else if (!have_header) {
            fail("missing graph header");
        } else if (kw == "name") {
            int v;
            std::string nm;
            if (!(ls >> v >> nm) || v < 0 || v >= g.size()) fail("bad name line");
            g.set_name(v, nm);
        } else if (kw == "side") {
            int v;
            std::string s;
            if (!(ls >> v >> s) || v < 0 || v >= g.size()) fail("bad side line");
            if (!bipartite) fail("side line in plain graph");
            if (s != "A" && s != "B") fail("side must be A or B");
            g.set_side(v, s == "A" ? Side::A : Side::B);
            side_seen[v] = 1;
        } else if (kw == "edge") {
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge line");
            if (u < 0 || u >= g.size() || v < 0 || v >= g.size()) fail("unknown vertex in edge");
            if (u == v) fail("self-loop");
            if (g.has_edge(u, v)) fail("duplicate edge");
            if (bipartite && g.side(u) == g.side(v)) fail("same-side edge");
            g.add_edge(u, v);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw ParseError("line 0: missing graph header");
    if (bipartite)
        for (int v = 0; v < g.size(); ++v)
            if (!side_seen[v]) throw ParseError("missing side for vertex " + std::to_string(v));
    return g;
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.size() << (g.has_sides() ? " bipartite" : " plain") << "\n";
    for (int v = 0; v < g.size(); ++v)
        if (!g.name(v).empty()) out << "name " << v << " " << g.name(v) << "\n";
    if (g.has_sides())
        for (int v = 0; v < g.size(); ++v)
            out << "side " << v << " " << side_char(g.side(v)) << "\n";
    for (auto [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
    return out.str();
}

}  // namespace stickkit
