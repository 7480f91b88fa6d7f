#pragma once

// Independent verification path: enumerate ALL vertex orders and, per order,
// ALL discrete reach assignments, testing exact edge realization through the
// geometric intersection predicate. Shares no feasibility reasoning with
// check_order (no extremal-reach shortcut); only the exact segment crossing
// test is common, which is the definition both sides must agree on.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "search.hpp"

namespace stickkit {

struct OracleLimits {
    int stick = 7;
    int hook = 6;
};

namespace detail {

inline VertexGeometry make_vg(int pos, int rho, int lam, bool horizontal, bool vertical) {
    VertexGeometry vg;
    vg.x = 4 * pos;
    vg.y = -4 * pos;
    vg.has_h = horizontal;
    vg.has_v = vertical;
    vg.htip = horizontal ? 4 * rho + 1 : vg.x;
    vg.vtip = vertical ? -4 * lam + 1 : vg.y;
    return vg;
}

// Backtracks over reach choices for the vertices in position order, checking
// each new segment against all previously drawn ones.
inline bool reaches_realizable(const Graph& g, const std::vector<int>& order, Model model,
                               std::vector<VertexGeometry>& drawn, size_t depth) {
    const int n = g.size();
    if (depth == order.size()) return true;
    int v = order[depth];
    int pos = static_cast<int>(depth);
    bool horizontal = model == Model::Hook || g.side(v) == Side::B;
    bool vertical = model == Model::Hook || g.side(v) == Side::A;
    int rho_lo = pos, rho_hi = horizontal ? n - 1 : pos;
    int lam_lo = vertical ? 0 : pos, lam_hi = pos;
    for (int rho = rho_lo; rho <= rho_hi; ++rho) {
        for (int lam = lam_lo; lam <= lam_hi; ++lam) {
            VertexGeometry vg = make_vg(pos, rho, lam, horizontal, vertical);
            bool ok = true;
            for (size_t i = 0; i < depth && ok; ++i) {
                bool touching = false;
                bool cross = pair_intersects(drawn[i], vg, touching);
                if (cross != g.has_edge(order[i], v)) ok = false;
            }
            if (!ok) continue;
            drawn[depth] = vg;
            if (reaches_realizable(g, order, model, drawn, depth + 1)) return true;
        }
    }
    return false;
}

}  // namespace detail

inline RecognitionOutcome brute_force_oracle(const Graph& g_in, GraphClass cls,
                                             OracleLimits limits = {}) {
    Graph g = prepare_for_class(g_in, cls);
    Model model = class_model(cls);
    int limit = model == Model::Stick ? limits.stick : limits.hook;
    if (g.size() > limit) throw std::invalid_argument("graph above oracle size limit");

    RecognitionOutcome out;
    const int n = g.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<VertexGeometry> drawn(n);
    do {
        ++out.stats.nodes;
        if (detail::reaches_realizable(g, order, model, drawn, 0)) {
            out.verdict = Verdict::Yes;
            out.witness_order = VertexOrder{order};
            Geometry geom;
            geom.model = model;
            geom.v.assign(drawn.begin(), drawn.end());
            // re-index geometry by vertex id
            Geometry byv;
            byv.model = model;
            byv.v.resize(n);
            for (int p = 0; p < n; ++p) byv.v[order[p]] = drawn[p];
            out.witness_geometry = byv;
            if (!verify_geometry(byv, g).match)
                throw std::logic_error("oracle produced a non-realizing geometry");
            return out;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    out.verdict = Verdict::No;
    return out;
}

// -------- small-graph sweeps --------

// Canonical edge-mask of a graph with n <= 8 vertices: the minimum, over all
// vertex permutations, of the bitmask of the relabeled edge set.
inline uint64_t canonical_form(const Graph& g) {
    const int n = g.size();
    if (n > 8) throw std::invalid_argument("canonical_form limited to n <= 8");
    auto pair_bit = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n + j;  // sparse but fine for n <= 8
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t mask = 0;
        for (auto [u, v] : g.edges()) mask |= uint64_t{1} << pair_bit(perm[u], perm[v]);
        if (mask < best) best = mask;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All graphs on exactly n vertices up to isomorphism, optionally restricted
// to connected and/or bipartite ones. Bipartite outputs carry sides from the
// deterministic 2-coloring.
inline std::vector<Graph> enumerate_graphs(int n, bool require_connected, bool require_bipartite) {
    if (n > 6) throw std::invalid_argument("enumerate_graphs limited to n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<Graph> out;
    std::set<uint64_t> seen;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
        if (require_connected && !is_connected(g)) continue;
        BipartitionResult bip;
        if (require_bipartite) {
            bip = validate_bipartition(g);
            if (!bip.bipartite) continue;
        }
        uint64_t canon = canonical_form(g);
        if (!seen.insert(canon).second) continue;
        if (require_bipartite) {
            Graph h(n, true);
            for (int v = 0; v < n; ++v) h.set_side(v, bip.coloring[v]);
            for (auto [u, v] : g.edges()) h.add_edge(u, v);
            out.push_back(std::move(h));
        } else {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace stickkit
