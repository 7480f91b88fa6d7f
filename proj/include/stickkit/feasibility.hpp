#pragma once

// Fixed-order feasibility kernel. Given a total order of the origins along
// the ground line, decides exactly whether segment (stick) or hook lengths
// exist realizing the graph.
//
// Reaches are position indices, not lengths: only the relative order along
// the ground line matters. The extremal assignment (minimal forward reach,
// maximal back reach satisfying every edge) minimizes the crossing set
// pointwise, so a fixed order is feasible iff the extremal assignment
// realizes exactly the edge set. Crossing rule for positions p(u) < p(v):
// the pair crosses iff rho(u) >= p(v) and lambda(v) <= p(u).

#include <string>
#include <vector>

#include "graph.hpp"

namespace stickkit {

enum class Model { Stick, Hook };

struct VertexOrder {
    // order[i] = vertex at position i (i-th origin from the left).
    std::vector<int> order;

    std::vector<int> positions() const {
        std::vector<int> pos(order.size());
        for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
        return pos;
    }
};

struct ReachAssignment {
    // forward[v] = rightmost origin position whose vertical line the
    // horizontal arm of v crosses; back[v] = leftmost origin position whose
    // horizontal level the vertical arm of v reaches. Stick model: forward
    // meaningful on B-vertices only, back on A-vertices only.
    std::vector<int> forward;
    std::vector<int> back;
};

enum class ViolationKind { MisorderedEdge, SpuriousNonEdge };

struct Violation {
    int u, v;  // u at the earlier position
    ViolationKind kind;
};

struct FeasibilityReport {
    bool feasible = false;
    ReachAssignment reaches;
    std::vector<Violation> violations;
};

// rho*(v) = max(pos(v), max position of neighbors after v)
// lambda*(v) = min(pos(v), min position of neighbors before v)
inline ReachAssignment extremal_reaches(const Graph& g, const VertexOrder& ord, Model model) {
    if (model == Model::Stick && !g.has_sides())
        throw std::invalid_argument("stick model requires bipartite sides");
    const int n = g.size();
    std::vector<int> pos = ord.positions();
    ReachAssignment r;
    r.forward.resize(n);
    r.back.resize(n);
    for (int v = 0; v < n; ++v) {
        int rho = pos[v], lam = pos[v];
        for (int u : g.neighbors(v)) {
            if (pos[u] > rho) rho = pos[u];
            if (pos[u] < lam) lam = pos[u];
        }
        r.forward[v] = rho;
        r.back[v] = lam;
        if (model == Model::Stick) {
            if (g.side(v) == Side::A) r.forward[v] = pos[v];
            else r.back[v] = pos[v];
        }
    }
    return r;
}

inline FeasibilityReport check_order(const Graph& g, const VertexOrder& ord, Model model) {
    const int n = g.size();
    FeasibilityReport rep;
    rep.reaches = extremal_reaches(g, ord, model);
    std::vector<int> pos = ord.positions();
    const auto& order = ord.order;

    if (model == Model::Stick) {
        // (i) every edge (b, a) must have pos(b) < pos(a)
        for (auto [u, v] : g.edges()) {
            int b = g.side(u) == Side::B ? u : v;
            int a = b == u ? v : u;
            if (pos[b] > pos[a]) rep.violations.push_back({a, b, ViolationKind::MisorderedEdge});
        }
        // (ii) no non-edge (b, a), pos(b) < pos(a), forced to cross
        for (int i = 0; i < n; ++i) {
            int b = order[i];
            if (g.side(b) != Side::B) continue;
            for (int j = i + 1; j < n; ++j) {
                int a = order[j];
                if (g.side(a) != Side::A || g.has_edge(b, a)) continue;
                if (rep.reaches.forward[b] >= j && rep.reaches.back[a] <= i)
                    rep.violations.push_back({b, a, ViolationKind::SpuriousNonEdge});
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            int u = order[i];
            for (int j = i + 1; j < n; ++j) {
                int v = order[j];
                if (g.has_edge(u, v)) continue;
                if (rep.reaches.forward[u] >= j && rep.reaches.back[v] <= i)
                    rep.violations.push_back({u, v, ViolationKind::SpuriousNonEdge});
            }
        }
    }
    rep.feasible = rep.violations.empty();
    return rep;
}

// Prefix pruning predicate. placed = the first |placed| positions of a
// partial order. Returns true only if every completion is infeasible:
//  - (stick) an edge (b, a) already placed with pos(a) < pos(b), or an
//    A-vertex placed while one of its B-neighbors is still unplaced;
//  - a placed non-edge pair (u, v), pos(u) < pos(v), where v already has a
//    placed neighbor at or before u (lambda*(v) <= pos(u) forever) and u has
//    a neighbor after v or still unplaced (rho*(u) >= pos(v) forever).
inline bool prefix_prunable(const Graph& g, const std::vector<int>& placed, Model model) {
    const int n = g.size();
    const int k = static_cast<int>(placed.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < k; ++i) pos[placed[i]] = i;

    std::vector<int> min_nbr(k, n + 1), max_nbr(k, -1);  // placed-neighbor extremes
    for (int i = 0; i < k; ++i) {
        for (int u : g.neighbors(placed[i])) {
            if (pos[u] == -1) continue;
            min_nbr[i] = std::min(min_nbr[i], pos[u]);
            max_nbr[i] = std::max(max_nbr[i], pos[u]);
        }
    }
    if (model == Model::Stick) {
        for (int i = 0; i < k; ++i) {
            int a = placed[i];
            if (g.side(a) != Side::A) continue;
            for (int b : g.neighbors(a))
                if (g.side(b) == Side::B && pos[b] != -1 && pos[b] > i) return true;
        }
    }
    for (int i = 0; i < k; ++i) {
        int u = placed[i];
        if (model == Model::Stick && g.side(u) != Side::B) continue;
        for (int j = i + 1; j < k; ++j) {
            int v = placed[j];
            if (model == Model::Stick && g.side(v) != Side::A) continue;
            if (g.has_edge(u, v)) continue;
            // u already reaches past v and v already reaches back over u
            if (max_nbr[i] > j && min_nbr[j] <= i) return true;
        }
    }
    return false;
}

inline std::string describe(const Graph& g, const Violation& vi) {
    std::string k = vi.kind == ViolationKind::MisorderedEdge ? "misordered-edge" : "spurious-nonedge";
    return k + " (" + g.label(vi.u) + ", " + g.label(vi.v) + ")";
}

}  // namespace stickkit
