#pragma once

// Exact recognition by depth-first search over vertex orderings, placing
// origins left to right with monotone pruning. The incremental checks are
// exact: a full placement survives them iff check_order accepts it, and any
// pruned prefix has no feasible completion.
//
// Pruning at the moment vertex v is appended at position p:
//  - (stick) edges must run B before A; an A-vertex with an unplaced
//    B-neighbor can never be completed;
//  - for each placed u adjacent to v, every placed non-neighbor w of u
//    between u and v with min-placed-neighbor(w) <= pos(u) is a forced
//    spurious crossing (u reaches v past w, w reaches back over u);
//  - lookahead: a placed non-neighbor u of v with min-placed-neighbor(v)
//    <= pos(u) and an unplaced neighbor will cross v in every completion.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "feasibility.hpp"
#include "geometry.hpp"
#include "graph.hpp"

namespace stickkit {

enum class Verdict { Yes, No, Exhausted };

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t prunes = 0;
    double wall_seconds = 0;
};

struct RecognitionOutcome {
    Verdict verdict = Verdict::No;
    VertexOrder witness_order;
    ReachAssignment witness_reaches;
    Geometry witness_geometry;
    SearchStats stats;
};

struct EnumerationReport {
    bool complete = false;
    std::vector<std::vector<int>> orders;       // full feasible orders
    std::vector<std::vector<int>> projections;  // distinct projections when requested
    SearchStats stats;
};

namespace detail {

struct SearchCtx {
    const Graph& g;
    Model model;
    uint64_t budget;
    std::atomic<uint64_t>& nodes;
    std::atomic<bool>& stop;        // set when a witness suffices and one was found
    std::atomic<bool>& exhausted;   // budget ran out somewhere
};

class Placer {
public:
    Placer(const SearchCtx& ctx) : ctx_(ctx), n_(ctx.g.size()) {
        pos_.assign(n_, -1);
        min_nbr_.assign(n_, n_ + 1);
        unplaced_deg_.assign(n_, 0);
        unplaced_b_deg_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) {
            unplaced_deg_[v] = ctx_.g.degree(v);
            if (ctx_.model == Model::Stick && ctx_.g.side(v) == Side::A)
                for (int u : ctx_.g.neighbors(v))
                    if (ctx_.g.side(u) == Side::B) ++unplaced_b_deg_[v];
        }
        order_.reserve(n_);
    }

    // True iff v may legally take the next position; exact for completions.
    bool placement_ok(int v) const {
        const Graph& g = ctx_.g;
        const bool stick = ctx_.model == Model::Stick;
        if (stick && g.side(v) == Side::A && unplaced_b_deg_[v] != 0) return false;
        const int p = static_cast<int>(order_.size());
        // min placed-neighbor position of v (final once v is placed)
        int lv = n_ + 1;
        for (int u : g.neighbors(v))
            if (pos_[u] != -1 && pos_[u] < lv) lv = pos_[u];
        for (int i = 0; i < p; ++i) {
            int u = order_[i];
            bool adj = g.has_edge(u, v);
            if (adj) {
                if (stick && g.side(u) == Side::A) return false;  // edge would run A before B
                // u's reach now extends to p: scan placed strangers between
                for (int q = i + 1; q < p; ++q) {
                    int w = order_[q];
                    if (g.has_edge(u, w)) continue;
                    if (stick && g.side(w) != Side::A) continue;
                    if (min_nbr_[w] <= i) return false;
                }
            } else {
                if (stick && !(g.side(u) == Side::B && g.side(v) == Side::A)) continue;
                // lookahead: u will reach past v through a future neighbor
                if (lv <= i && unplaced_deg_[u] > 0) return false;
            }
        }
        return true;
    }

    void push(int v) {
        pos_[v] = static_cast<int>(order_.size());
        order_.push_back(v);
        int lv = n_ + 1;
        for (int u : ctx_.g.neighbors(v)) {
            --unplaced_deg_[u];
            if (ctx_.model == Model::Stick && ctx_.g.side(v) == Side::B) --unplaced_b_deg_[u];
            if (pos_[u] != -1 && pos_[u] < lv) lv = pos_[u];
        }
        min_nbr_[v] = lv;
    }

    void pop() {
        int v = order_.back();
        order_.pop_back();
        pos_[v] = -1;
        min_nbr_[v] = n_ + 1;
        for (int u : ctx_.g.neighbors(v)) {
            ++unplaced_deg_[u];
            if (ctx_.model == Model::Stick && ctx_.g.side(v) == Side::B) ++unplaced_b_deg_[u];
        }
    }

    const std::vector<int>& order() const { return order_; }
    int placed_count() const { return static_cast<int>(order_.size()); }
    int position_of(int v) const { return pos_[v]; }

    // Candidates for the next slot, most-constrained first (more placed
    // neighbors first), ties broken by vertex id.
    std::vector<int> candidates() const {
        std::vector<int> cand;
        for (int v = 0; v < n_; ++v)
            if (pos_[v] == -1) cand.push_back(v);
        std::vector<int> placed_nbrs(cand.size());
        for (size_t i = 0; i < cand.size(); ++i)
            placed_nbrs[i] = ctx_.g.degree(cand[i]) - unplaced_deg_[cand[i]];
        std::vector<size_t> idx(cand.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            if (placed_nbrs[a] != placed_nbrs[b]) return placed_nbrs[a] > placed_nbrs[b];
            return cand[a] < cand[b];
        });
        std::vector<int> out(cand.size());
        for (size_t i = 0; i < idx.size(); ++i) out[i] = cand[idx[i]];
        return out;
    }

private:
    const SearchCtx& ctx_;
    int n_;
    std::vector<int> order_, pos_, min_nbr_;
    std::vector<int> unplaced_deg_, unplaced_b_deg_;
};

// Depth-first expansion; leaf_fn returns false to stop the whole search.
inline bool dfs(const SearchCtx& ctx, Placer& pl,
                const std::function<bool(const std::vector<int>&)>& leaf_fn) {
    if (ctx.stop.load(std::memory_order_relaxed)) return false;
    if (pl.placed_count() == ctx.g.size()) return leaf_fn(pl.order());
    for (int v : pl.candidates()) {
        if (ctx.stop.load(std::memory_order_relaxed)) return false;
        if (!pl.placement_ok(v)) continue;
        if (ctx.nodes.fetch_add(1, std::memory_order_relaxed) >= ctx.budget) {
            ctx.exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        pl.push(v);
        bool keep = dfs(ctx, pl, leaf_fn);
        pl.pop();
        if (!keep) return false;
    }
    return true;
}

inline int worker_count() {
    if (const char* env = std::getenv("STICKKIT_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

// Runs the search across workers split on first-level candidates.
// leaf_fn must be thread-safe; returns false to stop all workers.
inline void run_search(const SearchCtx& ctx,
                       const std::function<bool(const std::vector<int>&)>& leaf_fn, int workers) {
    Placer root(ctx);
    std::vector<int> first = root.candidates();
    std::vector<int> valid;
    for (int v : first)
        if (root.placement_ok(v)) valid.push_back(v);
    if (workers <= 1 || static_cast<int>(valid.size()) <= 1) {
        for (int v : valid) {
            if (ctx.stop.load(std::memory_order_relaxed)) return;
            if (ctx.nodes.fetch_add(1, std::memory_order_relaxed) >= ctx.budget) {
                ctx.exhausted.store(true, std::memory_order_relaxed);
                return;
            }
            root.push(v);
            bool keep = dfs(ctx, root, leaf_fn);
            root.pop();
            if (!keep) return;
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
        threads.emplace_back([&]() {
            Placer pl(ctx);
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= valid.size() || ctx.stop.load(std::memory_order_relaxed)) return;
                int v = valid[i];
                if (ctx.nodes.fetch_add(1, std::memory_order_relaxed) >= ctx.budget) {
                    ctx.exhausted.store(true, std::memory_order_relaxed);
                    return;
                }
                pl.push(v);
                dfs(ctx, pl, leaf_fn);
                pl.pop();
            }
        });
    for (auto& th : threads) th.join();
}

}  // namespace detail

enum class GraphClass { Stick, BipHook, Mpt };

inline Model class_model(GraphClass c) { return c == GraphClass::Stick ? Model::Stick : Model::Hook; }

// Attaches sides for the stick kernel; biphook validates bipartiteness and
// runs the hook kernel (the two problems agree on bipartite inputs).
inline Graph prepare_for_class(const Graph& g, GraphClass c) {
    if (c == GraphClass::Stick) {
        if (!g.has_sides())
            throw std::invalid_argument("stick recognition requires a bipartite graph with sides");
        g.check_sides_consistent();
        return g;
    }
    if (c == GraphClass::BipHook) {
        auto bip = validate_bipartition(g);
        if (!bip.bipartite) throw std::invalid_argument("biphook recognition requires a bipartite graph");
    }
    return g;
}

inline RecognitionOutcome recognize(const Graph& g_in, GraphClass cls,
                                    uint64_t budget = UINT64_MAX, int workers = 0) {
    Graph g = prepare_for_class(g_in, cls);
    Model model = class_model(cls);
    if (workers <= 0) workers = detail::worker_count();
    auto t0 = std::chrono::steady_clock::now();

    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> stop{false}, exhausted{false};
    detail::SearchCtx ctx{g, model, budget, nodes, stop, exhausted};

    std::mutex mtx;
    RecognitionOutcome out;
    bool found = false;
    detail::run_search(ctx, [&](const std::vector<int>& order) {
        VertexOrder vo{order};
        auto rep = check_order(g, vo, model);
        if (!rep.feasible) return true;
        std::lock_guard<std::mutex> lock(mtx);
        if (!found) {
            found = true;
            out.witness_order = vo;
            out.witness_reaches = rep.reaches;
            out.witness_geometry = realize(g, vo, rep.reaches, model);
        }
        stop.store(true);
        return false;
    }, workers);

    out.stats.nodes = nodes.load();
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (found) out.verdict = Verdict::Yes;
    else if (exhausted.load()) out.verdict = Verdict::Exhausted;
    else out.verdict = Verdict::No;
    return out;
}

// Yields every feasible full order; with a projection set, also the distinct
// projections onto it (order restricted to those vertices). The report is
// complete iff the budget was not hit. Output is sorted for determinism
// regardless of worker count.
inline EnumerationReport enumerate_representations(const Graph& g_in, GraphClass cls,
                                                   uint64_t budget = UINT64_MAX,
                                                   const std::vector<int>& project = {},
                                                   int workers = 0, bool keep_orders = true) {
    Graph g = prepare_for_class(g_in, cls);
    Model model = class_model(cls);
    if (workers <= 0) workers = detail::worker_count();
    auto t0 = std::chrono::steady_clock::now();

    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> stop{false}, exhausted{false};
    detail::SearchCtx ctx{g, model, budget, nodes, stop, exhausted};

    std::vector<char> in_proj(g.size(), 0);
    for (int v : project) in_proj[v] = 1;

    std::mutex mtx;
    EnumerationReport rep;
    detail::run_search(ctx, [&](const std::vector<int>& order) {
        std::lock_guard<std::mutex> lock(mtx);
        if (keep_orders) rep.orders.push_back(order);
        if (!project.empty()) {
            std::vector<int> proj;
            for (int v : order)
                if (in_proj[v]) proj.push_back(v);
            rep.projections.push_back(std::move(proj));
        }
        return true;
    }, workers);

    std::sort(rep.orders.begin(), rep.orders.end());
    std::sort(rep.projections.begin(), rep.projections.end());
    rep.projections.erase(std::unique(rep.projections.begin(), rep.projections.end()),
                          rep.projections.end());
    rep.stats.nodes = nodes.load();
    rep.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.complete = !exhausted.load();
    return rep;
}

}  // namespace stickkit
