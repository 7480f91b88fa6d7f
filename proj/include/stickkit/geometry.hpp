#pragma once

// Explicit coordinates on the slope -1 ground line. All coordinates are kept
// in quarter units scaled by 4, so every intersection predicate is exact
// integer arithmetic. realize() places the position-i origin at (i, -i) and
// lets arms overshoot their last crossing by a quarter unit, so crossings are
// transversal and non-adjacent segments stay at L-infinity distance >= 1/4.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "feasibility.hpp"
#include "graph.hpp"

namespace stickkit {

struct VertexGeometry {
    int64_t x = 0, y = 0;   // origin / hook center, quarter units x4
    int64_t htip = 0;       // x of right end of horizontal arm (== x if none)
    int64_t vtip = 0;       // y of top end of vertical arm (== y if none)
    bool has_h = false, has_v = false;
};

struct Geometry {
    Model model = Model::Stick;
    std::vector<VertexGeometry> v;
    int size() const { return static_cast<int>(v.size()); }
};

inline Geometry realize(const Graph& g, const VertexOrder& ord, const ReachAssignment& reaches,
                        Model model) {
    const int n = g.size();
    Geometry geom;
    geom.model = model;
    geom.v.resize(n);
    std::vector<int> pos = ord.positions();
    for (int u = 0; u < n; ++u) {
        VertexGeometry& vg = geom.v[u];
        vg.x = 4 * pos[u];
        vg.y = -4 * pos[u];
        bool horizontal = model == Model::Hook || g.side(u) == Side::B;
        bool vertical = model == Model::Hook || g.side(u) == Side::A;
        if (horizontal) {
            vg.has_h = true;
            vg.htip = 4 * reaches.forward[u] + 1;
        } else {
            vg.htip = vg.x;
        }
        if (vertical) {
            vg.has_v = true;
            vg.vtip = -4 * reaches.back[u] + 1;
        } else {
            vg.vtip = vg.y;
        }
    }
    return geom;
}

struct GeometryCheck {
    bool match = false;
    std::vector<std::pair<int, int>> missing;   // edges with no crossing
    std::vector<std::pair<int, int>> spurious;  // non-edges that cross
    int touchings = 0;  // closed-segment contacts at an endpoint (counted as crossings)
};

namespace detail {

// horizontal [x1,x2] x {y} against vertical {X} x [y1,y2]; closed segments.
inline bool seg_cross(int64_t x1, int64_t x2, int64_t y, int64_t X, int64_t y1, int64_t y2,
                      bool& touching) {
    if (X < x1 || X > x2 || y < y1 || y > y2) return false;
    touching = (X == x1 || X == x2 || y == y1 || y == y2);
    return true;
}

inline bool pair_intersects(const VertexGeometry& a, const VertexGeometry& b, bool& touching) {
    touching = false;
    bool t = false, hit = false;
    if (a.has_h && b.has_v && seg_cross(a.x, a.htip, a.y, b.x, b.y, b.vtip, t)) {
        hit = true;
        touching |= t;
    }
    if (b.has_h && a.has_v && seg_cross(b.x, b.htip, b.y, a.x, a.y, a.vtip, t)) {
        hit = true;
        touching |= t;
    }
    // collinear overlaps (possible only in external geometries)
    if (a.has_h && b.has_h && a.y == b.y && std::max(a.x, b.x) <= std::min(a.htip, b.htip)) {
        hit = true;
        touching = true;
    }
    if (a.has_v && b.has_v && a.x == b.x && std::max(a.y, b.y) <= std::min(a.vtip, b.vtip)) {
        hit = true;
        touching = true;
    }
    return hit;
}

}  // namespace detail

inline GeometryCheck verify_geometry(const Geometry& geom, const Graph& g) {
    const int n = geom.size();
    if (n != g.size()) throw std::invalid_argument("geometry/graph size mismatch");
    std::set<std::pair<int64_t, int64_t>> origins;
    for (const auto& vg : geom.v)
        if (!origins.insert({vg.x, vg.y}).second)
            throw std::invalid_argument("invalid geometry: coincident origins");
    GeometryCheck chk;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool touching = false;
            bool cross = detail::pair_intersects(geom.v[u], geom.v[v], touching);
            if (touching) ++chk.touchings;
            if (cross && !g.has_edge(u, v)) chk.spurious.push_back({u, v});
            else if (!cross && g.has_edge(u, v)) chk.missing.push_back({u, v});
        }
    chk.match = chk.missing.empty() && chk.spurious.empty();
    return chk;
}

struct SvgOptions {
    int scale = 12;      // pixels per quarter-unit step of 4
    bool labels = true;
};

inline std::string render_svg(const Geometry& geom, const Graph& g, SvgOptions opt = {}) {
    int64_t minx = 0, maxx = 4, miny = -4, maxy = 4;
    for (const auto& vg : geom.v) {
        minx = std::min(minx, vg.x);
        maxx = std::max({maxx, vg.htip, vg.x});
        miny = std::min(miny, vg.y);
        maxy = std::max({maxy, vg.vtip, vg.y});
    }
    const double s = opt.scale / 4.0;
    const double margin = 2.0 * opt.scale;
    auto sx = [&](int64_t x) { return margin + (x - minx) * s; };
    auto sy = [&](int64_t y) { return margin + (maxy - y) * s; };
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    double w = sx(maxx) + margin, h = sy(miny) + margin;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    // ground line with slope -1, drawn across the occupied range
    int64_t lo = std::min(minx, -maxy) - 4, hi = std::max(maxx, -miny) + 4;
    out << "  <line x1=\"" << sx(lo) << "\" y1=\"" << sy(-lo) << "\" x2=\"" << sx(hi) << "\" y2=\""
        << sy(-hi) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    for (int u = 0; u < geom.size(); ++u) {
        const auto& vg = geom.v[u];
        if (vg.has_h)
            out << "  <line x1=\"" << sx(vg.x) << "\" y1=\"" << sy(vg.y) << "\" x2=\""
                << sx(vg.htip) << "\" y2=\"" << sy(vg.y) << "\" stroke=\"#c22\"/>\n";
        if (vg.has_v)
            out << "  <line x1=\"" << sx(vg.x) << "\" y1=\"" << sy(vg.y) << "\" x2=\"" << sx(vg.x)
                << "\" y2=\"" << sy(vg.vtip) << "\" stroke=\"#22c\"/>\n";
        if (opt.labels)
            out << "  <text x=\"" << sx(vg.x) + 2 << "\" y=\"" << sy(vg.y) + 12
                << "\" font-size=\"10\">" << g.label(u) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace stickkit
