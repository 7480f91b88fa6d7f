#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stickkit/geometry.hpp>
#include <stickkit/oracle.hpp>
#include <stickkit/search.hpp>

using namespace stickkit;

namespace {

Graph make_bip(int n, const std::string& sides, std::vector<std::pair<int, int>> edges) {
    Graph g(n, true);
    for (int v = 0; v < n; ++v) g.set_side(v, sides[v] == 'A' ? Side::A : Side::B);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// minimal well-formedness check: tags balance and attributes are quoted
bool xml_well_formed(const std::string& s) {
    std::vector<std::string> stack;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '<') {
            ++i;
            continue;
        }
        size_t end = s.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = s.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?') continue;
        bool closing = tag[0] == '/';
        bool selfclose = tag.back() == '/';
        std::string name = tag.substr(closing ? 1 : 0);
        name = name.substr(0, name.find_first_of(" \t\n/"));
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!selfclose) {
            stack.push_back(name);
        }
        // quotes must balance inside the tag
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    }
    return stack.empty();
}

int count_occurrences(const std::string& s, const std::string& needle) {
    int c = 0;
    for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("K2 realization crosses at the declared point") {
    Graph g = make_bip(2, "BA", {{0, 1}});
    VertexOrder ord{{0, 1}};
    auto reaches = extremal_reaches(g, ord, Model::Stick);
    Geometry geom = realize(g, ord, reaches, Model::Stick);
    // b: (0,0) to (1.25, 0); a: (1,-1) up to (1, 0.25); scaled by 4
    CHECK(geom.v[0].x == 0);
    CHECK(geom.v[0].y == 0);
    CHECK(geom.v[0].htip == 5);
    CHECK(geom.v[1].x == 4);
    CHECK(geom.v[1].y == -4);
    CHECK(geom.v[1].vtip == 1);
    CHECK(verify_geometry(geom, g).match);
}

TEST_CASE("shortened arm removes the crossing") {
    Graph g = make_bip(2, "BA", {{0, 1}});
    VertexOrder ord{{0, 1}};
    Geometry geom = realize(g, ord, extremal_reaches(g, ord, Model::Stick), Model::Stick);
    geom.v[1].vtip = -3;  // y tip -0.75: stops below b's level
    auto chk = verify_geometry(geom, g);
    REQUIRE_FALSE(chk.match);
    REQUIRE(chk.missing.size() == 1);
    CHECK(chk.missing[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("C4 realization has exactly 4 crossings") {
    Graph g = make_bip(4, "ABAB", {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    VertexOrder ord{{1, 3, 2, 0}};
    Geometry geom = realize(g, ord, extremal_reaches(g, ord, Model::Stick), Model::Stick);
    CHECK(verify_geometry(geom, g).match);
}

TEST_CASE("coincident origins rejected") {
    Graph g = make_bip(2, "BA", {{0, 1}});
    Geometry geom;
    geom.v.resize(2);
    geom.v[0] = geom.v[1] = VertexGeometry{0, 0, 4, 0, true, false};
    CHECK_THROWS_AS(verify_geometry(geom, g), std::invalid_argument);
}

TEST_CASE("round-trip with zero touchings on all feasible bipartite orders, n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, true, true)) {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            do {
                VertexOrder vo{order};
                auto rep = check_order(g, vo, Model::Stick);
                if (!rep.feasible) continue;
                Geometry geom = realize(g, vo, rep.reaches, Model::Stick);
                auto chk = verify_geometry(geom, g);
                REQUIRE(chk.match);
                REQUIRE(chk.touchings == 0);
            } while (std::next_permutation(order.begin(), order.end()));
        }
}

TEST_CASE("hook realization round-trips on all feasible orders, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : enumerate_graphs(n, false, false)) {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            do {
                VertexOrder vo{order};
                auto rep = check_order(g, vo, Model::Hook);
                if (!rep.feasible) continue;
                Geometry geom = realize(g, vo, rep.reaches, Model::Hook);
                auto chk = verify_geometry(geom, g);
                REQUIRE(chk.match);
                REQUIRE(chk.touchings == 0);
            } while (std::next_permutation(order.begin(), order.end()));
        }
}

TEST_CASE("SVG output: K2 has ground plus 2 segment lines and is well-formed") {
    Graph g = make_bip(2, "BA", {{0, 1}});
    VertexOrder ord{{0, 1}};
    Geometry geom = realize(g, ord, extremal_reaches(g, ord, Model::Stick), Model::Stick);
    std::string svg = render_svg(geom, g);
    CHECK(count_occurrences(svg, "<line") == 3);
    CHECK(xml_well_formed(svg));
}

TEST_CASE("SVG output: C6 has 7 line elements; byte-identical across runs") {
    Graph g = make_bip(6, "ABABAB", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto out = recognize(g, GraphClass::Stick, UINT64_MAX, 1);
    REQUIRE(out.verdict == Verdict::Yes);
    std::string a = render_svg(out.witness_geometry, g);
    std::string b = render_svg(out.witness_geometry, g);
    CHECK(count_occurrences(a, "<line") == 7);
    CHECK(xml_well_formed(a));
    CHECK(a == b);
}

TEST_CASE("hook SVG: one ground line plus 2 arms per hook") {
    Graph g(4);
    for (int v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
    auto out = recognize(g, GraphClass::Mpt, UINT64_MAX, 1);
    REQUIRE(out.verdict == Verdict::Yes);
    std::string svg = render_svg(out.witness_geometry, g);
    CHECK(count_occurrences(svg, "<line") == 9);
}
