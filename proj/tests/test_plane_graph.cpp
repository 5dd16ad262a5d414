#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexdom/generators.hpp"
#include "hexdom/plane_graph.hpp"

#include "support.hpp"

using namespace hexdom;

TEST_CASE("triangle builds and has two 3-faces") {
    auto g = EmbeddedGraph::build(3, {{1, 2}, {2, 0}, {0, 1}});
    CHECK(g.edge_count() == 3);
    auto fs = g.faces();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].length() == 3);
    CHECK(fs[1].length() == 3);
    CHECK(g.is_sphere_triangulation().ok);
}

TEST_CASE("build rejects malformed rotation systems") {
    CHECK_THROWS_AS(EmbeddedGraph::build(2, {{1}, {0, 0}}), Error);
    try {
        EmbeddedGraph::build(2, {{1}, {0, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateNeighbor);
    }
    try {
        EmbeddedGraph::build(2, {{1}, {}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AsymmetricAdjacency);
    }
    try {
        EmbeddedGraph::build(1, {{0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SelfLoop);
    }
    try {
        EmbeddedGraph::build(1, {{3}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadVertexId);
    }
}

TEST_CASE("octahedron is a 4-regular sphere triangulation with 8 faces") {
    auto g = octahedron();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    CHECK(g.faces().size() == 8);
    auto h = g.degree_histogram();
    CHECK(h[4] == 6);
    CHECK(g.is_sphere_triangulation().ok);
}

TEST_CASE("hexagon patch exposes one outer face of length 6r") {
    auto hp = hex_patch(1);
    auto fs = hp.graph.faces();
    int tri = 0, outer = 0, outer_len = 0;
    for (auto& f : fs) {
        if (f.length() == 3) ++tri;
        else {
            ++outer;
            outer_len = f.length();
        }
    }
    CHECK(tri == 6);
    CHECK(outer == 1);
    CHECK(outer_len == 6);
    auto rep = hp.graph.is_sphere_triangulation();
    CHECK_FALSE(rep.ok);
    CHECK(rep.non_triangle_faces.size() == 1);
}

TEST_CASE("dart partition: face lengths sum to twice the edges") {
    for (const auto& g : {octahedron(), geodesic_sphere(2), band_graph(3),
                          cylinder_sphere({5, 6, 2}), hex_patch(3).graph}) {
        long long total = 0;
        for (auto& f : g.faces()) total += f.length();
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("degree deficiency identity on sphere triangulations") {
    for (const auto& g : {octahedron(), geodesic_sphere(3), band_graph(4),
                          cylinder_sphere({6, 9, 3}), mt_family(4)}) {
        REQUIRE(g.is_sphere_triangulation().ok);
        long long def = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) def += 6 - g.degree(v);
        CHECK(def == 12);
    }
}

TEST_CASE("bfs layers of the octahedron from one vertex are 1,4,1") {
    auto g = octahedron();
    auto d = g.bfs({0});
    std::vector<int> count(3, 0);
    for (Vertex v = 0; v < 6; ++v) count[d.dist[v]]++;
    CHECK(count == std::vector<int>{1, 4, 1});
}

TEST_CASE("bfs on a single vertex graph") {
    auto g = EmbeddedGraph::build(1, {{}});
    auto d = g.bfs({0});
    CHECK(d.dist[0] == 0);
    CHECK_THROWS_AS(g.bfs({}), Error);
}

TEST_CASE("bfs eccentricity of an apex matches the all-pairs oracle") {
    auto g = geodesic_sphere(3);
    auto apsp = test_support::floyd_warshall(g);
    int diameter = 0;
    for (auto& row : apsp)
        for (int dd : row) diameter = std::max(diameter, dd);
    auto d = g.bfs({0}); // vertex 0 is an icosahedral apex
    int ecc = 0;
    for (int dd : d.dist) ecc = std::max(ecc, dd);
    CHECK(ecc == diameter);
}

TEST_CASE("bfs triangle inequality across edges") {
    auto g = geodesic_sphere(2);
    auto d = g.bfs({5});
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.neighbors(v)) CHECK(std::abs(d.dist[u] - d.dist[v]) <= 1);
}

TEST_CASE("embedded isomorphism identifies band_graph(1) with the octahedron") {
    CHECK(embedded_isomorphic(band_graph(1), octahedron()));
    CHECK_FALSE(embedded_isomorphic(band_graph(2), octahedron()));
}
