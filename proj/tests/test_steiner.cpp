#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hexdom/generators.hpp"
#include "hexdom/steiner.hpp"

#include "support.hpp"

using namespace hexdom;

TEST_CASE("deficiency sets of the named families") {
    auto octa = octahedron();
    CHECK(deficiency_set(octa).size() == 6); // 4-regular

    auto gs = geodesic_sphere(3);
    auto u = deficiency_set(gs);
    CHECK(u == geodesic_apices());

    auto band = band_graph(4);
    auto ub = deficiency_set(band);
    CHECK(ub.size() == 6);
    for (Vertex v : ub) CHECK(band.degree(v) == 4);
}

TEST_CASE("deficiency set rejects degrees above six") {
    // a double wheel with a degree-7 hub
    std::vector<std::array<Vertex, 3>> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({0, 1 + i, 1 + (i + 1) % 7});
        tris.push_back({8, 1 + (i + 1) % 7, 1 + i});
    }
    auto g = embedded_from_faces(9, tris);
    CHECK_THROWS_AS(deficiency_set(g), Error);
}

TEST_CASE("two terminals give a shortest path") {
    CylinderSpec cs{6, 12, 0};
    auto g = cylinder_sphere(cs);
    Vertex a = cs.vertex(0, 2), b = cs.vertex(0, 9);
    auto t = min_steiner_tree(g, {a, b});
    auto d = g.bfs({a});
    CHECK(t.edge_count() == d.dist[b]);
    CHECK(t.size() == d.dist[b] + 1);
    CHECK(t.contains(a));
    CHECK(t.contains(b));
}

TEST_CASE("terminals inducing a connected subgraph span exactly themselves") {
    auto g = geodesic_sphere(2);
    Vertex a = 12;
    auto nb = g.neighbors(a);
    auto t = min_steiner_tree(g, {a, nb[0], nb[1]});
    CHECK(t.size() == 3);
}

TEST_CASE("three distant apices match the spider oracle") {
    auto g = geodesic_sphere(3);
    auto apices = geodesic_apices();
    Vertex t0 = apices[0];
    auto d0 = g.bfs({t0});
    Vertex t1 = apices[0];
    for (Vertex a : apices)
        if (d0.dist[a] > d0.dist[t1]) t1 = a;
    auto d1 = g.bfs({t1});
    Vertex t2 = -1;
    for (Vertex a : apices) {
        if (a == t0 || a == t1) continue;
        if (t2 < 0 || d0.dist[a] + d1.dist[a] > d0.dist[t2] + d1.dist[t2]) t2 = a;
    }
    auto tree = min_steiner_tree(g, {t0, t1, t2});
    int oracle = test_support::steiner3_oracle(g, t0, t1, t2);
    CHECK(tree.size() == oracle);
}

TEST_CASE("small instances match exhaustive minimum connected supersets") {
    auto octa = octahedron();
    auto uo = deficiency_set(octa);
    CHECK(min_steiner_tree(octa, uo).size() ==
          test_support::exhaustive_steiner_vertices(octa, uo));

    auto band = band_graph(2);
    auto ub = deficiency_set(band);
    CHECK(min_steiner_tree(band, ub).size() ==
          test_support::exhaustive_steiner_vertices(band, ub));

    auto mt = mt_family(3);
    auto um = mt_family_centers(3); // mt graphs have high-degree hubs
    CHECK(min_steiner_tree(mt, um).size() ==
          test_support::exhaustive_steiner_vertices(mt, um));
}

TEST_CASE("leaves of a minimum tree are terminals") {
    for (const auto& g : {octahedron(), geodesic_sphere(2), band_graph(3)}) {
        auto u = deficiency_set(g);
        auto t = min_steiner_tree(g, u);
        for (Vertex v : t.vertices)
            if (t.tree_degree(v) == 1)
                CHECK(std::find(u.begin(), u.end(), v) != u.end());
        CHECK(t.edge_count() == t.size() - 1);
    }
}

TEST_CASE("u-prime bound and the clean-path identities") {
    for (const auto& g : {geodesic_sphere(2), geodesic_sphere(3), band_graph(4),
                          cylinder_sphere({6, 15, 0}), cylinder_sphere({5, 11, 2})}) {
        auto u = deficiency_set(g);
        auto t = min_steiner_tree(g, u);
        auto cp = longest_clean_path(t);
        CHECK(static_cast<int>(cp.u_prime.size()) <= 2 * static_cast<int>(u.size()) - 2);
        CHECK(t.size() <= 21 * cp.length() + 1);
        for (size_t i = 1; i + 1 < cp.path.size(); ++i)
            CHECK(std::find(cp.u_prime.begin(), cp.u_prime.end(), cp.path[i]) ==
                  cp.u_prime.end());
        CHECK(std::find(cp.u_prime.begin(), cp.u_prime.end(), cp.path.front()) !=
              cp.u_prime.end());
        CHECK(std::find(cp.u_prime.begin(), cp.u_prime.end(), cp.path.back()) !=
              cp.u_prime.end());
        CHECK(cp.middle == cp.path[(cp.path.size() - 1) / 2]);
    }
}

TEST_CASE("single-edge tree has |P| = 1 with x an endpoint") {
    CylinderSpec cs{6, 12, 0};
    auto g = cylinder_sphere(cs);
    Vertex a = cs.vertex(0, 5), b = cs.vertex(1, 5);
    SteinerTree t;
    t.vertices = {std::min(a, b), std::max(a, b)};
    t.edges = {{std::min(a, b), std::max(a, b)}};
    t.terminals = t.vertices;
    auto cp = longest_clean_path(t);
    CHECK(cp.length() == 1);
    CHECK(cp.middle == cp.path[0]);
}

TEST_CASE("star with branch lengths 2,3,5 picks the length-5 branch") {
    CylinderSpec cs{6, 14, 0};
    auto g = cylinder_sphere(cs);
    Vertex x = cs.vertex(0, 7);
    SteinerTree t;
    std::set<Vertex> vs{x};
    auto arm = [&](int da, int db, int len) {
        Vertex prev = x;
        for (int i = 1; i <= len; ++i) {
            Vertex next = cs.vertex(da * i, 7 + db * i);
            t.edges.emplace_back(std::min(prev, next), std::max(prev, next));
            vs.insert(next);
            prev = next;
        }
        return prev;
    };
    Vertex e1 = arm(0, 1, 5);
    Vertex e2 = arm(0, -1, 3);
    Vertex e3 = arm(1, 0, 2);
    t.vertices.assign(vs.begin(), vs.end());
    std::sort(t.edges.begin(), t.edges.end());
    t.terminals = {e1, e2, e3, x};
    std::sort(t.terminals.begin(), t.terminals.end());
    auto cp = longest_clean_path(t);
    CHECK(cp.length() == 5);
}

TEST_CASE("too many terminals error") {
    auto g = geodesic_sphere(2);
    std::vector<Vertex> terms;
    for (Vertex v = 0; v < 13; ++v) terms.push_back(v);
    CHECK_THROWS_AS(min_steiner_tree(g, terms), Error);
}

TEST_CASE("deterministic: repeated runs give the same tree") {
    auto g = geodesic_sphere(3);
    auto u = deficiency_set(g);
    auto t1 = min_steiner_tree(g, u);
    auto t2 = min_steiner_tree(g, u);
    CHECK(t1.vertices == t2.vertices);
    CHECK(t1.edges == t2.edges);
}
