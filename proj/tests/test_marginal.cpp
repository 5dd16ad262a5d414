#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexdom/generators.hpp"
#include "hexdom/marginal.hpp"

#include "support.hpp"

using namespace hexdom;

namespace {

int face_with_vertex(const EmbeddedGraph& g, Vertex x) {
    auto fs = g.faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        for (auto& d : fs[i].darts)
            if (d.tail == x) return i;
    return -1;
}

int outer_face_of_disc(const EmbeddedGraph& g) {
    auto fs = g.faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        if (fs[i].length() != 3) return i;
    return -1;
}

/// Orientation chosen so the marginal identity holds (the mirror
/// image flips rdeg).
EmbeddedGraph oriented_lollipop() {
    for (bool flip : {false, true}) {
        auto g = test_support::lollipop_fixture(flip);
        std::vector<Vertex> h{0, 1, 2, 3, 4};
        int outer = face_with_vertex(g, 17);
        auto rep = verify_lemma1(g, h, outer);
        if (rep.equal) return g;
    }
    REQUIRE(false);
    return octahedron();
}

} // namespace

TEST_CASE("single edge between degree-6 vertices has marginals (3,3)") {
    CylinderSpec cs{6, 10, 0};
    auto g = cylinder_sphere(cs);
    int far = face_with_vertex(g, cs.patch_vertices() + 1);
    Vertex u = cs.vertex(0, 5), v = cs.vertex(1, 5);
    auto w = boundary_walk(g, {u, v}, far);
    REQUIRE(w.length() == 2);
    CHECK(w.marginal[0] == 3);
    CHECK(w.marginal[1] == 3);
    CHECK(marginal_degree(g, {u, v}, far) == 6);
}

TEST_CASE("hexagon ring around an interior vertex has marginal +1 per corner") {
    CylinderSpec cs{6, 10, 0};
    auto g = cylinder_sphere(cs);
    int far = face_with_vertex(g, cs.patch_vertices() + 1);
    Vertex x = cs.vertex(2, 5);
    std::vector<Vertex> ring(g.neighbors(x).begin(), g.neighbors(x).end());
    auto w = boundary_walk(g, ring, far);
    REQUIRE(w.length() == 6);
    for (int m : w.marginal) CHECK(m == 1);
    CHECK(w.marginal_total() == 6);
    // cross-check with the interior deficiency: center has degree 6
    auto rep = verify_lemma1(g, ring, far);
    CHECK(rep.equal);
    CHECK(rep.marginal_degree == 6);
}

TEST_CASE("tree leaf of degree 5 carries rdeg 4") {
    auto g = geodesic_sphere(3);
    Vertex apex = 0; // degree 5
    REQUIRE(g.degree(apex) == 5);
    Vertex nb = g.neighbors(apex)[0];
    // H = the edge; walk backtracks at the apex: rdeg = deg - 1
    auto fs = g.faces();
    int outer = -1;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        bool touches = false;
        for (auto& d : fs[i].darts) touches |= (d.tail == apex || d.tail == nb);
        if (!touches) outer = i;
    }
    auto w = boundary_walk(g, {apex, nb}, outer);
    int apex_index = w.vertices[0] == apex ? 0 : 1;
    CHECK(w.rdeg[apex_index] == 4);
    CHECK(w.marginal[apex_index] == 2);
}

TEST_CASE("marginal degree of a single vertex is its degree") {
    auto g = octahedron();
    CHECK(marginal_degree(g, {0}, 0) == 4);
    auto gs = geodesic_sphere(2);
    CHECK(marginal_degree(gs, {20}, 0) == gs.degree(20));
}

TEST_CASE("no-turn cylinder ring has marginal degree 0") {
    CylinderSpec cs{5, 10, 0};
    auto g = cylinder_patch(cs);
    std::vector<Vertex> ring;
    for (int a = 0; a < 5; ++a) ring.push_back(cs.vertex(a, 5));
    // exterior toward b = 0: any face touching the b=0 ring
    int side = face_with_vertex(g, cs.vertex(0, 0));
    CHECK(marginal_degree(g, ring, side) == 0);
}

TEST_CASE("marginal identity flips sign with the chosen exterior") {
    auto g = geodesic_sphere(5);
    // x far from every apex
    auto d = g.bfs(geodesic_apices());
    Vertex x = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (d.dist[v] > d.dist[x]) x = v;
    REQUIRE(d.dist[x] >= 2);
    std::vector<Vertex> ring(g.neighbors(x).begin(), g.neighbors(x).end());
    // exterior away from x: interior is just the degree-6 center
    auto far = g.bfs({x});
    Vertex far_v = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (far.dist[v] > far.dist[far_v]) far_v = v;
    auto rep = verify_lemma1(g, ring, face_with_vertex(g, far_v));
    CHECK(rep.equal);
    CHECK(rep.marginal_degree == 6);
    CHECK(rep.inner_vertex_count == 7);
    // exterior on x's side: the interior now holds all 12 apices
    auto rep2 = verify_lemma1(g, ring, face_with_vertex(g, x));
    CHECK(rep2.equal);
    CHECK(rep2.marginal_degree == -6);
}

TEST_CASE("inner neighbor layer of a hexagon ring obeys both identities") {
    auto hp = hex_patch(4);
    auto& g = hp.graph;
    // C = lattice ring 2 in cyclic order
    std::map<LatticeCoord, Vertex> at;
    for (Vertex v = 0; v < g.vertex_count(); ++v) at[hp.coords[v]] = v;
    std::vector<Vertex> cyc;
    LatticeCoord c{2, 0};
    static const int side_dir[6] = {2, 3, 4, 5, 0, 1};
    auto dirs = lattice_neighbors({0, 0});
    for (int side = 0; side < 6; ++side)
        for (int t = 0; t < 2; ++t) {
            cyc.push_back(at.at(c));
            c = c + dirs[side_dir[side]];
        }
    REQUIRE(cyc.size() == 12);
    auto nl = inner_neighbor_layer(g, cyc, face_with_vertex(g, hp.center));
    CHECK(nl.layer.size() == 6);
    CHECK(nl.boundary_length == 6); // 12 - rdeg*(H) = 12 - 6
    CHECK(nl.marginal_degree == 6);
    CHECK(nl.length_identity_ok);
    CHECK(nl.marginal_identity_ok);
}

TEST_CASE("inner neighbor layer collapsing to one vertex bounds a 0-walk") {
    auto hp = hex_patch(2);
    auto& g = hp.graph;
    std::vector<Vertex> ring(g.neighbors(hp.center).begin(), g.neighbors(hp.center).end());
    // order the ring as a cycle
    std::vector<Vertex> cyc{ring[0]};
    while (cyc.size() < ring.size()) {
        Vertex cur = cyc.back();
        for (Vertex u : ring)
            if (g.adjacent(cur, u) && std::find(cyc.begin(), cyc.end(), u) == cyc.end()) {
                cyc.push_back(u);
                break;
            }
    }
    auto nl = inner_neighbor_layer(g, cyc, face_with_vertex(g, hp.center));
    CHECK(nl.layer.size() == 1);
    CHECK(nl.boundary_length == 0);
    CHECK(nl.marginal_degree == 6); // single vertex: its degree
}

TEST_CASE("inner neighbor layer on a cylinder ring") {
    CylinderSpec cs{5, 10, 0};
    auto g = cylinder_patch(cs);
    std::vector<Vertex> ring;
    for (int a = 0; a < 5; ++a) ring.push_back(cs.vertex(a, 5));
    auto nl = inner_neighbor_layer(g, ring, face_with_vertex(g, cs.vertex(0, 0)));
    CHECK(nl.layer.size() == 5);
    CHECK(nl.boundary_length == 5); // |C| - 0
    CHECK(nl.marginal_degree == 0);
}

TEST_CASE("chords on the chosen side are rejected") {
    // wheel on a 4-cycle plus the chord 1-3 drawn on the far side
    auto w = test_support::embed_unoriented(
        5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {1, 3, 2}, {1, 4, 3}}, false);
    REQUIRE(w.is_sphere_triangulation().ok);
    REQUIRE(w.adjacent(1, 3));
    auto fs = w.faces();
    int chord_side = -1, hub_side = -1;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        bool has_hub = false;
        for (auto& d : fs[i].darts) has_hub |= d.tail == 0;
        (has_hub ? hub_side : chord_side) = i;
    }
    CHECK_THROWS_AS(inner_neighbor_layer(w, {1, 2, 3, 4}, chord_side), Error);
    try {
        inner_neighbor_layer(w, {1, 2, 3, 4}, chord_side);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ChordPresent);
    }
    // the hub side is chordless and collapses to the single center
    auto nl = inner_neighbor_layer(w, {1, 2, 3, 4}, hub_side);
    CHECK(nl.layer.size() == 1);
    CHECK(nl.boundary_length == 0);
}

TEST_CASE("layer bound: single degree-6 vertex has empty interior") {
    CylinderSpec cs{6, 8, 0};
    auto g = cylinder_sphere(cs);
    Vertex x = cs.vertex(0, 4);
    auto rep = layer_sizes(g, {x}, face_with_vertex(g, cs.patch_vertices()));
    CHECK(rep.layer_sizes == std::vector<int>{1});
    CHECK(rep.marginal_degree == 6);
}

TEST_CASE("layer bound: no-turn ring keeps layers at w") {
    CylinderSpec cs{6, 10, 0};
    auto g = cylinder_patch(cs);
    std::vector<Vertex> ring;
    for (int a = 0; a < 6; ++a) ring.push_back(cs.vertex(a, 9));
    auto rep = layer_sizes(g, ring, face_with_vertex(g, cs.vertex(0, 10)));
    CHECK(rep.marginal_degree == 0);
    for (int s : rep.layer_sizes) CHECK(s <= 6);
    CHECK(static_cast<int>(rep.layer_sizes.size()) == 10);
}

TEST_CASE("layer bound leaks on the wheel: literal inequality fails") {
    // a ring around one vertex has |V(H)| = 6, rdeg* = 6, yet the center
    // sits at distance 1; the stated bound gives 0. The proof's collapse
    // step undercounts single-vertex layers, so the implementation
    // surfaces the violation rather than hiding it.
    CylinderSpec cs{6, 10, 0};
    auto g = cylinder_sphere(cs);
    Vertex x = cs.vertex(2, 5);
    std::vector<Vertex> ring(g.neighbors(x).begin(), g.neighbors(x).end());
    int far = face_with_vertex(g, cs.patch_vertices() + 1);
    CHECK_THROWS_AS(layer_sizes(g, ring, far), Error);
}

TEST_CASE("classify: chordless ring is a cycle") {
    CylinderSpec cs{6, 10, 0};
    auto g = cylinder_patch(cs);
    std::vector<Vertex> ring;
    for (int a = 0; a < 6; ++a) ring.push_back(cs.vertex(a, 5));
    auto w = boundary_walk(g, ring, face_with_vertex(g, cs.vertex(0, 0)));
    auto cls = classify_boundary(g, w);
    CHECK(cls.kind == BoundaryClassification::Kind::Cycle);
    CHECK(cls.cycle_length == 6);
}

TEST_CASE("classify: doubled edge in K4 is a path") {
    auto k4 = embedded_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    REQUIRE(k4.is_sphere_triangulation().ok);
    int outer = -1;
    auto fs = k4.faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        bool has3 = false;
        for (auto& d : fs[i].darts) has3 |= d.tail == 3;
        if (!has3) outer = i;
    }
    auto w = boundary_walk(k4, {0, 1}, outer);
    REQUIRE(w.length() == 2);
    CHECK(w.marginal[0] == 0); // degree-3 endpoints: deg - 3
    CHECK(w.marginal[1] == 0);
    auto cls = classify_boundary(k4, w);
    CHECK(cls.kind == BoundaryClassification::Kind::Path);
    CHECK(cls.path_length == 1);
}

TEST_CASE("classify: the lollipop fixture is a path plus a cycle") {
    auto g = oriented_lollipop();
    REQUIRE(g.is_sphere_triangulation().ok);
    int maxdeg = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    REQUIRE(maxdeg <= 6);
    std::vector<Vertex> h{0, 1, 2, 3, 4};
    int outer = face_with_vertex(g, 17);
    auto w = boundary_walk(g, h, outer);
    REQUIRE(w.length() == 6);
    CHECK(w.left_turns() == 1);
    CHECK(w.right_turns() == 1);
    auto cls = classify_boundary(g, w);
    CHECK(cls.kind == BoundaryClassification::Kind::PathPlusCycle);
    CHECK(cls.path_length == 1);
    CHECK(cls.cycle_length == 4);
    CHECK(cls.cycle_marginal >= 1);
}

TEST_CASE("classify rejects walks violating the turn census") {
    auto hp = hex_patch(3);
    auto& g = hp.graph;
    // a lattice triangle has three sharp left turns
    std::map<LatticeCoord, Vertex> at;
    for (Vertex v = 0; v < g.vertex_count(); ++v) at[hp.coords[v]] = v;
    std::vector<Vertex> tri{at.at({0, 0}), at.at({1, 0}), at.at({1, 1})};
    auto w = boundary_walk(g, tri, outer_face_of_disc(g));
    CHECK(w.marginal_total() == 6);
    CHECK_THROWS_AS(classify_boundary(g, w), Error);
}

TEST_CASE("next layer on a straight cylinder reproduces the ring") {
    CylinderSpec cs{6, 12, 0};
    auto g = cylinder_patch(cs);
    std::vector<Vertex> ring;
    for (int a = 0; a < 6; ++a) ring.push_back(cs.vertex(a, 6));
    auto nx = next_layer(g, ring, face_with_vertex(g, cs.vertex(0, 0)));
    CHECK(nx.walk.length() == 6);
    CHECK(nx.is_cycle);
    CHECK(nx.all_degree_six);
    CHECK(nx.pattern_matches);
    CHECK(nx.walk.left_turns() == 0);
}

TEST_CASE("next layer tracks the twist's turn pair in matching spots") {
    CylinderSpec cs{6, 12, 2};
    auto g = cylinder_patch(cs);
    std::vector<Vertex> ring;
    for (int a = 0; a < 6; ++a) ring.push_back(cs.vertex(a, 6));
    auto nx = next_layer(g, ring, face_with_vertex(g, cs.vertex(0, 0)));
    CHECK(nx.walk.length() == 6);
    CHECK(nx.is_cycle);
    CHECK(nx.walk.left_turns() == 1);
    CHECK(nx.walk.right_turns() == 1);
    CHECK(nx.pattern_matches);
}

TEST_CASE("next layer flags a non-cycle when deficient vertices intrude") {
    auto g = oriented_lollipop();
    std::vector<Vertex> ring{5, 6, 7, 8, 9, 10};
    // side toward the lollipop: any face containing vertex 0
    auto nx = next_layer(g, ring, face_with_vertex(g, 0));
    CHECK(nx.walk.length() == 6);
    CHECK_FALSE(nx.is_cycle);
    CHECK_FALSE(nx.all_degree_six);
    CHECK(nx.pattern_matches);
}

TEST_CASE("next layer rejects deficient or unbalanced cycles") {
    CylinderSpec cs{6, 8, 0};
    auto g = cylinder_sphere(cs);
    std::vector<Vertex> ring0;
    for (int a = 0; a < 6; ++a) ring0.push_back(cs.vertex(a, 0)); // degree-5 ring
    CHECK_THROWS_AS(next_layer(g, ring0, face_with_vertex(g, cs.patch_vertices())), Error);
}

TEST_CASE("walk marginals stay within [-2, 3] and reverse by negation") {
    CylinderSpec cs{6, 20, 0};
    auto hosts = std::vector<EmbeddedGraph>{geodesic_sphere(4), cylinder_sphere(cs)};
    std::mt19937 rng(99);
    for (const auto& g : hosts) {
        int done = 0;
        while (done < 40) {
            std::vector<Vertex> members;
            int outer = -1;
            if (!sample_outerplane_subgraph(g, rng, 10, members, outer)) continue;
            ++done;
            auto w = boundary_walk(g, members, outer);
            const int L = w.length();
            for (int i = 0; i < L; ++i) {
                CHECK(w.marginal[i] >= -2);
                CHECK(w.marginal[i] <= 3);
                Vertex v = w.vertices[i];
                if (g.degree(v) != 6) continue;
                // reversed walk: swap prev and next
                Vertex prev = w.vertices[(i - 1 + L) % L];
                Vertex next = w.vertices[(i + 1) % L];
                int pp = g.slot_of(v, next), pn = g.slot_of(v, prev);
                int rdeg_rev = ((pn - pp - 1) % 6 + 6) % 6;
                int marg_rev = rdeg_rev - 2;
                if (w.marginal[i] == 3) CHECK(marg_rev == 3);
                else CHECK(marg_rev == -w.marginal[i]);
            }
        }
    }
}

TEST_CASE("lemma suite passes on the acceptance corpora") {
    auto s1 = verify_lemmas(geodesic_sphere(4), 60, 5);
    CHECK(s1.ok());
    CHECK(s1.samples == 60);
    CylinderSpec cs{6, 20, 0};
    auto s2 = verify_lemmas(cylinder_sphere(cs), 60, 5);
    CHECK(s2.ok());
    // determinism: identical seed, identical counts
    auto s3 = verify_lemmas(geodesic_sphere(4), 60, 5);
    CHECK(s3.lemma1_pass == s1.lemma1_pass);
    CHECK(s3.lemma3_pass == s1.lemma3_pass);
}
