#include "hexdom/marginal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace hexdom {

long long OrientedWalk::marginal_total() const {
    long long t = 0;
    for (int m : marginal) t += m;
    return t;
}

int OrientedWalk::left_turns() const {
    return static_cast<int>(std::count_if(marginal.begin(), marginal.end(),
                                          [](int m) { return m > 0; }));
}

int OrientedWalk::right_turns() const {
    return static_cast<int>(std::count_if(marginal.begin(), marginal.end(),
                                          [](int m) { return m < 0; }));
}

bool OrientedWalk::turn_census_ok() const {
    int l = left_turns(), r = right_turns();
    return (l == 0 && r == 0) || (l == 1 && r == 1);
}

namespace {

void fill_rdeg(const EmbeddedGraph& g, OrientedWalk& w) {
    const int L = w.length();
    w.rdeg.resize(L);
    w.marginal.resize(L);
    w.sharp.resize(L);
    for (int i = 0; i < L; ++i) {
        Vertex v = w.vertices[i];
        Vertex prev = w.vertices[(i - 1 + L) % L];
        Vertex next = w.vertices[(i + 1) % L];
        int deg = g.degree(v);
        int pp = g.slot_of(v, prev);
        int pn = g.slot_of(v, next);
        if (pp < 0 || pn < 0)
            fail(ErrorCode::BadVertexId, "walk step not an edge at vertex " + std::to_string(v));
        w.rdeg[i] = ((pn - pp - 1) % deg + deg) % deg;
        w.marginal[i] = w.rdeg[i] - 2;
        int gap = ((pn - pp) % deg + deg) % deg;
        w.sharp[i] = (gap == 1 || gap == deg - 1) ? 1 : 0;
    }
}

/// The single boundary walk of `regions` lying in `exterior_region`.
/// Face traversal keeps the traced region to the right of every dart, so
/// the walk already runs with the exterior to the right.
OrientedWalk walk_with_exterior_right(const EmbeddedGraph& g, const SubgraphRegions& regions,
                                      int exterior_region) {
    const SubgraphRegions::BoundaryWalk* found = nullptr;
    for (const auto& w : regions.boundary_walks()) {
        if (w.region != exterior_region) continue;
        if (found)
            fail(ErrorCode::NotConnected,
                 "subgraph has several boundary walks on the chosen exterior");
        found = &w;
    }
    if (!found) fail(ErrorCode::NotOuterplane, "no boundary walk on the chosen exterior face");
    OrientedWalk out;
    out.vertices = found->vertices;
    fill_rdeg(g, out);
    return out;
}

std::vector<char> member_mask(const EmbeddedGraph& g, const std::vector<Vertex>& members) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (Vertex v : members) {
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorCode::BadVertexId, "subset vertex " + std::to_string(v));
        mask[v] = 1;
    }
    return mask;
}

bool induced_connected(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                       const std::vector<char>& mask) {
    if (members.empty()) return false;
    std::vector<char> vis(g.vertex_count(), 0);
    std::queue<Vertex> q;
    q.push(members[0]);
    vis[members[0]] = 1;
    int seen = 0;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        ++seen;
        for (Vertex u : g.neighbors(v))
            if (mask[u] && !vis[u]) {
                vis[u] = 1;
                q.push(u);
            }
    }
    return seen == static_cast<int>(members.size());
}

int face_count(const EmbeddedGraph& g) { return static_cast<int>(g.faces().size()); }

struct CycleEdges {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<char> on_cycle;
};

CycleEdges cycle_edge_list(const EmbeddedGraph& g, const std::vector<Vertex>& cycle) {
    CycleEdges ce;
    ce.on_cycle.assign(g.vertex_count(), 0);
    const int L = static_cast<int>(cycle.size());
    if (L < 3) fail(ErrorCode::InvalidInput, "cycle needs at least 3 vertices");
    for (int i = 0; i < L; ++i) {
        Vertex u = cycle[i], v = cycle[(i + 1) % L];
        if (!g.adjacent(u, v))
            fail(ErrorCode::InvalidInput,
                 "cycle step " + std::to_string(u) + "-" + std::to_string(v) + " not an edge");
        if (ce.on_cycle[u]) fail(ErrorCode::InvalidInput, "cycle repeats a vertex");
        ce.on_cycle[u] = 1;
        ce.edges.emplace_back(u, v);
    }
    return ce;
}

} // namespace

OrientedWalk boundary_walk(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                           int outer_face) {
    if (members.size() < 2)
        fail(ErrorCode::InvalidInput, "boundary walk needs at least two vertices");
    auto mask = member_mask(g, members);
    if (!induced_connected(g, members, mask))
        fail(ErrorCode::NotConnected, "induced subgraph is disconnected");
    if (outer_face < 0 || outer_face >= face_count(g))
        fail(ErrorCode::BadVertexId, "outer face id " + std::to_string(outer_face));
    SubgraphRegions regions(g, mask);
    int exterior = regions.region_of_face(outer_face);
    if (!regions.all_members_on_region(exterior))
        fail(ErrorCode::NotOuterplane, "a subset vertex misses the chosen outer face");
    return walk_with_exterior_right(g, regions, exterior);
}

long long marginal_degree(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                          int outer_face) {
    if (members.size() == 1) return g.degree(members[0]);
    return boundary_walk(g, members, outer_face).marginal_total();
}

Lemma1Report verify_lemma1(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                           int outer_face) {
    Lemma1Report rep;
    rep.marginal_degree = marginal_degree(g, members, outer_face);
    auto mask = member_mask(g, members);
    SubgraphRegions regions(g, mask);
    int exterior = regions.region_of_face(outer_face);
    long long deficiency = 0;
    int count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        bool in_s = mask[v] || regions.region_of_vertex(v) != exterior;
        if (in_s) {
            deficiency += 6 - g.degree(v);
            ++count;
        }
    }
    rep.deficiency_side = 6 - deficiency;
    rep.inner_vertex_count = count;
    rep.equal = rep.marginal_degree == rep.deficiency_side;
    return rep;
}

LayerReport layer_sizes(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                        int outer_face) {
    LayerReport rep;
    rep.marginal_degree = marginal_degree(g, members, outer_face);
    auto mask = member_mask(g, members);
    SubgraphRegions regions(g, mask);
    int exterior = regions.region_of_face(outer_face);

    // BFS restricted to H and its interior.
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    for (Vertex v : members) {
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v)) {
            bool inside = mask[u] || regions.region_of_vertex(u) != exterior;
            if (inside && dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    int maxd = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) maxd = std::max(maxd, dist[v]);
    rep.layer_sizes.assign(maxd + 1, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v] >= 0) rep.layer_sizes[dist[v]]++;

    rep.bound_ok = true;
    long long h = static_cast<long long>(members.size());
    for (int i = 0; i <= maxd; ++i) {
        long long bound = std::max(0LL, h - static_cast<long long>(i) * rep.marginal_degree);
        if (rep.layer_sizes[i] > bound) rep.bound_ok = false;
    }
    if (!rep.bound_ok)
        fail(ErrorCode::LemmaViolation, "distance-layer bound violated");
    return rep;
}

NeighborLayer inner_neighbor_layer(const EmbeddedGraph& g, const std::vector<Vertex>& cycle,
                                   int side_face) {
    NeighborLayer out;
    auto ce = cycle_edge_list(g, cycle);
    SubgraphRegions cregions(g, ce.edges);
    int inside = cregions.region_of_face(side_face);
    const auto& face_ids = g.face_left_of_darts();

    // chords on the chosen side
    const int L = static_cast<int>(cycle.size());
    std::set<std::pair<Vertex, Vertex>> cyc_edges;
    for (int i = 0; i < L; ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % L];
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!ce.on_cycle[v]) continue;
        for (int s = 0; s < g.degree(v); ++s) {
            Vertex u = g.neighbors(v)[s];
            if (u < v || !ce.on_cycle[u]) continue;
            if (cyc_edges.count({std::min(u, v), std::max(u, v)})) continue;
            if (cregions.region_of_face(face_ids[v][s]) == inside)
                fail(ErrorCode::ChordPresent,
                     "chord " + std::to_string(v) + "-" + std::to_string(u) +
                         " on the chosen side");
        }
    }

    // interior neighbors of C
    std::set<Vertex> layer;
    for (Vertex c : cycle)
        for (Vertex u : g.neighbors(c))
            if (!ce.on_cycle[u] && cregions.region_of_vertex(u) == inside) layer.insert(u);
    if (layer.empty()) fail(ErrorCode::EmptyInterior, "cycle has no interior neighbors");
    out.layer.assign(layer.begin(), layer.end());

    auto lmask = member_mask(g, out.layer);
    if (!induced_connected(g, out.layer, lmask))
        fail(ErrorCode::LemmaViolation, "interior neighbor layer disconnected");

    // rdeg*(C) with C's exterior away from the chosen side
    int outside = -1;
    for (int f = 0; f < face_count(g); ++f)
        if (cregions.region_of_face(f) != inside) {
            outside = cregions.region_of_face(f);
            break;
        }
    if (outside < 0) fail(ErrorCode::InvalidInput, "cycle does not separate the sphere");
    out.cycle_marginal = walk_with_exterior_right(g, cregions, outside).marginal_total();

    long long cycle_deficiency = 0;
    for (Vertex c : cycle) cycle_deficiency += 6 - g.degree(c);

    if (out.layer.size() == 1) {
        Vertex v = out.layer[0];
        out.boundary_length = 0;
        out.marginal_degree = g.degree(v);
    } else {
        // outer face of H: a host face on the chosen side incident to a
        // cycle edge (it lies between C and H).
        Vertex c0 = cycle[0], c1 = cycle[1];
        int f = face_ids[c0][g.slot_of(c0, c1)];
        if (cregions.region_of_face(f) != inside) f = face_ids[c1][g.slot_of(c1, c0)];
        auto w = boundary_walk(g, out.layer, f);
        out.boundary_length = w.length();
        out.marginal_degree = w.marginal_total();
    }
    out.length_identity_ok =
        out.boundary_length == static_cast<long long>(cycle.size()) - out.marginal_degree;
    out.marginal_identity_ok =
        out.marginal_degree == out.cycle_marginal + cycle_deficiency;
    if (!out.length_identity_ok || !out.marginal_identity_ok)
        fail(ErrorCode::LemmaViolation, "neighbor-layer identities failed");
    return out;
}

BoundaryClassification classify_boundary(const EmbeddedGraph& g, const OrientedWalk& walk) {
    if (!walk.turn_census_ok())
        fail(ErrorCode::TurnPreconditionViolated,
             "walk has " + std::to_string(walk.left_turns()) + " left / " +
                 std::to_string(walk.right_turns()) + " right turns");
    const int L = walk.length();
    std::map<std::pair<Vertex, Vertex>, int> mult;
    for (int i = 0; i < L; ++i) {
        Vertex u = walk.vertices[i], v = walk.vertices[(i + 1) % L];
        mult[{std::min(u, v), std::max(u, v)}]++;
    }
    int once = 0, twice = 0;
    for (auto& [e, m] : mult) {
        if (m == 1) ++once;
        else if (m == 2) ++twice;
        else fail(ErrorCode::InvalidInput, "walk uses an edge more than twice");
    }
    BoundaryClassification out;
    if (twice == 0) {
        out.kind = BoundaryClassification::Kind::Cycle;
        out.cycle_length = once;
        return out;
    }
    if (once == 0) {
        out.kind = BoundaryClassification::Kind::Path;
        out.path_length = twice;
        if (2 * out.path_length != L)
            fail(ErrorCode::InvalidInput, "doubled walk is not a doubled path");
        return out;
    }
    out.kind = BoundaryClassification::Kind::PathPlusCycle;
    out.path_length = twice;
    out.cycle_length = once;
    if (2 * out.path_length + out.cycle_length != L)
        fail(ErrorCode::InvalidInput, "walk multiplicities inconsistent");

    // The cycle block's darts are contiguous in the walk; its subwalk,
    // closed at the cut vertex, is the boundary walk of B.
    auto edge_once = [&](int i) {
        Vertex u = walk.vertices[i], v = walk.vertices[(i + 1) % L];
        return mult[{std::min(u, v), std::max(u, v)}] == 1;
    };
    int start = -1;
    for (int i = 0; i < L; ++i)
        if (edge_once(i) && !edge_once((i - 1 + L) % L)) start = i;
    if (start < 0) fail(ErrorCode::InvalidInput, "cycle block not found");
    for (int i = 0; i < out.cycle_length; ++i)
        if (!edge_once((start + i) % L))
            fail(ErrorCode::InvalidInput, "cycle block is not contiguous");
    OrientedWalk b;
    for (int i = 0; i < out.cycle_length; ++i)
        b.vertices.push_back(walk.vertices[(start + i) % L]);
    fill_rdeg(g, b);
    out.cycle_marginal = b.marginal_total();
    if (out.cycle_marginal < 1)
        fail(ErrorCode::LemmaViolation, "lollipop cycle has marginal degree < 1");
    return out;
}

NextLayer next_layer(const EmbeddedGraph& g, const std::vector<Vertex>& cycle,
                     int side_face) {
    for (Vertex c : cycle)
        if (g.degree(c) != 6)
            fail(ErrorCode::TurnPreconditionViolated,
                 "cycle vertex " + std::to_string(c) + " has degree " +
                     std::to_string(g.degree(c)));
    auto ce = cycle_edge_list(g, cycle);
    SubgraphRegions cregions(g, ce.edges);
    int inside = cregions.region_of_face(side_face);
    int outside = -1;
    for (int f = 0; f < face_count(g); ++f)
        if (cregions.region_of_face(f) != inside) {
            outside = cregions.region_of_face(f);
            break;
        }
    if (outside < 0) fail(ErrorCode::InvalidInput, "cycle does not separate the sphere");
    OrientedWalk cwalk = walk_with_exterior_right(g, cregions, outside);
    // balanced census: the layer walk keeps the cycle's length only when
    // the cycle's own marginal degree vanishes
    if (!cwalk.turn_census_ok() || cwalk.marginal_total() != 0)
        fail(ErrorCode::TurnPreconditionViolated, "cycle turn census not (i) or (ii)");

    auto nl = inner_neighbor_layer(g, cycle, side_face);
    NextLayer out;
    out.layer = nl.layer;
    if (nl.layer.size() == 1) {
        // walk of length 0: a single vertex bounds itself
        out.is_cycle = false;
        out.all_degree_six = g.degree(nl.layer[0]) == 6;
        out.pattern_matches = false;
        return out;
    }
    const auto& face_ids = g.face_left_of_darts();
    Vertex c0 = cycle[0], c1 = cycle[1];
    int f = face_ids[c0][g.slot_of(c0, c1)];
    if (cregions.region_of_face(f) != inside) f = face_ids[c1][g.slot_of(c1, c0)];
    out.walk = boundary_walk(g, nl.layer, f);

    if (out.walk.length() != static_cast<int>(cycle.size()))
        fail(ErrorCode::LemmaViolation, "next layer walk length differs from |C|");

    // cyclic turn-sign correspondence
    auto signs = [](const OrientedWalk& w) {
        std::vector<int> s;
        for (int m : w.marginal) s.push_back(m > 0 ? 1 : (m < 0 ? -1 : 0));
        return s;
    };
    auto sc = signs(cwalk), sw = signs(out.walk);
    const int L = static_cast<int>(sc.size());
    out.pattern_matches = false;
    for (int off = 0; off < L && !out.pattern_matches; ++off) {
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) ok = sc[i] == sw[(i + off) % L];
        if (ok) out.pattern_matches = true;
    }
    if (!out.pattern_matches)
        fail(ErrorCode::LemmaViolation, "next layer turn pattern differs");

    std::set<Vertex> distinct(out.walk.vertices.begin(), out.walk.vertices.end());
    out.is_cycle = static_cast<int>(distinct.size()) == out.walk.length();
    out.all_degree_six = std::all_of(nl.layer.begin(), nl.layer.end(),
                                     [&](Vertex v) { return g.degree(v) == 6; });
    if (out.all_degree_six && !out.is_cycle)
        fail(ErrorCode::LemmaViolation, "all-degree-6 layer walk is not a cycle");
    return out;
}

bool sample_outerplane_subgraph(const EmbeddedGraph& g, std::mt19937& rng, int max_size,
                                std::vector<Vertex>& members_out, int& outer_face_out) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };
    std::set<Vertex> grown;
    std::vector<Vertex> frontier;
    Vertex start = pick(g.vertex_count());
    grown.insert(start);
    frontier.push_back(start);
    int target = 2 + pick(std::max(1, max_size - 1));
    while (static_cast<int>(grown.size()) < target) {
        Vertex v = frontier[pick(static_cast<int>(frontier.size()))];
        const auto& nb = g.neighbors(v);
        Vertex u = nb[pick(static_cast<int>(nb.size()))];
        if (grown.insert(u).second) frontier.push_back(u);
    }
    members_out.assign(grown.begin(), grown.end());
    if (members_out.size() < 2) return false;

    auto mask = member_mask(g, members_out);
    SubgraphRegions regions(g, mask);
    int nfaces = static_cast<int>(g.faces().size());
    for (int r = 0; r < regions.region_count(); ++r) {
        if (!regions.all_members_on_region(r)) continue;
        // there must be exactly one boundary walk on that region (the
        // subgraph is connected), else boundary_walk would reject
        int walks_here = 0;
        for (const auto& w : regions.boundary_walks()) walks_here += (w.region == r);
        if (walks_here != 1) continue;
        for (int f = 0; f < nfaces; ++f) {
            if (regions.region_of_face(f) == r) {
                outer_face_out = f;
                return true;
            }
        }
    }
    return false;
}

LemmaSuiteReport verify_lemmas(const EmbeddedGraph& g, int samples, uint32_t seed) {
    LemmaSuiteReport rep;
    std::mt19937 rng(seed);
    int guard = samples * 50;
    while (rep.samples < samples && guard-- > 0) {
        std::vector<Vertex> members;
        int outer = -1;
        if (!sample_outerplane_subgraph(g, rng, 12, members, outer)) continue;
        ++rep.samples;
        try {
            auto l1 = verify_lemma1(g, members, outer);
            if (l1.equal) ++rep.lemma1_pass;
            else ++rep.lemma1_fail;
        } catch (const Error&) {
            ++rep.lemma1_fail;
        }
        try {
            layer_sizes(g, members, outer);
            ++rep.lemma3_pass;
        } catch (const Error&) {
            ++rep.lemma3_fail;
        }
        try {
            auto w = boundary_walk(g, members, outer);
            bool ok = true;
            for (int m : w.marginal) ok = ok && m >= -2 && m <= 3;
            if (ok) ++rep.walk_range_pass;
            else ++rep.walk_range_fail;
        } catch (const Error&) {
            ++rep.walk_range_fail;
        }
    }
    return rep;
}

} // namespace hexdom
