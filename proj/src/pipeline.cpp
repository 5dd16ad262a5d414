#include "hexdom/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hexdom/marginal.hpp"
#include "hexdom/surgery.hpp"

namespace hexdom {

namespace {

/// One placement of a vertex in the unrolled ball: the coordinate plus
/// the rotation alignment (lattice direction of rotation slot 0).
struct BallState {
    Vertex v;
    LatticeCoord c;
    int slot0_dir;
};

/// Unroll the ball of radius `r` around x. States with |c| <= r-1 expand;
/// every lattice point within distance r of the origin receives a vertex.
BallDevelopment develop_ball(const EmbeddedGraph& g, Vertex x, int r) {
    BallDevelopment out;
    out.radius = r;
    out.well_defined = true;
    if (g.degree(x) != 6) {
        out.deficient = true;
        out.well_defined = false;
        return out;
    }
    std::map<std::pair<Vertex, LatticeCoord>, int> seen_state;
    std::deque<BallState> queue;
    auto push_state = [&](Vertex v, LatticeCoord c, int slot0_dir) {
        auto key = std::make_pair(v, c);
        auto it = seen_state.find(key);
        if (it != seen_state.end()) {
            if (it->second != slot0_dir) out.well_defined = false;
            return;
        }
        seen_state[key] = slot0_dir;
        queue.push_back({v, c, slot0_dir});
        auto at = out.vertex_at.find(c);
        if (at == out.vertex_at.end()) out.vertex_at[c] = v;
        else if (at->second != v) out.well_defined = false;
        out.coords_of[v].push_back(c);
    };
    push_state(x, {0, 0}, 0);
    while (!queue.empty()) {
        BallState st = queue.front();
        queue.pop_front();
        if (lattice_distance({0, 0}, st.c) >= r) continue;
        if (g.degree(st.v) != 6) {
            out.deficient = true;
            continue;
        }
        auto dirs = lattice_neighbors(st.c);
        for (int j = 0; j < 6; ++j) {
            int dir = (st.slot0_dir + j) % 6;
            Vertex u = g.neighbors(st.v)[j];
            LatticeCoord cu = dirs[dir];
            // the back edge at u points opposite to dir
            int back_slot = g.slot_of(u, st.v);
            int back_dir = (dir + 3) % 6;
            int u_slot0 = ((back_dir - back_slot) % 6 + 6) % 6;
            push_state(u, cu, u_slot0);
        }
    }
    // collect conflicts among placements within the ball
    for (auto& [v, cs] : out.coords_of) {
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j)
                out.identifications.emplace_back(cs[i], cs[j]);
    }
    for (auto& [c, v] : out.vertex_at) {
        for (Vertex u : g.neighbors(v)) {
            auto it = out.coords_of.find(u);
            if (it == out.coords_of.end()) continue;
            for (const auto& cu : it->second) {
                if (!lattice_adjacent(c, cu) && c < cu)
                    out.wrap_edges.emplace_back(c, cu);
            }
        }
    }
    std::sort(out.identifications.begin(), out.identifications.end());
    out.identifications.erase(
        std::unique(out.identifications.begin(), out.identifications.end()),
        out.identifications.end());
    std::sort(out.wrap_edges.begin(), out.wrap_edges.end());
    out.wrap_edges.erase(std::unique(out.wrap_edges.begin(), out.wrap_edges.end()),
                         out.wrap_edges.end());
    return out;
}

/// Is the radius-i ball a triangulated hexagon: development well defined
/// and injective, no wrap edges, every ball vertex of degree 6.
bool ball_is_hexagon(const EmbeddedGraph& g, Vertex x, int i, BallDevelopment* dev_out) {
    auto dev = develop_ball(g, x, i);
    bool ok = dev.well_defined && !dev.deficient && dev.identifications.empty() &&
              dev.wrap_edges.empty();
    if (ok) {
        for (auto& [c, v] : dev.vertex_at)
            if (g.degree(v) != 6) ok = false;
        // the whole ball must be placed: count matches BFS ball
        auto dist = g.bfs({x});
        int ball = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dist.dist[v] >= 0 && dist.dist[v] <= i) ++ball;
        if (static_cast<int>(dev.vertex_at.size()) != ball) ok = false;
        // degrees below the rim guarantee edge-exactness except among rim
        // vertices, which the wrap-edge scan already covered
    }
    if (dev_out) *dev_out = std::move(dev);
    return ok;
}

} // namespace

HexagonRadius hexagon_radius(const EmbeddedGraph& g, Vertex x) {
    HexagonRadius out;
    int i = 0;
    if (g.degree(x) != 6) {
        out.r = 0;
        out.ball = develop_ball(g, x, 0);
        return out;
    }
    while (true) {
        BallDevelopment dev;
        if (!ball_is_hexagon(g, x, i, &dev)) {
            out.r = i;
            out.ball = std::move(dev);
            break;
        }
        ++i;
        if (i > g.vertex_count()) fail(ErrorCode::InvalidInput, "hexagon radius diverged");
    }
    // corner decomposition of the radius-r fan walk, when the inner ball
    // is a clean hexagon
    if (out.r >= 1) {
        BallDevelopment inner;
        if (ball_is_hexagon(g, x, out.r - 1, &inner)) {
            // ring r-1 in cyclic order, from the inner development
            std::vector<Vertex> walk;
            bool good = true;
            if (out.r == 1) {
                for (Vertex u : g.neighbors(x)) walk.push_back(u);
            } else {
                int rr = out.r - 1;
                std::vector<LatticeCoord> ring;
                LatticeCoord c{rr, 0};
                auto dirs = lattice_neighbors({0, 0});
                // walk the hexagon ring counterclockwise: rr steps per side
                static const int side_dir[6] = {2, 3, 4, 5, 0, 1};
                for (int side = 0; side < 6; ++side)
                    for (int t = 0; t < rr; ++t) {
                        ring.push_back(c);
                        LatticeCoord step = dirs[side_dir[side]] - LatticeCoord{0, 0};
                        c = c + step;
                    }
                // fans of exterior neighbors along the ring
                std::vector<Vertex> ringv;
                for (const auto& rc : ring) {
                    auto it = inner.vertex_at.find(rc);
                    if (it == inner.vertex_at.end()) {
                        good = false;
                        break;
                    }
                    ringv.push_back(it->second);
                }
                if (good) {
                    const int L = static_cast<int>(ringv.size());
                    for (int t = 0; t < L && good; ++t) {
                        Vertex v = ringv[t];
                        Vertex prev = ringv[(t - 1 + L) % L];
                        Vertex next = ringv[(t + 1) % L];
                        if (g.degree(v) != 6) {
                            good = false;
                            break;
                        }
                        // exterior fan: the rotation arc strictly between
                        // the edge back to `prev` and the edge on to
                        // `next`; consecutive fans share one vertex, so
                        // skip each fan's first entry.
                        int pp = g.slot_of(v, prev);
                        int pn = g.slot_of(v, next);
                        int deg = g.degree(v);
                        int fan = ((pn - pp + deg) % deg) - 1;
                        for (int sdel = 2; sdel <= fan; ++sdel)
                            walk.push_back(g.neighbors(v)[(pp + sdel) % deg]);
                    }
                }
            }
            if (good && static_cast<int>(walk.size()) == 6 * out.r) {
                out.decomposition_ok = true;
                out.corner_walks.assign(6, {});
                for (int side = 0; side < 6; ++side) {
                    for (int t = 0; t <= out.r; ++t)
                        out.corner_walks[side].push_back(
                            walk[(side * out.r + t) % walk.size()]);
                }
            }
        }
    }
    return out;
}

namespace {

/// Straight-ish lattice path from `c` to the origin: decompose c over two
/// adjacent unit directions; at most one bend. Excludes endpoints oriented
/// from c toward origin.
std::vector<LatticeCoord> leg_to_origin(const LatticeCoord& c, bool first_variant) {
    // find nonneg decomposition c = alpha*d1 + beta*d2, d1,d2 adjacent dirs
    auto dirs = lattice_neighbors({0, 0});
    for (int i = 0; i < 6; ++i) {
        LatticeCoord d1 = dirs[i], d2 = dirs[(i + 1) % 6];
        // solve c = a*d1 + b*d2 over integers
        long long det = static_cast<long long>(d1.x) * d2.y - static_cast<long long>(d1.y) * d2.x;
        if (det == 0) continue;
        long long a = (static_cast<long long>(c.x) * d2.y - static_cast<long long>(c.y) * d2.x);
        long long b = (static_cast<long long>(d1.x) * c.y - static_cast<long long>(d1.y) * c.x);
        if (a % det || b % det) continue;
        a /= det;
        b /= det;
        if (a < 0 || b < 0) continue;
        std::vector<LatticeCoord> path;
        LatticeCoord cur = c;
        auto step = [&](const LatticeCoord& d, long long times) {
            for (long long t = 0; t < times; ++t) {
                cur = cur - d;
                path.push_back(cur);
            }
        };
        if (first_variant) {
            step(d1, a);
            step(d2, b);
        } else {
            step(d2, b);
            step(d1, a);
        }
        return path; // ends at origin
    }
    fail(ErrorCode::CaseContradiction, "coordinate admits no two-direction decomposition");
}

int sector_of(const LatticeCoord& c) {
    // which of the six 60-degree sectors contains c (ties to the lower)
    auto dirs = lattice_neighbors({0, 0});
    for (int i = 0; i < 6; ++i) {
        LatticeCoord d1 = dirs[i], d2 = dirs[(i + 1) % 6];
        long long det = static_cast<long long>(d1.x) * d2.y - static_cast<long long>(d1.y) * d2.x;
        long long a = (static_cast<long long>(c.x) * d2.y - static_cast<long long>(c.y) * d2.x);
        long long b = (static_cast<long long>(d1.x) * c.y - static_cast<long long>(d1.y) * c.x);
        if (det < 0) {
            det = -det;
            a = -a;
            b = -b;
        }
        if (a >= 0 && b >= 0) return i;
    }
    return 0;
}

} // namespace

std::vector<Vertex> find_c0(const EmbeddedGraph& g, Vertex x, const HexagonRadius& hr,
                            int* q_out) {
    const auto& ball = hr.ball;
    if (hr.r < 1 || ball.deficient || !ball.well_defined)
        fail(ErrorCode::CaseContradiction,
             "ball around " + std::to_string(x) + " is deficient or ambiguous");

    struct Candidate {
        LatticeCoord c1, c2;
        bool edge_case; // case (i): close with an edge
    };
    std::vector<Candidate> cands;
    for (auto& [a, b] : ball.identifications) cands.push_back({a, b, false});
    for (auto& [a, b] : ball.wrap_edges) cands.push_back({a, b, true});
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        int ra = std::max(lattice_distance({0, 0}, a.c1), lattice_distance({0, 0}, a.c2));
        int rb = std::max(lattice_distance({0, 0}, b.c1), lattice_distance({0, 0}, b.c2));
        if (ra != rb) return ra < rb;
        if (!(a.c1 == b.c1)) return a.c1 < b.c1;
        return a.c2 < b.c2;
    });

    for (const auto& cand : cands) {
        for (int va = 0; va < 2; ++va) {
            for (int vb = 0; vb < 2; ++vb) {
                // lattice cycle: c1 -> origin -> c2 (+ closing edge)
                std::vector<LatticeCoord> coords{cand.c1};
                for (const auto& q : leg_to_origin(cand.c1, va == 0)) coords.push_back(q);
                auto leg2 = leg_to_origin(cand.c2, vb == 0); // c2 .. origin
                for (size_t i = leg2.size(); i-- > 1;) coords.push_back(leg2[i - 1]);
                coords.push_back(cand.c2);
                // lift through the ball development
                std::vector<Vertex> walk;
                bool ok = true;
                for (const auto& q : coords) {
                    auto it = ball.vertex_at.find(q);
                    if (it == ball.vertex_at.end()) {
                        ok = false;
                        break;
                    }
                    walk.push_back(it->second);
                }
                if (!ok) continue;
                if (!cand.edge_case) {
                    if (walk.front() != walk.back()) continue;
                    walk.pop_back();
                } else {
                    if (!g.adjacent(walk.back(), walk.front())) continue;
                }
                // cycle requirements
                if (static_cast<int>(walk.size()) > 2 * hr.r + 1) continue;
                if (static_cast<int>(walk.size()) < 3) continue;
                std::set<Vertex> uniq(walk.begin(), walk.end());
                if (uniq.size() != walk.size()) continue;
                bool adj_ok = true, deg_ok = true;
                for (size_t i = 0; i < walk.size(); ++i) {
                    Vertex u = walk[i], v = walk[(i + 1) % walk.size()];
                    if (!g.adjacent(u, v)) adj_ok = false;
                    if (g.degree(u) != 6) deg_ok = false;
                }
                if (!adj_ok || !deg_ok) continue;
                // turn census, neither sharp, balanced; both orientations
                bool census = false;
                for (int orient = 0; orient < 2 && !census; ++orient) {
                    std::vector<Vertex> seq = walk;
                    if (orient) std::reverse(seq.begin(), seq.end());
                    OrientedWalk cw;
                    cw.vertices = seq;
                    // fill rdeg by hand: reuse next_layer's helper through
                    // a tiny local computation
                    const int L = static_cast<int>(seq.size());
                    cw.rdeg.resize(L);
                    cw.marginal.resize(L);
                    cw.sharp.resize(L);
                    bool fine = true;
                    for (int i = 0; i < L && fine; ++i) {
                        Vertex v = seq[i];
                        Vertex prev = seq[(i - 1 + L) % L];
                        Vertex next = seq[(i + 1) % L];
                        int deg = g.degree(v);
                        int pp = g.slot_of(v, prev), pn = g.slot_of(v, next);
                        if (pp < 0 || pn < 0) {
                            fine = false;
                            break;
                        }
                        cw.rdeg[i] = ((pn - pp - 1) % deg + deg) % deg;
                        cw.marginal[i] = cw.rdeg[i] - 2;
                        int gap = ((pn - pp) % deg + deg) % deg;
                        cw.sharp[i] = (gap == 1 || gap == deg - 1) ? 1 : 0;
                    }
                    if (!fine) continue;
                    bool no_sharp_turn = true;
                    for (int i = 0; i < L; ++i)
                        if (cw.marginal[i] != 0 && cw.sharp[i]) no_sharp_turn = false;
                    if (cw.turn_census_ok() && cw.marginal_total() == 0 && no_sharp_turn)
                        census = true;
                }
                if (!census) continue;
                if (q_out) {
                    int d = (sector_of(cand.c2) - sector_of(cand.c1) + 6) % 6;
                    *q_out = std::min(d, 6 - d);
                }
                return walk;
            }
        }
    }
    fail(ErrorCode::CaseContradiction, "no admissible overlap cycle through " +
                                           std::to_string(x));
}

// ── pipeline orchestration ──────────────────────────────────────────

namespace {

struct GrownCylinder {
    CylinderSpec spec;
    std::vector<Vertex> labels;
    int overlap_q = -1;
};

/// Face of the host inside the region of `cycle` away from the previous
/// ring: the face left of the walk's first dart.
int away_face(const EmbeddedGraph& g, const std::vector<std::vector<int>>& face_ids,
              const OrientedWalk& w) {
    Vertex u = w.vertices[0], v = w.vertices[1];
    return face_ids[v][g.slot_of(v, u)];
}

std::vector<std::vector<Vertex>> grow_side(const EmbeddedGraph& g,
                                           const std::vector<std::vector<int>>& face_ids,
                                           const std::vector<Vertex>& c0, int side_face) {
    std::vector<std::vector<Vertex>> rings;
    std::vector<Vertex> cur = c0;
    int side = side_face;
    while (true) {
        NextLayer nx;
        try {
            nx = next_layer(g, cur, side);
        } catch (const Error&) {
            break;
        }
        if (!nx.is_cycle) break;
        rings.push_back(nx.walk.vertices);
        if (!nx.all_degree_six) break;
        side = away_face(g, face_ids, nx.walk);
        cur = nx.walk.vertices;
        if (static_cast<int>(rings.size()) > g.vertex_count()) break;
    }
    return rings;
}

std::optional<GrownCylinder> assemble_cylinder(const EmbeddedGraph& g,
                                               std::vector<std::vector<Vertex>> rings_in) {
    const int w = static_cast<int>(rings_in[0].size());
    const int L = static_cast<int>(rings_in.size()) - 1;
    if (L < 1) return std::nullopt;

    auto alignments = [&](const std::vector<Vertex>& cur, const std::vector<Vertex>& raw) {
        std::vector<std::vector<Vertex>> options;
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<Vertex> cand = raw;
            if (dir) std::reverse(cand.begin(), cand.end());
            for (int off = 0; off < w; ++off) {
                bool ok = true;
                for (int a = 0; a < w && ok; ++a)
                    ok = g.adjacent(cur[a], cand[(a + off) % w]);
                if (ok) {
                    std::vector<Vertex> aligned(w);
                    for (int a = 0; a < w; ++a) aligned[a] = cand[(a + off) % w];
                    options.push_back(std::move(aligned));
                }
            }
        }
        return options;
    };
    auto diag_pattern = [&](const std::vector<Vertex>& cur, const std::vector<Vertex>& nxt) {
        std::pair<std::set<int>, std::set<int>> p;
        for (int a = 0; a < w; ++a) {
            if (g.adjacent(cur[a], nxt[(a + 1) % w])) p.first.insert(a);
            if (g.adjacent(cur[a], nxt[(a - 1 + w) % w])) p.second.insert(a);
        }
        return p;
    };

    // the twist pattern is a column property, so every level must repeat
    // the pattern fixed by the first transition
    std::vector<std::vector<Vertex>> rings;
    bool assembled = false;
    for (const auto& first : alignments(rings_in[0], rings_in[1])) {
        auto pat = diag_pattern(rings_in[0], first);
        if (static_cast<int>(pat.first.size() + pat.second.size()) != w) continue;
        rings.assign(1, rings_in[0]);
        rings.push_back(first);
        bool ok = true;
        for (int b = 1; b < L && ok; ++b) {
            ok = false;
            for (const auto& opt : alignments(rings[b], rings_in[b + 1])) {
                if (diag_pattern(rings[b], opt) == pat) {
                    rings.push_back(opt);
                    ok = true;
                    break;
                }
            }
        }
        if (ok) {
            assembled = true;
            break;
        }
    }
    if (!assembled) return std::nullopt;
    // global shift and orientation so the diagonal pattern takes the
    // canonical form D+ = [0,k), D- = {0} + [k+1, w)
    for (int flip = 0; flip < 2; ++flip) {
        auto ring_at = [&](int b, int a) {
            int idx = flip ? ((w - a) % w) : a;
            return rings[b][idx];
        };
        std::set<int> dplus;
        for (int a = 0; a < w; ++a)
            if (g.adjacent(ring_at(0, a), ring_at(1, (a + 1) % w))) dplus.insert(a);
        int k = static_cast<int>(dplus.size());
        if (k >= w) continue; // mirrored reading; the flip handles it
        int sigma = -1;
        for (int s = 0; s < w && sigma < 0; ++s) {
            bool ok = true;
            for (int a = 0; a < w && ok; ++a) {
                bool want = ((a - s + w) % w) < k;
                ok = dplus.count(a) == static_cast<size_t>(want);
            }
            if (ok) sigma = s;
        }
        if (sigma < 0) continue;
        GrownCylinder out;
        out.spec = CylinderSpec{w, L, k};
        out.labels.assign(w * (L + 1), -1);
        for (int b = 0; b <= L; ++b)
            for (int a = 0; a < w; ++a)
                out.labels[out.spec.vertex(a, b)] = ring_at(b, (a + sigma) % w);
        // the completion verifies every edge; accept the first form that fits
        bool edges_ok = true;
        for (int a = 0; a < w && edges_ok; ++a)
            for (int b = 0; b <= L && edges_ok; ++b) {
                Vertex u = out.labels[out.spec.vertex(a, b)];
                for (const auto& nb : cylinder_label_neighbors(out.spec, a, b)) {
                    Vertex v = out.labels[out.spec.vertex(nb.a, nb.b)];
                    if (!g.adjacent(u, v)) edges_ok = false;
                }
            }
        if (edges_ok) return out;
    }
    return std::nullopt;
}

} // namespace

PipelineReport quarter_dominating_set(const EmbeddedGraph& g, const PipelineOptions& opts) {
    PipelineReport rep;
    rep.n = g.vertex_count();
    auto tri = g.is_sphere_triangulation();
    if (!tri.ok) fail(ErrorCode::InvalidInput, "input is not a sphere triangulation");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 6) fail(ErrorCode::InvalidInput, "maximum degree exceeds 6");
    if (g.vertex_count() < 4) fail(ErrorCode::InvalidInput, "need at least 4 vertices");

    rep.deficiency = deficiency_set(g);
    SteinerTree tree = min_steiner_tree(g, rep.deficiency);
    rep.steiner_size = tree.size();
    CleanPath clean = longest_clean_path(tree);
    rep.path_length = clean.length();
    rep.threshold_ok = 32LL * tree.size() <= 3LL * g.vertex_count() + 8;

    // branch 1: cut, develop, pull the pattern back, best residue
    std::optional<DominationResult> branch1;
    std::string branch1_err;
    if (tree.size() >= 2) {
        try {
            CutDisc cd = cut_along_tree(g, tree);
            Development dev = develop(cd);
            for (int r = 0; r < 7; ++r) {
                auto pb = pullback_pattern(g, cd, dev, PatternClass{r});
                if (!branch1 ||
                    static_cast<int>(pb.dominating_set.size()) < branch1->size) {
                    DominationResult dr;
                    dr.set = pb.dominating_set;
                    dr.size = static_cast<int>(pb.dominating_set.size());
                    dr.valid = true;
                    dr.provenance = "pattern-pullback";
                    branch1 = dr;
                    rep.residue = r;
                }
            }
            if (branch1) {
                BoundCheck bc;
                bc.numerator = g.vertex_count() + 8LL * tree.size() - 2;
                bc.denominator = 7;
                bc.holds = 7LL * branch1->size <= bc.numerator;
                rep.branch1_bound = bc;
                branch1->bound_checked = bc;
            }
        } catch (const Error& e) {
            branch1_err = e.what();
        }
    }

    // branch 2: hexagon radius, overlap cycle, cylinder growth
    std::optional<DominationResult> branch2;
    std::string branch2_err;
    bool want2 = opts.force_branch == 2 || (opts.force_branch == 0 && !rep.threshold_ok);
    if (want2) {
        try {
            auto hr = hexagon_radius(g, clean.middle);
            rep.hexagon_r = hr.r;
            auto c0 = find_c0(g, clean.middle, hr, &rep.overlap_q);
            const auto& face_ids = g.face_left_of_darts();
            // the two sides of c0
            std::vector<std::pair<Vertex, Vertex>> c0_edges;
            for (size_t i = 0; i < c0.size(); ++i)
                c0_edges.emplace_back(c0[i], c0[(i + 1) % c0.size()]);
            SubgraphRegions regions(g, c0_edges);
            int nfaces = static_cast<int>(g.faces().size());
            int fa = 0, fb = -1;
            int ra = regions.region_of_face(0);
            for (int f = 1; f < nfaces && fb < 0; ++f)
                if (regions.region_of_face(f) != ra) fb = f;
            if (fb < 0)
                fail(ErrorCode::CaseContradiction, "overlap cycle does not separate");
            auto ringsA = grow_side(g, face_ids, c0, fa);
            auto ringsB = grow_side(g, face_ids, c0, fb);
            std::vector<std::vector<Vertex>> rings;
            for (size_t i = ringsA.size(); i-- > 0;) rings.push_back(ringsA[i]);
            rings.push_back(c0);
            for (auto& r : ringsB) rings.push_back(r);
            auto grown = assemble_cylinder(g, std::move(rings));
            if (!grown) fail(ErrorCode::CaseContradiction, "ring stack is not a cylinder");
            rep.cylinder = grown->spec;
            auto res = cylinder_complete(g, grown->spec, grown->labels);
            rep.cylinder_bound = res.bound_checked;
            branch2 = res;
        } catch (const Error& e) {
            branch2_err = e.what();
        }
    }

    // selection + fallback ladder
    auto finish = [&](DominationResult r, const std::string& branch) {
        rep.result = std::move(r);
        rep.branch = branch;
        auto chk = is_dominating(g, rep.result.set);
        if (!chk.valid) fail(ErrorCode::DominationFailure, "pipeline produced invalid set");
        rep.quarter_bound.numerator = g.vertex_count();
        rep.quarter_bound.denominator = 4;
        rep.quarter_bound.holds = 4LL * rep.result.size <= g.vertex_count();
    };

    if (opts.force_branch == 2) {
        if (branch2) {
            finish(*branch2, "cylinder");
            return rep;
        }
    } else if (opts.force_branch == 1) {
        if (branch1) {
            finish(*branch1, "tree-cut");
            return rep;
        }
    } else if (rep.threshold_ok && branch1) {
        finish(*branch1, "tree-cut");
        return rep;
    } else if (branch2) {
        finish(*branch2, "cylinder");
        return rep;
    }

    // fallback: best valid among branch 1, greedy, exact
    rep.fallback_reason = branch2_err.empty() ? branch1_err : branch2_err;
    std::optional<DominationResult> best = branch1;
    auto consider = [&](const DominationResult& r) {
        if (!best || r.size < best->size) best = r;
    };
    consider(greedy(g));
    if (g.vertex_count() <= opts.exact_limit) consider(exact_gamma(g, std::nullopt, opts.exact_limit));
    finish(*best, "fallback");
    return rep;
}

} // namespace hexdom
