#include "hexdom/surgery.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "hexdom/domination.hpp"

namespace hexdom {

Dart Disc::face_next(const Dart& d) const {
    Vertex head = rot[d.tail][d.slot];
    int back = twin[d.tail][d.slot];
    return Dart{head, (back + 1) % degree(head)};
}

std::vector<FaceWalk> Disc::faces() const {
    std::vector<FaceWalk> out;
    std::vector<std::vector<char>> seen(n);
    for (Vertex v = 0; v < n; ++v) seen[v].assign(rot[v].size(), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (int s = 0; s < degree(v); ++s) {
            if (seen[v][s]) continue;
            FaceWalk f;
            Dart d{v, s};
            do {
                seen[d.tail][d.slot] = 1;
                f.darts.push_back(d);
                d = face_next(d);
            } while (!(d == Dart{v, s}));
            out.push_back(std::move(f));
        }
    }
    return out;
}

bool Disc::has_parallel_edges() const {
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> nb(rot[v].begin(), rot[v].end());
        if (static_cast<int>(nb.size()) != degree(v)) return true;
    }
    return false;
}

EmbeddedGraph Disc::to_embedded() const {
    if (has_parallel_edges())
        fail(ErrorCode::InvalidInput, "disc carries parallel edges");
    return EmbeddedGraph::build(n, rot);
}

Disc Disc::from_embedded(const EmbeddedGraph& g) {
    Disc d;
    d.n = g.vertex_count();
    d.rot = g.rotations();
    d.twin.resize(d.n);
    for (Vertex v = 0; v < d.n; ++v) {
        d.twin[v].resize(g.degree(v));
        for (int s = 0; s < g.degree(v); ++s)
            d.twin[v][s] = g.slot_of(g.neighbors(v)[s], v);
    }
    return d;
}

std::vector<Vertex> CutDisc::tree_copies() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < disc.n; ++v)
        if (tree_copy[v]) out.push_back(v);
    return out;
}

// ── cutting ─────────────────────────────────────────────────────────

CutDisc cut_along_tree(const EmbeddedGraph& g, const SteinerTree& t) {
    const int n = g.vertex_count();
    if (t.edge_count() != t.size() - 1 || t.size() < 2)
        fail(ErrorCode::NotATree, "cut requires a tree with at least one edge");
    std::vector<std::vector<Vertex>> tadj(n);
    for (auto& [a, b] : t.edges) {
        if (!g.adjacent(a, b))
            fail(ErrorCode::NotATree,
                 "tree edge " + std::to_string(a) + "-" + std::to_string(b) + " not in host");
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    {
        // connectivity of the tree
        std::set<Vertex> seen{t.vertices[0]};
        std::deque<Vertex> q{t.vertices[0]};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex u : tadj[v])
                if (seen.insert(u).second) q.push_back(u);
        }
        if (seen.size() != t.vertices.size())
            fail(ErrorCode::NotATree, "tree edge set is disconnected");
    }
    std::vector<char> in_tree(n, 0);
    for (Vertex v : t.vertices) in_tree[v] = 1;

    CutDisc cd;
    cd.original_n = n;
    cd.tree_size = t.size();

    // id layout: iterate original vertices; tree vertices expand into
    // deg_T copies, one per corner arc between consecutive tree darts.
    std::vector<int> base_id(n, -1);
    std::vector<std::vector<int>> tree_slots(n); // slots of tree edges in rot(v), ascending
    int next_id = 0;
    for (Vertex v = 0; v < n; ++v) {
        base_id[v] = next_id;
        if (!in_tree[v]) {
            ++next_id;
            continue;
        }
        for (int s = 0; s < g.degree(v); ++s) {
            Vertex u = g.neighbors(v)[s];
            bool te = std::binary_search(t.edges.begin(), t.edges.end(),
                                         std::make_pair(std::min(u, v), std::max(u, v)));
            if (te) tree_slots[v].push_back(s);
        }
        next_id += static_cast<int>(tree_slots[v].size());
    }
    cd.disc.n = next_id;
    cd.copy_map.assign(next_id, -1);
    cd.tree_copy.assign(next_id, 0);

    // arc lookup: which copy of v owns host slot s (strictly inside arc j,
    // or the arc's bounding tree darts)
    auto arc_of = [&](Vertex v, int s) {
        const auto& ts = tree_slots[v];
        const int d = static_cast<int>(ts.size());
        // arc j runs from ts[j] (inclusive) up to ts[(j+1)%d] (exclusive)
        for (int j = 0; j < d; ++j) {
            int from = ts[j], to = ts[(j + 1) % d];
            if (from < to) {
                if (s >= from && s < to) return j;
            } else { // wraps
                if (s >= from || s < to) return j;
            }
        }
        return 0; // d == 1: single arc
    };

    // edge instance keys; tree edges carry a copy index
    struct Entry {
        Vertex other;
        long long key;
    };
    auto ekey = [&](Vertex a, Vertex b, int copy) {
        Vertex lo = std::min(a, b), hi = std::max(a, b);
        return ((static_cast<long long>(lo) * n + hi) << 1) | copy;
    };
    std::vector<std::vector<Entry>> entries(next_id);

    for (Vertex v = 0; v < n; ++v) {
        if (!in_tree[v]) {
            auto& es = entries[base_id[v]];
            cd.copy_map[base_id[v]] = v;
            for (int s = 0; s < g.degree(v); ++s) {
                Vertex u = g.neighbors(v)[s];
                Vertex target = in_tree[u] ? base_id[u] + arc_of(u, g.slot_of(u, v))
                                           : base_id[u];
                es.push_back({target, ekey(v, u, 0)});
            }
            continue;
        }
        const auto& ts = tree_slots[v];
        const int d = static_cast<int>(ts.size());
        for (int j = 0; j < d; ++j) {
            Vertex me = base_id[v] + j;
            cd.copy_map[me] = v;
            cd.tree_copy[me] = 1;
            auto& es = entries[me];
            int from = ts[j], to = ts[(j + 1) % d];
            // opening tree dart: the tree edge at `from`; this copy starts
            // at it, so it takes the copy labeled by the arc on THIS side.
            {
                Vertex u = g.neighbors(v)[from];
                int q = g.slot_of(u, v);
                // copy of u whose arc ENDS at q: arc (j'(q) - 1)
                int ju = arc_of(u, q); // arc starting at q
                int du = static_cast<int>(tree_slots[u].size());
                int ju_end = (ju - 1 + du) % du;
                es.push_back({base_id[u] + ju_end, ekey(v, u, 0)});
            }
            // interior non-tree darts of the arc
            for (int s = (from + 1) % g.degree(v); s != to; s = (s + 1) % g.degree(v)) {
                Vertex u = g.neighbors(v)[s];
                Vertex target = in_tree[u] ? base_id[u] + arc_of(u, g.slot_of(u, v))
                                           : base_id[u];
                es.push_back({target, ekey(v, u, 0)});
            }
            // closing tree dart: the tree edge at `to`, other copy.
            {
                Vertex u = g.neighbors(v)[to];
                int q = g.slot_of(u, v);
                int ju = arc_of(u, q); // copy of u starting at q
                es.push_back({base_id[u] + ju, ekey(v, u, 1)});
            }
        }
    }

    // tree-edge copy keys must agree from both sides: recompute so that
    // both endpoints name the same instance. The opening dart at v pairs
    // with the closing dart at u, so flip the copy bit consistently by
    // ordering on (lo, hi): the instance on the lo-side-opening gets 0.
    // Simpler: match by (unordered pair, side), where side is computed
    // from the lower endpoint's view.
    // Rebuild keys: for tree edge (u,v), instance A = (opening at lo) =
    // (closing at hi); instance B = (closing at lo) = (opening at hi).
    for (Vertex v = 0; v < n; ++v) {
        if (!in_tree[v]) continue;
        const auto& ts = tree_slots[v];
        const int d = static_cast<int>(ts.size());
        for (int j = 0; j < d; ++j) {
            Vertex me = base_id[v] + j;
            auto& es = entries[me];
            // first entry is the opening dart, last is the closing dart
            Vertex u_open = g.neighbors(v)[ts[j]];
            Vertex u_close = g.neighbors(v)[ts[(j + 1) % d]];
            es.front().key = ekey(v, u_open, v < u_open ? 0 : 1);
            es.back().key = ekey(v, u_close, v < u_close ? 1 : 0);
        }
    }

    // build rotation + twins by matching keys
    cd.disc.rot.resize(next_id);
    cd.disc.twin.assign(next_id, {});
    std::map<std::pair<long long, Vertex>, std::pair<Vertex, int>> open_slots;
    for (Vertex v = 0; v < next_id; ++v) {
        cd.disc.rot[v].resize(entries[v].size());
        cd.disc.twin[v].assign(entries[v].size(), -1);
        for (int s = 0; s < static_cast<int>(entries[v].size()); ++s)
            cd.disc.rot[v][s] = entries[v][s].other;
    }
    for (Vertex v = 0; v < next_id; ++v) {
        for (int s = 0; s < static_cast<int>(entries[v].size()); ++s) {
            if (cd.disc.twin[v][s] >= 0) continue;
            long long key = entries[v][s].key;
            Vertex u = entries[v][s].other;
            // find the matching unmatched slot at u with the same key
            int match = -1;
            for (int q = 0; q < static_cast<int>(entries[u].size()); ++q) {
                if (entries[u][q].key == key && entries[u][q].other == v &&
                    cd.disc.twin[u][q] < 0 && !(u == v && q == s)) {
                    match = q;
                    break;
                }
            }
            if (match < 0)
                fail(ErrorCode::LemmaViolation, "cut pairing failed at copy " +
                                                     std::to_string(v));
            cd.disc.twin[v][s] = match;
            cd.disc.twin[u][match] = s;
        }
    }

    // type invariants
    if (cd.disc.n != n + t.size() - 2)
        fail(ErrorCode::LemmaViolation, "cut disc vertex count off");
    auto faces = cd.disc.faces();
    int non_tri = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (faces[i].length() != 3) {
            if (non_tri >= 0)
                fail(ErrorCode::LemmaViolation, "cut disc has several non-triangles");
            non_tri = i;
        }
    }
    if (non_tri < 0) fail(ErrorCode::LemmaViolation, "cut disc lost its boundary face");
    cd.outer_face = non_tri;
    const auto& ft = faces[non_tri];
    if (ft.length() != 2 * t.size() - 2)
        fail(ErrorCode::LemmaViolation, "boundary face length is not 2n(T)-2");
    std::set<Vertex> on_ft;
    for (const Dart& d : ft.darts) {
        on_ft.insert(d.tail);
        if (!cd.tree_copy[d.tail])
            fail(ErrorCode::LemmaViolation, "non-copy vertex on the boundary face");
    }
    if (static_cast<int>(on_ft.size()) != ft.length())
        fail(ErrorCode::LemmaViolation, "boundary face walk repeats a vertex");
    return cd;
}

// ── developing map ──────────────────────────────────────────────────

Development develop(const Disc& disc, int outer_face, DevelopOrder order) {
    auto faces = disc.faces();
    if (outer_face < 0 || outer_face >= static_cast<int>(faces.size()))
        fail(ErrorCode::InvalidInput, "bad outer face id");
    std::vector<char> on_outer(disc.n, 0);
    for (const Dart& d : faces[outer_face].darts) on_outer[d.tail] = 1;
    for (Vertex v = 0; v < disc.n; ++v)
        if (!on_outer[v] && disc.degree(v) != 6)
            fail(ErrorCode::InconsistentDevelopment,
                 "interior vertex " + std::to_string(v) + " has degree " +
                     std::to_string(disc.degree(v)));
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != outer_face && faces[i].length() != 3)
            fail(ErrorCode::InconsistentDevelopment, "interior face is not a triangle");

    // face id per dart for crossing edges
    std::vector<std::vector<int>> face_of(disc.n);
    for (Vertex v = 0; v < disc.n; ++v) face_of[v].assign(disc.degree(v), -1);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        for (const Dart& d : faces[i].darts) face_of[d.tail][d.slot] = i;

    Development dev;
    dev.coord.assign(disc.n, LatticeCoord{0, 0});
    std::vector<char> placed(disc.n, 0);
    std::vector<char> face_done(faces.size(), 0);

    int anchor = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != outer_face) {
            anchor = i;
            break;
        }
    if (anchor < 0) fail(ErrorCode::InvalidInput, "disc has no interior face");
    dev.anchor_face = anchor;

    // anchor face: walk order keeps the face to the right, so (v0,v1,v2)
    // maps onto the clockwise lattice triangle (0,0),(1,1),(1,0) with the
    // lowest-id corner at the origin.
    {
        const auto& darts = faces[anchor].darts;
        std::array<Vertex, 3> tri{darts[0].tail, darts[1].tail, darts[2].tail};
        int lo = 0;
        for (int i = 1; i < 3; ++i)
            if (tri[i] < tri[lo]) lo = i;
        std::array<LatticeCoord, 3> pos{{{0, 0}, {1, 1}, {1, 0}}};
        for (int i = 0; i < 3; ++i) {
            Vertex v = tri[(lo + i) % 3];
            dev.coord[v] = pos[i];
            placed[v] = 1;
        }
        face_done[anchor] = 1;
    }

    std::deque<int> queue{anchor};
    auto settle = [&](Vertex v, LatticeCoord c) {
        if (!placed[v]) {
            dev.coord[v] = c;
            placed[v] = 1;
        } else if (!(dev.coord[v] == c)) {
            fail(ErrorCode::InconsistentDevelopment,
                 "vertex " + std::to_string(v) + " receives two coordinates");
        }
    };
    while (!queue.empty()) {
        int f;
        if (order == DevelopOrder::Bfs) {
            f = queue.front();
            queue.pop_front();
        } else {
            f = queue.back();
            queue.pop_back();
        }
        for (const Dart& d : faces[f].darts) {
            Vertex a = d.tail;
            Vertex b = disc.rot[d.tail][d.slot];
            Dart rev{b, disc.twin[d.tail][d.slot]};
            int nf = face_of[rev.tail][rev.slot];
            if (nf == outer_face || face_done[nf]) continue;
            // third vertex of f on edge (a,b)
            Vertex s = -1;
            for (const Dart& e : faces[f].darts)
                if (e.tail != a && e.tail != b) s = e.tail;
            Vertex w = -1;
            for (const Dart& e : faces[nf].darts)
                if (e.tail != a && e.tail != b) w = e.tail;
            if (s < 0 || w < 0)
                fail(ErrorCode::InconsistentDevelopment, "degenerate face pair");
            settle(w, dev.coord[a] + dev.coord[b] - dev.coord[s]);
            face_done[nf] = 1;
            queue.push_back(nf);
        }
    }
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != outer_face && !face_done[i])
            fail(ErrorCode::InconsistentDevelopment, "disc interior is not connected");
    for (Vertex v = 0; v < disc.n; ++v)
        if (!placed[v])
            fail(ErrorCode::InconsistentDevelopment,
                 "vertex " + std::to_string(v) + " never placed");
    return dev;
}

int min_coincident_distance(const Disc& disc, const Development& dev) {
    std::unordered_map<long long, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < disc.n; ++v) {
        long long key = (static_cast<long long>(dev.coord[v].x) << 22) ^
                        (dev.coord[v].y + (1 << 20));
        groups[key].push_back(v);
    }
    int best = -1;
    for (auto& [key, verts] : groups) {
        if (verts.size() < 2) continue;
        for (Vertex src : verts) {
            // BFS in the disc
            std::vector<int> dist(disc.n, -1);
            std::deque<Vertex> q{src};
            dist[src] = 0;
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop_front();
                for (Vertex u : disc.rot[v])
                    if (dist[u] < 0) {
                        dist[u] = dist[v] + 1;
                        q.push_back(u);
                    }
            }
            for (Vertex other : verts)
                if (other != src && (best < 0 || dist[other] < best)) best = dist[other];
        }
    }
    return best;
}

Pullback pullback_pattern(const EmbeddedGraph& g, const CutDisc& cd, const Development& dev,
                          const PatternClass& pattern) {
    Pullback out;
    std::set<Vertex> d;
    int preimage = 0; // pattern preimage away from the tree copies
    for (Vertex v = 0; v < cd.disc.n; ++v) {
        if (!in_pattern(dev.coord[v], pattern)) continue;
        if (cd.tree_copy[v]) continue;
        ++preimage;
        d.insert(cd.copy_map[v]);
    }
    out.preimage_size = preimage;
    // every original tree vertex joins D
    for (Vertex v = 0; v < cd.disc.n; ++v)
        if (cd.tree_copy[v]) d.insert(cd.copy_map[v]);
    out.dominating_set.assign(d.begin(), d.end());

    long long lhs = 7LL * static_cast<long long>(out.dominating_set.size());
    long long rhs = static_cast<long long>(cd.original_n) + 8LL * cd.tree_size - 2;
    out.size_bound_ok = lhs <= rhs;
    if (!out.size_bound_ok)
        fail(ErrorCode::DominationFailure, "pullback exceeds the size bound");
    if (7LL * preimage > cd.disc.n)
        fail(ErrorCode::DominationFailure, "pattern preimage exceeds |V(G')|/7");

    auto check = is_dominating(g, out.dominating_set);
    if (!check.valid)
        fail(ErrorCode::DominationFailure,
             "pullback leaves " + std::to_string(check.uncovered.size()) +
                 " vertices uncovered");
    return out;
}

} // namespace hexdom
