#include "hexdom/plane_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace hexdom {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::BadVertexId: return "BadVertexId";
        case ErrorCode::EmptySourceSet: return "EmptySourceSet";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotOuterplane: return "NotOuterplane";
        case ErrorCode::ChordPresent: return "ChordPresent";
        case ErrorCode::EmptyInterior: return "EmptyInterior";
        case ErrorCode::TurnPreconditionViolated: return "TurnPreconditionViolated";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::TooManyTerminals: return "TooManyTerminals";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::InconsistentDevelopment: return "InconsistentDevelopment";
        case ErrorCode::DominationFailure: return "DominationFailure";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::SpecOutOfRange: return "SpecOutOfRange";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::CaseContradiction: return "CaseContradiction";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

EmbeddedGraph EmbeddedGraph::build(int vertex_count,
                                   std::vector<std::vector<Vertex>> rotations) {
    if (vertex_count < 0 || static_cast<int>(rotations.size()) != vertex_count)
        fail(ErrorCode::BadVertexId,
             "rotations must list every vertex 0.." + std::to_string(vertex_count - 1));

    EmbeddedGraph g;
    g.n_ = vertex_count;
    g.rot_ = std::move(rotations);
    g.slot_index_.resize(vertex_count);

    long long dart_count = 0;
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& idx = g.slot_index_[v];
        idx.reserve(g.rot_[v].size());
        for (int s = 0; s < static_cast<int>(g.rot_[v].size()); ++s) {
            Vertex u = g.rot_[v][s];
            if (u < 0 || u >= vertex_count)
                fail(ErrorCode::BadVertexId,
                     "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(u));
            if (u == v)
                fail(ErrorCode::SelfLoop, "vertex " + std::to_string(v));
            idx.emplace_back(u, s);
        }
        std::sort(idx.begin(), idx.end());
        for (size_t i = 1; i < idx.size(); ++i)
            if (idx[i].first == idx[i - 1].first)
                fail(ErrorCode::DuplicateNeighbor,
                     "vertex " + std::to_string(v) + " lists neighbor " +
                         std::to_string(idx[i].first) + " twice");
        dart_count += static_cast<long long>(g.rot_[v].size());
    }
    for (Vertex v = 0; v < vertex_count; ++v)
        for (Vertex u : g.rot_[v])
            if (g.slot_of(u, v) < 0)
                fail(ErrorCode::AsymmetricAdjacency,
                     "edge " + std::to_string(v) + "-" + std::to_string(u) +
                         " missing at " + std::to_string(u));
    g.edge_count_ = static_cast<int>(dart_count / 2);
    return g;
}

int EmbeddedGraph::slot_of(Vertex v, Vertex nbr) const {
    const auto& idx = slot_index_[v];
    auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(nbr, -1));
    if (it != idx.end() && it->first == nbr) return it->second;
    return -1;
}

Dart EmbeddedGraph::face_next(const Dart& d) const {
    Vertex head = dart_head(d);
    int back = slot_of(head, d.tail);
    int deg = degree(head);
    return Dart{head, (back + 1) % deg};
}

const EmbeddedGraph::FaceCache& EmbeddedGraph::face_data() const {
    if (!face_cache_) {
        auto cache = std::make_shared<FaceCache>();
        std::vector<std::vector<char>> seen(n_);
        for (Vertex v = 0; v < n_; ++v) seen[v].assign(rot_[v].size(), 0);
        for (Vertex v = 0; v < n_; ++v) {
            for (int s = 0; s < degree(v); ++s) {
                if (seen[v][s]) continue;
                FaceWalk f;
                Dart d{v, s};
                do {
                    seen[d.tail][d.slot] = 1;
                    f.darts.push_back(d);
                    d = face_next(d);
                } while (!(d == Dart{v, s}));
                cache->faces.push_back(std::move(f));
            }
        }
        cache->ids.resize(n_);
        for (Vertex v = 0; v < n_; ++v) cache->ids[v].assign(rot_[v].size(), -1);
        for (int i = 0; i < static_cast<int>(cache->faces.size()); ++i)
            for (const Dart& d : cache->faces[i].darts) cache->ids[d.tail][d.slot] = i;
        face_cache_ = std::move(cache);
    }
    return *face_cache_;
}

const std::vector<FaceWalk>& EmbeddedGraph::faces() const { return face_data().faces; }

const std::vector<std::vector<int>>& EmbeddedGraph::face_left_of_darts() const {
    return face_data().ids;
}

bool EmbeddedGraph::connected() const {
    if (n_ == 0) return true;
    auto d = bfs({0});
    return std::none_of(d.dist.begin(), d.dist.end(),
                        [](int x) { return x == DistanceField::kUnreached; });
}

TriangulationReport EmbeddedGraph::is_sphere_triangulation() const {
    TriangulationReport rep;
    rep.connected = connected();
    auto fs = faces();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        if (fs[i].length() != 3) rep.non_triangle_faces.push_back(i);
    long long euler = static_cast<long long>(n_) - edge_count_ + static_cast<long long>(fs.size());
    rep.euler_ok = (euler == 2);
    rep.ok = rep.connected && rep.euler_ok && rep.non_triangle_faces.empty() && n_ >= 3;
    if (!rep.ok) {
        rep.detail.clear();
        if (!rep.connected) rep.detail += "not connected; ";
        if (!rep.euler_ok)
            rep.detail += "V-E+F=" + std::to_string(euler) + "; ";
        for (int f : rep.non_triangle_faces)
            rep.detail += "face " + std::to_string(f) + " has length " +
                          std::to_string(fs[f].length()) + "; ";
    }
    return rep;
}

DistanceField EmbeddedGraph::bfs(const std::vector<Vertex>& sources) const {
    if (sources.empty()) fail(ErrorCode::EmptySourceSet, "bfs requires a source");
    DistanceField f;
    f.sources = sources;
    f.dist.assign(n_, DistanceField::kUnreached);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        if (s < 0 || s >= n_) fail(ErrorCode::BadVertexId, "bfs source " + std::to_string(s));
        if (f.dist[s] != 0) {
            f.dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : rot_[v]) {
            if (f.dist[u] == DistanceField::kUnreached) {
                f.dist[u] = f.dist[v] + 1;
                q.push(u);
            }
        }
    }
    return f;
}

std::vector<int> EmbeddedGraph::degree_histogram() const {
    int maxd = 0;
    for (Vertex v = 0; v < n_; ++v) maxd = std::max(maxd, degree(v));
    std::vector<int> h(maxd + 1, 0);
    for (Vertex v = 0; v < n_; ++v) h[degree(v)]++;
    return h;
}

// ── SubgraphRegions ─────────────────────────────────────────────────

namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

SubgraphRegions::SubgraphRegions(const EmbeddedGraph& g, const std::vector<char>& in_subgraph)
    : g_(g), member_(in_subgraph) {
    std::vector<std::vector<char>> edge_mask(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        edge_mask[v].assign(g.degree(v), 0);
        if (!member_[v]) continue;
        for (int s = 0; s < g.degree(v); ++s)
            if (member_[g.neighbors(v)[s]]) edge_mask[v][s] = 1;
    }
    init(edge_mask);
}

SubgraphRegions::SubgraphRegions(const EmbeddedGraph& g,
                                 const std::vector<std::pair<Vertex, Vertex>>& edges)
    : g_(g), member_(g.vertex_count(), 0) {
    std::vector<std::vector<char>> edge_mask(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) edge_mask[v].assign(g.degree(v), 0);
    for (auto& [u, v] : edges) {
        int su = g.slot_of(u, v), sv = g.slot_of(v, u);
        if (su < 0 || sv < 0)
            fail(ErrorCode::BadVertexId,
                 "edge " + std::to_string(u) + "-" + std::to_string(v) + " not in host");
        edge_mask[u][su] = 1;
        edge_mask[v][sv] = 1;
        member_[u] = member_[v] = 1;
    }
    init(edge_mask);
}

void SubgraphRegions::init(const std::vector<std::vector<char>>& edge_mask) {
    const EmbeddedGraph& g = g_;
    const int n = g.vertex_count();
    const auto& face_id = g.face_left_of_darts();
    int nfaces = 0;
    for (Vertex v = 0; v < n; ++v)
        for (int id : face_id[v]) nfaces = std::max(nfaces, id + 1);

    // Host faces merge across every edge that is not an edge of the
    // subgraph.
    DSU dsu(std::max(nfaces, 1));
    for (Vertex v = 0; v < n; ++v) {
        for (int s = 0; s < g.degree(v); ++s) {
            Vertex u = g.neighbors(v)[s];
            if (u < v) continue;
            if (!edge_mask[v][s]) {
                int f1 = face_id[v][s];
                int f2 = face_id[u][g.slot_of(u, v)];
                dsu.unite(f1, f2);
            }
        }
    }
    // Compact region ids deterministically by smallest face id.
    region_of_face_.assign(nfaces, -1);
    std::vector<int> root_to_region(nfaces, -1);
    for (int f = 0; f < nfaces; ++f) {
        int r = dsu.find(f);
        if (root_to_region[r] < 0) root_to_region[r] = region_count_++;
        region_of_face_[f] = root_to_region[r];
    }

    region_of_vertex_.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (member_[v] || g.degree(v) == 0) continue;
        region_of_vertex_[v] = region_of_face_[face_id[v][0]];
    }

    // Boundary walks of the subgraph: trace faces of the filtered rotation
    // system; each walk belongs to the region of the host face left of its
    // first dart.
    std::vector<std::vector<Vertex>> sub_rot(n);
    std::vector<std::vector<int>> host_slot(n); // slot in g of each filtered entry
    for (Vertex v = 0; v < n; ++v) {
        if (!member_[v]) continue;
        for (int s = 0; s < g.degree(v); ++s) {
            if (edge_mask[v][s]) {
                sub_rot[v].push_back(g.neighbors(v)[s]);
                host_slot[v].push_back(s);
            }
        }
    }
    auto sub_slot_of = [&](Vertex v, Vertex nbr) {
        for (int s = 0; s < static_cast<int>(sub_rot[v].size()); ++s)
            if (sub_rot[v][s] == nbr) return s;
        return -1;
    };
    std::vector<std::vector<char>> seen(n);
    for (Vertex v = 0; v < n; ++v) seen[v].assign(sub_rot[v].size(), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (int s = 0; s < static_cast<int>(sub_rot[v].size()); ++s) {
            if (seen[v][s]) continue;
            BoundaryWalk w;
            w.region = region_of_face_[face_id[v][host_slot[v][s]]];
            Vertex cv = v;
            int cs = s;
            do {
                seen[cv][cs] = 1;
                w.vertices.push_back(cv);
                Vertex head = sub_rot[cv][cs];
                int back = sub_slot_of(head, cv);
                cv = head;
                cs = (back + 1) % static_cast<int>(sub_rot[head].size());
            } while (!(cv == v && cs == s));
            walks_.push_back(std::move(w));
        }
    }
}

std::vector<Vertex> SubgraphRegions::vertices_in_region(int region) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (!member_[v] && region_of_vertex_[v] == region) out.push_back(v);
    return out;
}

bool SubgraphRegions::all_members_on_region(int region) const {
    std::vector<char> on(g_.vertex_count(), 0);
    for (const auto& w : walks_)
        if (w.region == region)
            for (Vertex v : w.vertices) on[v] = 1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (member_[v] && !on[v]) return false;
    return true;
}

// ── Embedded isomorphism ────────────────────────────────────────────

bool embedded_isomorphic_rooted(const EmbeddedGraph& g, const Dart& dg,
                                const EmbeddedGraph& h, const Dart& dh,
                                std::vector<Vertex>* mapping_out) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<Vertex> map_gh(n, -1), map_hg(n, -1);
    // Map tail vertex and the rotation alignment; propagate by BFS over
    // vertices, aligning each rotation from the mapped dart.
    struct Item {
        Vertex vg;
        int sg;
        Vertex vh;
        int sh;
    };
    std::vector<Item> queue{{dg.tail, dg.slot, dh.tail, dh.slot}};
    map_gh[dg.tail] = dh.tail;
    map_hg[dh.tail] = dg.tail;
    size_t qi = 0;
    while (qi < queue.size()) {
        auto [vg, sg, vh, sh] = queue[qi++];
        int deg = g.degree(vg);
        if (deg != h.degree(vh)) return false;
        for (int i = 0; i < deg; ++i) {
            Vertex ug = g.neighbors(vg)[(sg + i) % deg];
            Vertex uh = h.neighbors(vh)[(sh + i) % deg];
            if (map_gh[ug] < 0 && map_hg[uh] < 0) {
                map_gh[ug] = uh;
                map_hg[uh] = ug;
                int back_g = g.slot_of(ug, vg);
                int back_h = h.slot_of(uh, vh);
                queue.push_back({ug, back_g, uh, back_h});
            } else if (map_gh[ug] != uh) {
                return false;
            }
        }
    }
    // Require totality (both graphs connected through the root component).
    for (Vertex v = 0; v < n; ++v)
        if (map_gh[v] < 0) return false;
    // Edge sets must correspond (rotation propagation already forces it,
    // but verify to be safe).
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (!h.adjacent(map_gh[v], map_gh[u])) return false;
    if (mapping_out) *mapping_out = map_gh;
    return true;
}

bool embedded_isomorphic(const EmbeddedGraph& g, const EmbeddedGraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    if (g.vertex_count() == 0) return true;
    if (g.edge_count() == 0) return g.vertex_count() == h.vertex_count();
    Dart dg{0, 0};
    Vertex v0 = 0;
    while (v0 < g.vertex_count() && g.degree(v0) == 0) ++v0;
    dg = Dart{v0, 0};
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        for (int s = 0; s < h.degree(v); ++s)
            if (embedded_isomorphic_rooted(g, dg, h, Dart{v, s})) return true;
    return false;
}

EmbeddedGraph embedded_from_faces(int vertex_count,
                                  const std::vector<std::array<Vertex, 3>>& tris) {
    // succ[v][a] = b whenever some face reads (v, a, b): going
    // counterclockwise around v, edge va is immediately followed by vb.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(vertex_count);
    for (const auto& t : tris) {
        for (int i = 0; i < 3; ++i) {
            Vertex v = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            succ[v].emplace_back(a, b);
        }
    }
    std::vector<std::vector<Vertex>> rot(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) {
        if (succ[v].empty()) continue;
        auto find_next = [&](Vertex a) -> Vertex {
            for (auto& [x, y] : succ[v])
                if (x == a) return y;
            return -1;
        };
        Vertex start = succ[v][0].first;
        Vertex cur = start;
        do {
            rot[v].push_back(cur);
            cur = find_next(cur);
            if (cur < 0)
                fail(ErrorCode::InvalidInput,
                     "face corners at vertex " + std::to_string(v) + " do not chain");
            if (rot[v].size() > succ[v].size())
                fail(ErrorCode::InvalidInput,
                     "face corners at vertex " + std::to_string(v) + " do not close");
        } while (cur != start);
        if (rot[v].size() != succ[v].size())
            fail(ErrorCode::InvalidInput,
                 "vertex " + std::to_string(v) + " has a split corner cycle");
    }
    return EmbeddedGraph::build(vertex_count, std::move(rot));
}

} // namespace hexdom
