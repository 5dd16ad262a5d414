#include "hexdom/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

namespace hexdom {

void CylinderSpec::validate() const {
    if (w < 3) fail(ErrorCode::SpecOutOfRange, "cylinder width must be >= 3");
    if (ell < 1) fail(ErrorCode::SpecOutOfRange, "cylinder length must be >= 1");
    if (k < 0 || k >= w) fail(ErrorCode::SpecOutOfRange, "twist must lie in 0..w-1");
}

EmbeddedGraph octahedron() {
    // 0 on top, 1..4 around the equator, 5 at the bottom.
    std::vector<std::array<Vertex, 3>> tris = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
        {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4},
    };
    return embedded_from_faces(6, tris);
}

// ── geodesic spheres ────────────────────────────────────────────────

namespace {

struct Vec3 {
    double x, y, z;
};

std::vector<std::array<Vertex, 3>> icosahedron_faces() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            pts.push_back({s1, s2 * phi, 0});
            pts.push_back({0, s1, s2 * phi});
            pts.push_back({s2 * phi, 0, s1});
        }
    auto d2 = [&](int i, int j) {
        double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y, dz = pts[i].z - pts[j].z;
        return dx * dx + dy * dy + dz * dz;
    };
    std::vector<std::array<Vertex, 3>> tris;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            for (int k = j + 1; k < 12; ++k) {
                if (d2(i, j) > 4.1 || d2(j, k) > 4.1 || d2(i, k) > 4.1) continue;
                // orient outward: (b-a) x (c-a) . centroid > 0
                Vec3 a = pts[i], b = pts[j], c = pts[k];
                double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
                double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
                double nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
                double cx = (a.x + b.x + c.x), cy = (a.y + b.y + c.y), cz = (a.z + b.z + c.z);
                if (nx * cx + ny * cy + nz * cz > 0)
                    tris.push_back({i, j, k});
                else
                    tris.push_back({i, k, j});
            }
    return tris; // 20 faces
}

} // namespace

std::vector<Vertex> geodesic_apices() {
    std::vector<Vertex> out(12);
    for (int i = 0; i < 12; ++i) out[i] = i;
    return out;
}

EmbeddedGraph geodesic_sphere(int m) {
    if (m < 1) fail(ErrorCode::SpecOutOfRange, "geodesic subdivision must be >= 1");
    auto base = icosahedron_faces();
    int next_id = 12;
    std::map<std::tuple<Vertex, Vertex, int>, Vertex> edge_ids;
    auto edge_point = [&](Vertex u, Vertex v, int t) {
        // t steps from u toward v, 0 < t < m
        Vertex a = std::min(u, v), b = std::max(u, v);
        int tt = (u < v) ? t : m - t;
        auto key = std::make_tuple(a, b, tt);
        auto it = edge_ids.find(key);
        if (it != edge_ids.end()) return it->second;
        edge_ids[key] = next_id;
        return next_id++;
    };

    std::vector<std::array<Vertex, 3>> tris;
    for (const auto& f : base) {
        Vertex A = f[0], B = f[1], C = f[2];
        // grid (i,j): i toward B, j toward C, i + j <= m
        std::vector<std::vector<Vertex>> id(m + 1, std::vector<Vertex>(m + 1, -1));
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j + i <= m; ++j) {
                if (i == 0 && j == 0) id[i][j] = A;
                else if (i == m && j == 0) id[i][j] = B;
                else if (i == 0 && j == m) id[i][j] = C;
                else if (j == 0) id[i][j] = edge_point(A, B, i);
                else if (i == 0) id[i][j] = edge_point(A, C, j);
                else if (i + j == m) id[i][j] = edge_point(B, C, j);
                else id[i][j] = next_id++;
            }
        }
        for (int i = 0; i < m; ++i) {
            for (int j = 0; i + j < m; ++j) {
                tris.push_back({id[i][j], id[i + 1][j], id[i][j + 1]});
                if (i + j < m - 1)
                    tris.push_back({id[i + 1][j], id[i + 1][j + 1], id[i][j + 1]});
            }
        }
    }
    return embedded_from_faces(next_id, tris);
}

// ── band graphs G(n) ────────────────────────────────────────────────

EmbeddedGraph band_graph(int k) {
    if (k < 1) fail(ErrorCode::SpecOutOfRange, "band graph needs k >= 1");
    const int rings = 2 * k;
    const int n = 6 * k;
    auto vid = [&](int ring, int t) { return 3 * ring + ((t % 3) + 3) % 3; };
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < rings; ++i) {
        for (int t = 0; t < 3; ++t) {
            std::vector<Vertex> r;
            if (i + 1 < rings) {
                r.push_back(vid(i + 1, t));     // spoke out
                r.push_back(vid(i + 1, t + 1)); // diagonal out
            }
            r.push_back(vid(i, t + 1)); // ring ccw
            if (i > 0) {
                r.push_back(vid(i - 1, t));     // spoke in
                r.push_back(vid(i - 1, t - 1)); // diagonal in
            }
            r.push_back(vid(i, t - 1)); // ring cw
            rot[vid(i, t)] = std::move(r);
        }
    }
    return EmbeddedGraph::build(n, std::move(rot));
}

// ── disjoint-K4 lower-bound family ──────────────────────────────────

namespace {

struct MarkedTriangulation {
    std::vector<std::array<Vertex, 3>> faces;
    std::vector<char> marked;
    int n = 0;
};

/// Replace the lowest-id unmarked face by a 3-vertex collar plus a fresh
/// marked inner triangle.
void insert_triangle(MarkedTriangulation& t) {
    int target = -1;
    for (int i = 0; i < static_cast<int>(t.faces.size()); ++i)
        if (!t.marked[i]) {
            target = i;
            break;
        }
    auto [x, y, z] = t.faces[target];
    Vertex p = t.n, q = t.n + 1, r = t.n + 2;
    t.n += 3;
    t.faces.erase(t.faces.begin() + target);
    t.marked.erase(t.marked.begin() + target);
    std::vector<std::array<Vertex, 3>> add = {
        {x, y, p}, {y, q, p}, {y, z, q}, {z, r, q}, {z, x, r}, {x, p, r}, {p, q, r},
    };
    for (size_t i = 0; i < add.size(); ++i) {
        t.faces.push_back(add[i]);
        t.marked.push_back(i + 1 == add.size());
    }
}

} // namespace

EmbeddedGraph mt_family(int m) {
    if (m < 2) fail(ErrorCode::SpecOutOfRange, "mt_family needs m >= 2");
    MarkedTriangulation t;
    t.n = 6;
    t.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
               {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    t.marked.assign(8, 0);
    // two vertex-disjoint octahedron faces seed the first two K4s
    t.marked[0] = 1; // (0,1,2)
    for (int i = 0; i < 8; ++i)
        if (t.faces[i] == std::array<Vertex, 3>{5, 4, 3}) t.marked[i] = 1;
    for (int extra = 2; extra < m; ++extra) insert_triangle(t);

    // subdivide each marked face with its K4 center
    std::vector<std::array<Vertex, 3>> final_faces;
    for (int i = 0; i < static_cast<int>(t.faces.size()); ++i) {
        if (!t.marked[i]) {
            final_faces.push_back(t.faces[i]);
            continue;
        }
        auto [u, v, w] = t.faces[i];
        Vertex d = t.n++;
        final_faces.push_back({u, v, d});
        final_faces.push_back({v, w, d});
        final_faces.push_back({w, u, d});
    }
    return embedded_from_faces(t.n, final_faces);
}

std::vector<Vertex> mt_family_centers(int m) {
    // centers are appended last, one per marked face
    std::vector<Vertex> out;
    int n = 4 * m;
    for (int i = 0; i < m; ++i) out.push_back(n - m + i);
    return out;
}

// ── hexagon patches ─────────────────────────────────────────────────

HexPatch hex_patch(int r) {
    if (r < 0) fail(ErrorCode::SpecOutOfRange, "hex patch radius must be >= 0");
    HexPatch out;
    out.coords = lattice_ball(r);
    const int n = static_cast<int>(out.coords.size());
    std::map<LatticeCoord, int> id;
    for (int i = 0; i < n; ++i) id[out.coords[i]] = i;
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& nb : lattice_neighbors(out.coords[i])) {
            auto it = id.find(nb);
            if (it != id.end()) rot[i].push_back(it->second);
        }
    }
    out.graph = EmbeddedGraph::build(n, std::move(rot));
    out.center = id.at({0, 0});
    return out;
}

// ── triangulated cylinders ──────────────────────────────────────────

namespace {

/// Strip chart of the cylinder's universal cover: B[i] is the lattice
/// position of column i's base, for i in -1..w+1 (index shifted by 1).
std::vector<LatticeCoord> cylinder_chart(const CylinderSpec& s) {
    std::vector<LatticeCoord> B(s.w + 3);
    auto step = [&](int col) {
        return (((col % s.w) + s.w) % s.w) < s.k ? LatticeCoord{1, 0} : LatticeCoord{1, 1};
    };
    B[1] = {0, 0}; // column 0
    for (int i = 1; i <= s.w + 1; ++i) B[i + 1] = B[i] + step(i - 1);
    LatticeCoord wrap = B[s.w + 1] - B[1];
    B[0] = (B[s.w] - wrap); // column -1
    return B;
}

struct CylNbr {
    int a, b;
};

std::vector<CylNbr> cylinder_neighbor_list(const CylinderSpec& s, int a, int b) {
    std::vector<CylNbr> out;
    out.push_back({(a + 1) % s.w, b});
    out.push_back({(a - 1 + s.w) % s.w, b});
    if (b + 1 <= s.ell) {
        out.push_back({a, b + 1});
        if (a < s.k) out.push_back({(a + 1) % s.w, b + 1});
        if (a > s.k || a == 0) out.push_back({(a - 1 + s.w) % s.w, b + 1});
    }
    if (b - 1 >= 0) {
        out.push_back({a, b - 1});
        int c = (a - 1 + s.w) % s.w;
        if (c < s.k && (c + 1) % s.w == a) out.push_back({c, b - 1});
        c = (a + 1) % s.w;
        if ((c > s.k || c == 0) && (c - 1 + s.w) % s.w == a) out.push_back({c, b - 1});
    }
    return out;
}

/// Rotation of z_{a,b}: neighbors sorted counterclockwise by their local
/// chart direction.  Returns pairs (direction index, vertex id).
std::vector<std::pair<int, Vertex>> cylinder_rotation(const CylinderSpec& s,
                                                      const std::vector<LatticeCoord>& B,
                                                      int a, int b) {
    LatticeCoord here = B[a + 1] + LatticeCoord{0, b};
    std::vector<std::pair<int, Vertex>> slots;
    for (const auto& nb : cylinder_neighbor_list(s, a, b)) {
        // local (unwrapped) column index of the neighbor
        int col = nb.a;
        if (a == 0 && nb.a == s.w - 1) col = -1;
        if (a == s.w - 1 && nb.a == 0) col = s.w;
        LatticeCoord pos = B[col + 1] + LatticeCoord{0, nb.b};
        int dir = lattice_direction(here, pos);
        if (dir < 0)
            fail(ErrorCode::SpecOutOfRange, "cylinder chart broke; twist " +
                                                std::to_string(s.k));
        slots.emplace_back(dir, s.vertex(nb.a, nb.b));
    }
    std::sort(slots.begin(), slots.end());
    return slots;
}

} // namespace

EmbeddedGraph cylinder_patch(const CylinderSpec& spec) {
    spec.validate();
    auto B = cylinder_chart(spec);
    std::vector<std::vector<Vertex>> rot(spec.patch_vertices());
    for (int b = 0; b <= spec.ell; ++b)
        for (int a = 0; a < spec.w; ++a) {
            auto slots = cylinder_rotation(spec, B, a, b);
            auto& r = rot[spec.vertex(a, b)];
            for (auto& [dir, u] : slots) r.push_back(u);
        }
    return EmbeddedGraph::build(spec.patch_vertices(), std::move(rot));
}

EmbeddedGraph cylinder_sphere(const CylinderSpec& spec) {
    spec.validate();
    if (spec.w > 6)
        fail(ErrorCode::SpecOutOfRange,
             "cap apex would have degree " + std::to_string(spec.w));
    auto B = cylinder_chart(spec);
    const int np = spec.patch_vertices();
    const Vertex apex_bottom = np, apex_top = np + 1;
    std::vector<std::vector<Vertex>> rot(np + 2);
    for (int b = 0; b <= spec.ell; ++b) {
        for (int a = 0; a < spec.w; ++a) {
            auto slots = cylinder_rotation(spec, B, a, b);
            auto& r = rot[spec.vertex(a, b)];
            if (b != 0 && b != spec.ell) {
                for (auto& [dir, u] : slots) r.push_back(u);
                continue;
            }
            // boundary ring: insert the cap apex into the widest direction gap
            Vertex apex = (b == 0) ? apex_bottom : apex_top;
            int m = static_cast<int>(slots.size());
            int best_gap = -1, best_at = 0;
            for (int i = 0; i < m; ++i) {
                int gap = (slots[(i + 1) % m].first - slots[i].first + 6) % 6;
                if (gap > best_gap) {
                    best_gap = gap;
                    best_at = i;
                }
            }
            for (int i = 0; i < m; ++i) {
                r.push_back(slots[i].second);
                if (i == best_at) r.push_back(apex);
            }
        }
    }
    // apex fans: ring order, oriented to close the faces
    for (int a = 0; a < spec.w; ++a) rot[apex_bottom].push_back(spec.vertex(-a, 0));
    for (int a = 0; a < spec.w; ++a) rot[apex_top].push_back(spec.vertex(a, spec.ell));
    return EmbeddedGraph::build(np + 2, std::move(rot));
}

} // namespace hexdom
