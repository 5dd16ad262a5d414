#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hexdom/errors.hpp"

namespace hexdom {

using Vertex = int;

/// A directed edge: the dart from `tail` toward `rotations[tail][slot]`.
struct Dart {
    Vertex tail = -1;
    int slot = -1;

    bool operator==(const Dart& o) const { return tail == o.tail && slot == o.slot; }
};

/// One closed face walk, as the cyclic sequence of darts with the face on
/// the left of every dart.
struct FaceWalk {
    std::vector<Dart> darts;

    int length() const { return static_cast<int>(darts.size()); }
};

struct TriangulationReport {
    bool ok = false;
    bool connected = false;
    bool euler_ok = false;
    std::vector<int> non_triangle_faces; // face ids
    std::string detail;
};

struct DistanceField {
    std::vector<Vertex> sources;
    std::vector<int> dist; // -1 marks unreachable

    static constexpr int kUnreached = -1;
};

/// Immutable embedded planar (sphere) graph: a rotation system.
/// rotations[v] lists the neighbors of v in counterclockwise order.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default; // empty graph; use build() for real ones

    /// Validates symmetry, simplicity, id range. Throws Error on violation.
    static EmbeddedGraph build(int vertex_count,
                               std::vector<std::vector<Vertex>> rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return rot_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }

    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const { return slot_of(u, v) >= 0; }

    /// Index of `nbr` in rotations[v], or -1.
    int slot_of(Vertex v, Vertex nbr) const;

    Vertex dart_head(const Dart& d) const { return rot_[d.tail][d.slot]; }

    /// Counterclockwise face traversal: successor of `d` in the face to
    /// the left of `d` (next edge = ccw successor of the reversed edge at
    /// the head).
    Dart face_next(const Dart& d) const;

    /// All face walks, deterministically ordered. Every dart appears in
    /// exactly one walk. Cached: the graph is immutable.
    const std::vector<FaceWalk>& faces() const;

    /// Face id (index into faces()) bounding the traced side of each dart,
    /// indexed per vertex slot. Cached alongside faces().
    const std::vector<std::vector<int>>& face_left_of_darts() const;

    bool connected() const;

    TriangulationReport is_sphere_triangulation() const;

    /// Exact unweighted shortest-path distances from a nonempty source set.
    DistanceField bfs(const std::vector<Vertex>& sources) const;

    std::vector<int> degree_histogram() const;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<Vertex>> rot_;
    // per-vertex list of (neighbor, slot), sorted by neighbor, for slot_of
    std::vector<std::vector<std::pair<Vertex, int>>> slot_index_;
    // lazily built face structures (the graph never mutates)
    struct FaceCache {
        std::vector<FaceWalk> faces;
        std::vector<std::vector<int>> ids;
    };
    mutable std::shared_ptr<const FaceCache> face_cache_;
    const FaceCache& face_data() const;
};

/// Faces of the embedded subgraph induced by `members`, and the merging of
/// host faces into the subgraph's faces. Used to pick exterior faces and
/// to split the host's vertices into the regions a subgraph bounds.
class SubgraphRegions {
public:
    /// `in_subgraph[v]` selects the vertex subset. The induced subgraph
    /// keeps the filtered rotation order.
    SubgraphRegions(const EmbeddedGraph& g, const std::vector<char>& in_subgraph);

    /// Explicit edge subset (e.g. a cycle ignoring its chords). The
    /// subgraph consists of exactly these edges and their endpoints.
    SubgraphRegions(const EmbeddedGraph& g,
                    const std::vector<std::pair<Vertex, Vertex>>& edges);

    int region_count() const { return region_count_; }

    /// Region containing a given host face.
    int region_of_face(int host_face_id) const { return region_of_face_[host_face_id]; }

    /// Region containing a vertex outside the subgraph (-1 for members).
    int region_of_vertex(Vertex v) const { return region_of_vertex_[v]; }

    /// Closed walks (vertex sequences, one entry per dart) bounding each
    /// region of the induced subgraph, traced with the region on the left.
    /// A region may have several boundary walks if the subgraph is
    /// disconnected; walk ids are deterministic.
    struct BoundaryWalk {
        int region = -1;
        std::vector<Vertex> vertices; // cyclic, one per dart
    };
    const std::vector<BoundaryWalk>& boundary_walks() const { return walks_; }

    /// Vertices of the host lying strictly inside `region` (excluding
    /// subgraph members).
    std::vector<Vertex> vertices_in_region(int region) const;

    /// True if every subgraph member appears on some boundary walk of
    /// `region`.
    bool all_members_on_region(int region) const;

private:
    void init(const std::vector<std::vector<char>>& edge_mask);

    const EmbeddedGraph& g_;
    std::vector<char> member_;
    int region_count_ = 0;
    std::vector<int> region_of_face_;
    std::vector<int> region_of_vertex_;
    std::vector<BoundaryWalk> walks_;
};

/// Rooted embedded-graph isomorphism: is there an isomorphism g -> h that
/// preserves the counterclockwise rotation order and maps dart dg to dh?
bool embedded_isomorphic_rooted(const EmbeddedGraph& g, const Dart& dg,
                                const EmbeddedGraph& h, const Dart& dh,
                                std::vector<Vertex>* mapping_out = nullptr);

/// Unrooted variant: tries every dart of h against a fixed dart of g.
bool embedded_isomorphic(const EmbeddedGraph& g, const EmbeddedGraph& h);

/// Assemble a rotation system from an oriented triangle soup (all faces
/// listed with consistent orientation; every edge in exactly two faces for
/// a closed sphere). Throws if the corner chains do not close.
EmbeddedGraph embedded_from_faces(int vertex_count,
                                  const std::vector<std::array<Vertex, 3>>& tris);

} // namespace hexdom
