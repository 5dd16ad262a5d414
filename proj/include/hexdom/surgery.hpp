#pragma once

#include <optional>
#include <vector>

#include "hexdom/lattice.hpp"
#include "hexdom/plane_graph.hpp"
#include "hexdom/steiner.hpp"

namespace hexdom {

/// Dart-level embedded graph that tolerates parallel edges (cutting along
/// a single tree edge doubles it). rot[v][i] names the neighbor; twin
/// locates the reversed dart explicitly.
struct Disc {
    int n = 0;
    std::vector<std::vector<Vertex>> rot;
    std::vector<std::vector<int>> twin; // twin[v][i] = slot in rot[rot[v][i]]

    int degree(Vertex v) const { return static_cast<int>(rot[v].size()); }
    Dart face_next(const Dart& d) const;
    std::vector<FaceWalk> faces() const;
    bool has_parallel_edges() const;
    /// Conversion, valid only without parallel edges.
    EmbeddedGraph to_embedded() const;
    static Disc from_embedded(const EmbeddedGraph& g);
};

/// The triangulated disc obtained by cutting a sphere triangulation open
/// along a tree: every tree edge doubled, every tree vertex split into
/// deg_T copies, all on the boundary of the one non-triangular face f_T.
struct CutDisc {
    Disc disc;
    std::vector<Vertex> copy_map;  // disc vertex -> original vertex
    std::vector<char> tree_copy;   // disc vertex is a copy of a tree vertex
    int outer_face = -1;           // f_T id in disc.faces()
    int original_n = 0;
    int tree_size = 0;             // n(T)

    std::vector<Vertex> tree_copies() const;
};

struct Development {
    std::vector<LatticeCoord> coord; // per disc vertex
    int anchor_face = -1;
};

CutDisc cut_along_tree(const EmbeddedGraph& g, const SteinerTree& t);

enum class DevelopOrder { Bfs, Dfs };

/// Immerse a triangulated disc into the 6-regular lattice: one anchor
/// face placed canonically, the rest forced by propagation across shared
/// edges. Interior vertices must have degree 6; any placement conflict
/// throws InconsistentDevelopment.
Development develop(const Disc& disc, int outer_face, DevelopOrder order = DevelopOrder::Bfs);

inline Development develop(const CutDisc& cd, DevelopOrder order = DevelopOrder::Bfs) {
    return develop(cd.disc, cd.outer_face, order);
}

/// Smallest distance in the disc between two distinct vertices sharing a
/// lattice coordinate (-1 when all coordinates are distinct).
int min_coincident_distance(const Disc& disc, const Development& dev);

/// D = originals of the non-tree-copy pattern preimage, plus V(T).
/// Checks the size bound 7|D| <= n + 8 n(T) - 2 and that D dominates g.
struct Pullback {
    std::vector<Vertex> dominating_set;
    int preimage_size = 0;
    bool size_bound_ok = false;
};
Pullback pullback_pattern(const EmbeddedGraph& g, const CutDisc& cd, const Development& dev,
                          const PatternClass& pattern);

} // namespace hexdom
