#pragma once

#include <vector>

#include "hexdom/plane_graph.hpp"

namespace hexdom {

/// A minimum-vertex tree in the host graph containing all terminals.
struct SteinerTree {
    std::vector<Vertex> vertices;                 // sorted
    std::vector<std::pair<Vertex, Vertex>> edges; // u < v, sorted
    std::vector<Vertex> terminals;

    int size() const { return static_cast<int>(vertices.size()); } // n(T)
    int edge_count() const { return static_cast<int>(edges.size()); }
    int tree_degree(Vertex v) const;
    bool contains(Vertex v) const;
};

struct CleanPath {
    std::vector<Vertex> path; // vertex sequence, endpoints in U'
    Vertex middle = -1;       // at distance floor(|P|/2) from path.front()
    std::vector<Vertex> u_prime;

    int length() const { return static_cast<int>(path.size()) - 1; }
};

/// U = vertices of degree < 6. Throws DegreeTooHigh if any degree exceeds
/// 6. For a sphere triangulation with n > 3, 4 <= |U| <= 12 is checked.
std::vector<Vertex> deficiency_set(const EmbeddedGraph& g);

/// Exact minimum Steiner tree by dynamic programming over terminal
/// subsets. At most 12 terminals; deterministic tie-breaking.
SteinerTree min_steiner_tree(const EmbeddedGraph& g, const std::vector<Vertex>& terminals);

/// Longest path in T whose interior avoids U' = U ∪ {deg_T != 2}, plus its
/// middle vertex. Checks |U'| <= 2|U| - 2 and n(T) <= 21|P| + 1.
CleanPath longest_clean_path(const SteinerTree& t);

} // namespace hexdom
