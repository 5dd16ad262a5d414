#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexdom/domination.hpp"
#include "hexdom/lattice.hpp"
#include "hexdom/plane_graph.hpp"
#include "hexdom/steiner.hpp"

namespace hexdom {

/// Development of the radius-r ball around a vertex into the lattice.
/// Wrap-around makes the placement multivalued: a vertex may appear at
/// several coordinates, and edges may join placements that are not
/// lattice-adjacent. Those conflicts witness that the ball is not a
/// triangulated hexagon.
struct BallDevelopment {
    int radius = 0;
    bool well_defined = false; // every coordinate carries one vertex
    std::map<LatticeCoord, Vertex> vertex_at;
    std::map<Vertex, std::vector<LatticeCoord>> coords_of;
    // identification conflicts: same vertex at two coordinates
    std::vector<std::pair<LatticeCoord, LatticeCoord>> identifications;
    // edge conflicts: adjacent vertices at non-adjacent coordinates
    std::vector<std::pair<LatticeCoord, LatticeCoord>> wrap_edges;
    bool deficient = false; // a vertex of degree != 6 inside the ball
};

struct HexagonRadius {
    int r = 0;
    bool decomposition_ok = false;
    std::vector<std::vector<Vertex>> corner_walks; // W_0..W_5 when available
    BallDevelopment ball;                          // radius-r development
};

/// Minimal r such that the ball of radius r around x is not a
/// triangulated hexagon (embedded-isomorphic to the hexagon patch with
/// every vertex of degree 6).
HexagonRadius hexagon_radius(const EmbeddedGraph& g, Vertex x);

/// A cycle through x of length at most 2r+1, all vertices of degree 6,
/// with no turns or exactly one left and one right turn, neither sharp.
/// Throws CaseContradiction when the overlap cases exclude it.
std::vector<Vertex> find_c0(const EmbeddedGraph& g, Vertex x, const HexagonRadius& hr,
                            int* q_out = nullptr);

struct PipelineOptions {
    int force_branch = 0; // 0 = auto, 1 = tree-cut only, 2 = cylinder only
    int exact_limit = 60; // fallback oracle size cap
};

struct PipelineReport {
    int n = 0;
    std::vector<Vertex> deficiency;
    int steiner_size = 0; // n(T)
    int path_length = 0;  // |P|
    bool threshold_ok = false; // n(T) <= 3n/32 + 1/4
    std::string branch;   // tree-cut | cylinder | fallback
    std::string fallback_reason;
    int hexagon_r = -1;
    int overlap_q = -1;
    std::optional<CylinderSpec> cylinder;
    int residue = -1;
    DominationResult result;
    // bound audits
    std::optional<BoundCheck> branch1_bound;  // 7|D| <= n + 8n(T) - 2
    std::optional<BoundCheck> cylinder_bound; // ceil(l/7)(w+2) + n - w(l-1)
    BoundCheck quarter_bound;                 // 4|D| <= n
};

/// The constructive pipeline: pattern pullback through the cut disc
/// (branch 1), cylinder detection and completion (branch 2), and an
/// exact/greedy fallback. The returned set is always verified valid.
PipelineReport quarter_dominating_set(const EmbeddedGraph& g,
                                      const PipelineOptions& opts = {});

} // namespace hexdom
