#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hexdom/plane_graph.hpp"

namespace hexdom {

/// A closed walk directed so the bounded subgraph's exterior lies to the
/// right of every step. rdeg[i] counts the host edges at vertices[i]
/// strictly between the edge back to vertices[i-1] and the edge on to
/// vertices[i+1], counterclockwise; marginal[i] = rdeg[i] - 2.
struct OrientedWalk {
    std::vector<Vertex> vertices; // cyclic, one entry per dart
    std::vector<int> rdeg;
    std::vector<int> marginal;
    std::vector<char> sharp; // walk edges consecutive in the rotation

    int length() const { return static_cast<int>(vertices.size()); }
    long long marginal_total() const;
    int left_turns() const;
    int right_turns() const;
    /// (i) no turns, or (ii) exactly one left and one right turn.
    bool turn_census_ok() const;
};

struct BoundaryClassification {
    enum class Kind { Cycle, Path, PathPlusCycle };
    Kind kind = Kind::Cycle;
    int path_length = 0;    // p
    int cycle_length = 0;   // |B|
    long long cycle_marginal = 0; // rdeg*(B), meaningful for PathPlusCycle
};

struct Lemma1Report {
    long long marginal_degree = 0; // rdeg*(H)
    long long deficiency_side = 0; // 6 - sum over S of (6 - deg)
    int inner_vertex_count = 0;    // |S| (H plus interior)
    bool equal = false;
};

struct LayerReport {
    std::vector<int> layer_sizes; // |V_0|, |V_1|, ...
    long long marginal_degree = 0;
    bool bound_ok = false;
};

struct NeighborLayer {
    std::vector<Vertex> layer;  // H = inner neighbors of C
    int boundary_length = 0;    // |W| (0 for a single vertex)
    long long marginal_degree = 0; // rdeg*(H)
    long long cycle_marginal = 0;  // rdeg*(C)
    bool length_identity_ok = false;   // |W| = |C| - rdeg*(H)
    bool marginal_identity_ok = false; // rdeg*(H) = rdeg*(C) + sum(6-deg)
};

struct NextLayer {
    OrientedWalk walk;
    std::vector<Vertex> layer;
    bool is_cycle = false;
    bool all_degree_six = false;
    bool pattern_matches = false; // cyclic turn-sign correspondence with C
};

/// Boundary walk of the subgraph induced by `members`, oriented with the
/// exterior to the right. `outer_face` is a host face id lying in the
/// exterior. Requires |members| >= 2, the induced subgraph connected, and
/// every member on the chosen outer face.
OrientedWalk boundary_walk(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                           int outer_face);

/// rdeg*(H): sum of boundary marginal degrees; deg(v) when |H| = 1.
long long marginal_degree(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                          int outer_face);

/// Checks rdeg*(H) = 6 - sum_{v in S}(6 - deg v) with S = H plus the
/// vertices interior to H.
Lemma1Report verify_lemma1(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                           int outer_face);

/// Distance layers from H toward its interior, with the bound
/// |V_i| <= max(0, |V(H)| - i * rdeg*(H)) checked for every i.
LayerReport layer_sizes(const EmbeddedGraph& g, const std::vector<Vertex>& members,
                        int outer_face);

/// The induced subgraph on the interior neighbors of a chordless-interior
/// cycle C, plus the boundary-length and marginal identities.
/// `cycle` lists C in cyclic order; `side_face` designates the interior.
NeighborLayer inner_neighbor_layer(const EmbeddedGraph& g, const std::vector<Vertex>& cycle,
                                   int side_face);

/// Classify what a turn-census-restricted closed walk bounds: a cycle, a
/// doubled path, or a path plus a cycle sharing one endpoint.
BoundaryClassification classify_boundary(const EmbeddedGraph& g, const OrientedWalk& walk);

/// One step of cylinder growth: boundary walk of the interior-neighbor
/// subgraph of an all-degree-6 cycle with admissible turn census, with the
/// turn-pattern correspondence checked.
NextLayer next_layer(const EmbeddedGraph& g, const std::vector<Vertex>& cycle,
                     int side_face);

/// Seeded sampler: a random connected outerplane subgraph of g together
/// with a host face in its exterior. Returns false if the grown set was
/// rejected (not outerplane).
bool sample_outerplane_subgraph(const EmbeddedGraph& g, std::mt19937& rng, int max_size,
                                std::vector<Vertex>& members_out, int& outer_face_out);

struct LemmaSuiteReport {
    int samples = 0;
    int lemma1_pass = 0, lemma1_fail = 0;
    int lemma3_pass = 0, lemma3_fail = 0;
    int walk_range_pass = 0, walk_range_fail = 0; // -2 <= marginal <= 3
    bool ok() const { return lemma1_fail == 0 && lemma3_fail == 0 && walk_range_fail == 0; }
};

/// Runs the empirical lemma checks on `samples` random outerplane
/// subgraphs of a max-degree-6 sphere triangulation.
LemmaSuiteReport verify_lemmas(const EmbeddedGraph& g, int samples, uint32_t seed);

} // namespace hexdom
