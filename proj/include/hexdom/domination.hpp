#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexdom/generators.hpp"
#include "hexdom/plane_graph.hpp"

namespace hexdom {

struct BoundCheck {
    long long numerator = 0; // bound = numerator / denominator
    long long denominator = 1;
    bool holds = false;
};

struct DominationResult {
    std::vector<Vertex> set; // sorted
    int size = 0;
    bool valid = false;
    std::string provenance; // exact | greedy | pattern-pullback | cylinder | hybrid
    std::optional<BoundCheck> bound_checked;
};

struct DominationCheck {
    bool valid = false;
    std::vector<Vertex> uncovered;
};

DominationCheck is_dominating(const EmbeddedGraph& g, const std::vector<Vertex>& set);

/// Provably minimum dominating set by branch and bound: branch on the
/// closed neighborhood of a least-covered undominated vertex, prune with
/// the greedy upper bound and the ceil(remaining/(maxdeg+1)) lower bound.
DominationResult exact_gamma(const EmbeddedGraph& g,
                             std::optional<int> upper_hint = std::nullopt,
                             int instance_limit = 60);

/// Max-coverage greedy with lowest-id tie break. Always valid.
DominationResult greedy(const EmbeddedGraph& g);

/// Cylinder label (a, b).
struct CylinderLabel {
    int a = 0;
    int b = 0;
    bool operator<(const CylinderLabel& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
    bool operator==(const CylinderLabel& o) const { return a == o.a && b == o.b; }
};

/// Neighbors of z_{a,b} under the cylinder edge rules.
std::vector<CylinderLabel> cylinder_label_neighbors(const CylinderSpec& spec, int a, int b);

struct CylinderDominate {
    std::vector<CylinderLabel> set; // S_Z
    int size = 0;
    long long bound = 0; // ceil(ell/7) * (w+2)
    bool bound_ok = false;
    int residue = -1;    // chosen pattern residue
    int cut = 0;         // sheet cut position
    bool mirrored = false;
};

/// The sheet construction: develop the (w+2)x(ell+1) sheet over the
/// cylinder, intersect with the lattice dominating pattern, project mod w.
/// The residue, the cut position and the pattern chirality are optimized
/// and provably redundant points are removed; the returned set always
/// dominates every z_{a,b} with 1 <= b <= ell-1.
CylinderDominate cylinder_dominate(const CylinderSpec& spec);

/// S_Z plus everything outside the cylinder interior; label_map[vertex(a,b)]
/// gives the host vertex carrying each label.
DominationResult cylinder_complete(const EmbeddedGraph& g, const CylinderSpec& spec,
                                   const std::vector<Vertex>& label_map);

} // namespace hexdom
