#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexdom/lattice.hpp"
#include "hexdom/plane_graph.hpp"

namespace hexdom {

struct RenderOptions {
    double scale = 40.0;
    double padding = 20.0;
    std::vector<Vertex> highlight; // drawn filled
    int tutte_iterations = 600;
};

/// SVG drawing. Lattice coordinates are used when given (one per vertex);
/// otherwise a Tutte-style barycentric layout pins the largest face as a
/// convex polygon and relaxes everything else.
std::string render_svg(const EmbeddedGraph& g,
                       const std::optional<std::vector<LatticeCoord>>& coords,
                       const RenderOptions& opts = {});

} // namespace hexdom
