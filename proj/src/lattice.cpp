#include "hexdom/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace hexdom {

static const std::array<LatticeCoord, 6> kDirs = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1},
}};

std::array<LatticeCoord, 6> lattice_neighbors(const LatticeCoord& c) {
    std::array<LatticeCoord, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = c + kDirs[i];
    return out;
}

int lattice_direction(const LatticeCoord& a, const LatticeCoord& b) {
    LatticeCoord d = b - a;
    for (int i = 0; i < 6; ++i)
        if (d == kDirs[i]) return i;
    return -1;
}

bool lattice_adjacent(const LatticeCoord& a, const LatticeCoord& b) {
    return lattice_direction(a, b) >= 0;
}

int lattice_distance(const LatticeCoord& a, const LatticeCoord& b) {
    int dx = b.x - a.x, dy = b.y - a.y;
    if ((dx >= 0) == (dy >= 0)) return std::max(std::abs(dx), std::abs(dy));
    return std::abs(dx) + std::abs(dy);
}

std::vector<LatticeCoord> lattice_ball(int radius) {
    std::vector<LatticeCoord> out;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y)
            if (lattice_distance({0, 0}, {x, y}) <= radius) out.push_back({x, y});
    std::sort(out.begin(), out.end());
    return out;
}

bool in_pattern(const LatticeCoord& c, const PatternClass& p) {
    int v = (c.x + 2 * c.y - p.residue) % 7;
    return (v % 7 + 7) % 7 == 0;
}

PerfectCodeReport verify_perfect_code(int radius, const PatternClass& p) {
    PerfectCodeReport rep;
    rep.radius = radius;
    if (radius < 2) {
        rep.detail = "radius must be at least 2";
        return rep;
    }
    auto inner = lattice_ball(radius - 1);
    for (const auto& c : inner) {
        int covered = in_pattern(c, p) ? 1 : 0;
        for (const auto& nb : lattice_neighbors(c))
            if (in_pattern(nb, p)) ++covered;
        ++rep.checked;
        if (covered == 0) ++rep.uncovered;
        if (covered > 1) ++rep.multiply_covered;
    }
    for (const auto& c : lattice_ball(radius))
        if (in_pattern(c, p)) ++rep.pattern_in_ball;
    rep.ok = rep.uncovered == 0 && rep.multiply_covered == 0;
    if (!rep.ok)
        rep.detail = std::to_string(rep.uncovered) + " uncovered, " +
                     std::to_string(rep.multiply_covered) + " multiply covered";
    return rep;
}

} // namespace hexdom
