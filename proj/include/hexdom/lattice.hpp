#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hexdom {

/// Axial coordinates for the 6-regular infinite triangulation. The six
/// neighbors of (x,y) are (x±1,y), (x,y±1), (x+1,y+1), (x−1,y−1).
struct LatticeCoord {
    int x = 0;
    int y = 0;

    bool operator==(const LatticeCoord& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticeCoord& o) const { return !(*this == o); }
    bool operator<(const LatticeCoord& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
    LatticeCoord operator+(const LatticeCoord& o) const { return {x + o.x, y + o.y}; }
    LatticeCoord operator-(const LatticeCoord& o) const { return {x - o.x, y - o.y}; }
};

struct LatticeCoordHash {
    size_t operator()(const LatticeCoord& c) const {
        return std::hash<long long>()((static_cast<long long>(c.x) << 32) ^
                                      static_cast<unsigned>(c.y));
    }
};

/// The fixed counterclockwise neighbor order:
/// (+1,0), (+1,+1), (0,+1), (−1,0), (−1,−1), (0,−1).
std::array<LatticeCoord, 6> lattice_neighbors(const LatticeCoord& c);

/// Direction index 0..5 if b-a is a unit direction, else -1.
int lattice_direction(const LatticeCoord& a, const LatticeCoord& b);

bool lattice_adjacent(const LatticeCoord& a, const LatticeCoord& b);

/// Graph distance in the triangular lattice.
int lattice_distance(const LatticeCoord& a, const LatticeCoord& b);

/// All coordinates within distance r of the origin, sorted.
std::vector<LatticeCoord> lattice_ball(int radius);

/// One residue class of the perfect code x + 2y ≡ residue (mod 7): the
/// dominating pattern of the infinite triangulation that uses every
/// seventh vertex.
struct PatternClass {
    int residue = 0; // 0..6
};

bool in_pattern(const LatticeCoord& c, const PatternClass& p);

struct PerfectCodeReport {
    bool ok = false;
    int radius = 0;
    int checked = 0;          // vertices within radius-1
    int multiply_covered = 0; // closed neighborhoods with >1 pattern vertex
    int uncovered = 0;
    int pattern_in_ball = 0;  // pattern vertices within the radius ball
    std::string detail;
};

/// Exhaustive check that the pattern is a perfect code on the radius-R
/// ball: every vertex within R-1 of the origin is dominated exactly once.
PerfectCodeReport verify_perfect_code(int radius, const PatternClass& p);

} // namespace hexdom
