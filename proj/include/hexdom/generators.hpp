#pragma once

#include <vector>

#include "hexdom/lattice.hpp"
#include "hexdom/plane_graph.hpp"

namespace hexdom {

/// Triangulated cylinder: w-cycles stacked ell+1 deep with twist k.
/// Vertices z_{a,b} (a in Z_w, 0 <= b <= ell); ring edges z_{a,b}-z_{a+1,b};
/// rung edges z_{a,b}-z_{a,b+1}; diagonal z_{a,b}-z_{a+1,b+1} for a < k and
/// z_{a,b}-z_{a-1,b+1} for k < a <= w.
struct CylinderSpec {
    int w = 3;
    int ell = 1;
    int k = 0;

    void validate() const;
    int patch_vertices() const { return w * (ell + 1); }
    int vertex(int a, int b) const { return b * w + ((a % w) + w) % w; }
};

EmbeddedGraph octahedron();

/// Icosahedron with every face subdivided into m^2 triangles: n = 10m^2+2,
/// twelve degree-5 apices, all other degrees 6.
EmbeddedGraph geodesic_sphere(int m);

/// Ids of the twelve degree-5 apices of geodesic_sphere (always 0..11).
std::vector<Vertex> geodesic_apices();

/// The lower-bound family G(n), n = 6k: concentric triangles joined by
/// spokes and diagonals; sphere triangulation of max degree 6 with exactly
/// six degree-4 vertices.
EmbeddedGraph band_graph(int k);

/// m vertex-disjoint K4s completed to a triangulation on 4m vertices;
/// gamma equals m. Inner K4 vertices all have degree 3.
EmbeddedGraph mt_family(int m);

/// Ids of the m inner K4 vertices of mt_family(m) (the last m ids).
std::vector<Vertex> mt_family_centers(int m);

/// Triangulated hexagon of radius r: 1 + 3r(r+1) vertices, one outer face
/// of length 6r, all internal degrees 6. Vertex i sits at coords()[i].
struct HexPatch {
    EmbeddedGraph graph;
    std::vector<LatticeCoord> coords; // per vertex id
    Vertex center = 0;
};
HexPatch hex_patch(int r);

/// Open cylinder (annulus with two non-triangular boundary faces).
EmbeddedGraph cylinder_patch(const CylinderSpec& spec);

/// Cylinder closed by one apex fan per end; requires w <= 6 so the apex
/// degree stays within the cap. Apex ids are patch_vertices() (b=0 side)
/// and patch_vertices()+1 (b=ell side).
EmbeddedGraph cylinder_sphere(const CylinderSpec& spec);

} // namespace hexdom
