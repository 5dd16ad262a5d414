#include "hexdom/render.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hexdom {

namespace {

struct Point {
    double x = 0, y = 0;
};

std::vector<Point> tutte_layout(const EmbeddedGraph& g, int iterations) {
    const int n = g.vertex_count();
    std::vector<Point> pos(n);
    if (n == 0) return pos;
    // pin the longest face as a regular polygon
    auto faces = g.faces();
    int pin = 0;
    for (int i = 1; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].length() > faces[pin].length()) pin = i;
    std::vector<Vertex> rim;
    std::set<Vertex> seen;
    for (const Dart& d : faces[pin].darts)
        if (seen.insert(d.tail).second) rim.push_back(d.tail);
    std::vector<char> fixed(n, 0);
    const double tau = 6.283185307179586;
    for (size_t i = 0; i < rim.size(); ++i) {
        double a = tau * static_cast<double>(i) / static_cast<double>(rim.size());
        pos[rim[i]] = {std::cos(a), -std::sin(a)};
        fixed[rim[i]] = 1;
    }
    for (int it = 0; it < iterations; ++it) {
        for (Vertex v = 0; v < n; ++v) {
            if (fixed[v] || g.degree(v) == 0) continue;
            Point c{0, 0};
            for (Vertex u : g.neighbors(v)) {
                c.x += pos[u].x;
                c.y += pos[u].y;
            }
            pos[v] = {c.x / g.degree(v), c.y / g.degree(v)};
        }
    }
    return pos;
}

} // namespace

std::string render_svg(const EmbeddedGraph& g,
                       const std::optional<std::vector<LatticeCoord>>& coords,
                       const RenderOptions& opts) {
    const int n = g.vertex_count();
    std::vector<Point> pos(n);
    if (coords) {
        for (Vertex v = 0; v < n; ++v) {
            const auto& c = (*coords)[v];
            pos[v] = {c.x - 0.5 * c.y, -0.8660254037844386 * c.y};
        }
    } else {
        pos = tutte_layout(g, opts.tutte_iterations);
    }
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (n > 0) {
        minx = maxx = pos[0].x;
        miny = maxy = pos[0].y;
        for (const auto& p : pos) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    }
    auto sx = [&](double x) { return opts.padding + (x - minx) * opts.scale; };
    auto sy = [&](double y) { return opts.padding + (y - miny) * opts.scale; };
    double width = (maxx - minx) * opts.scale + 2 * opts.padding;
    double height = (maxy - miny) * opts.scale + 2 * opts.padding;

    std::set<Vertex> mark(opts.highlight.begin(), opts.highlight.end());
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (u > v)
                svg << "  <line x1=\"" << sx(pos[v].x) << "\" y1=\"" << sy(pos[v].y)
                    << "\" x2=\"" << sx(pos[u].x) << "\" y2=\"" << sy(pos[u].y)
                    << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    for (Vertex v = 0; v < n; ++v) {
        bool hl = mark.count(v) > 0;
        svg << "  <circle cx=\"" << sx(pos[v].x) << "\" cy=\"" << sy(pos[v].y) << "\" r=\""
            << (hl ? 6 : 3.5) << "\" fill=\"" << (hl ? "#c0392b" : "#2c3e50") << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hexdom
