#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "hexdom/domination.hpp"
#include "hexdom/plane_graph.hpp"

namespace test_support {

using hexdom::EmbeddedGraph;
using hexdom::Vertex;

inline std::vector<std::vector<int>> floyd_warshall(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex u : g.neighbors(v)) d[v][u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Independent oracle: smallest dominating set by subset enumeration.
inline int exhaustive_gamma(const EmbeddedGraph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> pick;
    for (int k = 1; k <= n; ++k) {
        pick.assign(k, 0);
        // iterate k-combinations of 0..n-1
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<Vertex> set(idx.begin(), idx.end());
            if (hexdom::is_dominating(g, set).valid) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n;
}

/// Independent 3-terminal Steiner oracle: every minimum tree on three
/// terminals is a spider, so the optimum vertex count is
/// min over meeting points m of d(t0,m)+d(t1,m)+d(t2,m) + 1.
inline int steiner3_oracle(const EmbeddedGraph& g, Vertex t0, Vertex t1, Vertex t2) {
    auto d = floyd_warshall(g);
    int best = 1 << 20;
    for (Vertex m = 0; m < g.vertex_count(); ++m)
        best = std::min(best, d[t0][m] + d[t1][m] + d[t2][m]);
    return best + 1;
}

/// Exhaustive minimum connected superset of the terminals, for tiny hosts:
/// enumerate vertex subsets by size.
inline int exhaustive_steiner_vertices(const EmbeddedGraph& g,
                                       const std::vector<Vertex>& terminals) {
    const int n = g.vertex_count();
    std::set<Vertex> term(terminals.begin(), terminals.end());
    auto connected = [&](const std::vector<char>& in, Vertex start, size_t count) {
        std::vector<Vertex> stack{start};
        std::set<Vertex> vis{start};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (in[u] && !vis.count(u)) {
                    vis.insert(u);
                    stack.push_back(u);
                }
        }
        return vis.size() == count;
    };
    for (int size = static_cast<int>(term.size()); size <= n; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<char> in(n, 0);
            bool all_terms = true;
            for (int i : idx) in[i] = 1;
            for (Vertex t : term) all_terms = all_terms && in[t];
            if (all_terms && connected(in, idx[0], size)) return size;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return -1;
}

/// Orient an undirected triangle soup consistently by flood fill, then
/// assemble the rotation system. `flip` mirrors the whole surface.
inline EmbeddedGraph embed_unoriented(int n, std::vector<std::array<Vertex, 3>> tris,
                                      bool flip) {
    const int f = static_cast<int>(tris.size());
    // edge -> incident faces
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> at;
    for (int i = 0; i < f; ++i)
        for (int e = 0; e < 3; ++e) {
            Vertex a = tris[i][e], b = tris[i][(e + 1) % 3];
            at[{std::min(a, b), std::max(a, b)}].push_back(i);
        }
    std::vector<int> state(f, 0); // 0 unseen, 1 as-given, -1 reversed
    std::vector<int> stack{0};
    state[0] = flip ? -1 : 1;
    auto directed = [&](int i) {
        auto t = tris[i];
        if (state[i] < 0) std::swap(t[1], t[2]);
        return t;
    };
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        auto t = directed(i);
        for (int e = 0; e < 3; ++e) {
            Vertex a = t[e], b = t[(e + 1) % 3];
            for (int j : at[{std::min(a, b), std::max(a, b)}]) {
                if (j == i) continue;
                // j must traverse the edge as b -> a
                auto tj = tris[j];
                bool fwd = false;
                for (int q = 0; q < 3; ++q)
                    if (tj[q] == b && tj[(q + 1) % 3] == a) fwd = true;
                int want = fwd ? 1 : -1;
                if (state[j] == 0) {
                    state[j] = want;
                    stack.push_back(j);
                } else if (state[j] != want) {
                    throw std::runtime_error("unorientable face list");
                }
            }
        }
    }
    std::vector<std::array<Vertex, 3>> oriented;
    for (int i = 0; i < f; ++i) oriented.push_back(directed(i));
    return hexdom::embedded_from_faces(n, oriented);
}

/// The 18-vertex max-degree-6 sphere realizing the path-plus-cycle
/// boundary case: a 4-cycle B = (v, b1, b2, b3) with chord b1-b3 plus the
/// pendant edge v-p1, wrapped by a 6-ring c0..c5, a second ring, and an
/// apex. Vertex ids: v=0 b1=1 b2=2 b3=3 p1=4 c0..c5=5..10 d0..d5=11..16
/// apex=17.
inline EmbeddedGraph lollipop_fixture(bool flip) {
    const Vertex v = 0, b1 = 1, b2 = 2, b3 = 3, p1 = 4;
    const Vertex c0 = 5, c1 = 6, c2 = 7, c3 = 8, c4 = 9, c5 = 10;
    const Vertex d0 = 11, d1 = 12, d2 = 13, d3 = 14, d4 = 15, d5 = 16, A = 17;
    std::vector<std::array<Vertex, 3>> tris = {
        {v, b1, b3},   {b1, b2, b3},
        {v, c0, b1},   {b1, c0, c1},  {b1, c1, b2},  {b2, c1, c2},
        {b2, c2, b3},  {b3, c2, c3},  {b3, c3, c4},  {b3, c4, v},
        {v, c4, c5},   {v, c5, p1},   {p1, c5, c0},  {p1, c0, v},
        {c0, c1, d0},  {c1, c2, d1},  {c2, c3, d2},  {c3, c4, d4},
        {c4, c5, d5},  {c5, c0, d0},  {c1, d0, d1},  {c2, d1, d2},
        {c3, d2, d3},  {c3, d3, d4},  {c4, d4, d5},  {c5, d5, d0},
        {d0, d1, A},   {d1, d2, A},   {d2, d3, A},   {d3, d4, A},
        {d4, d5, A},   {d5, d0, A},
    };
    return embed_unoriented(18, tris, flip);
}

} // namespace test_support
