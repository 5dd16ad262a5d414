#include "hexdom/steiner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace hexdom {

int SteinerTree::tree_degree(Vertex v) const {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

bool SteinerTree::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<Vertex> deficiency_set(const EmbeddedGraph& g) {
    std::vector<Vertex> u;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d > 6)
            fail(ErrorCode::DegreeTooHigh,
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        if (d < 6) u.push_back(v);
    }
    if (g.vertex_count() > 3 && g.is_sphere_triangulation().ok) {
        if (u.size() < 4 || u.size() > 12)
            fail(ErrorCode::LemmaViolation,
                 "deficiency set has size " + std::to_string(u.size()));
    }
    return u;
}

namespace {

constexpr uint16_t kInf = std::numeric_limits<uint16_t>::max();

/// Unit-weight multi-source relaxation of one subset row via a bucket
/// queue (Dial's algorithm).
void relax_row(const EmbeddedGraph& g, std::vector<uint16_t>& row) {
    const int n = g.vertex_count();
    int maxval = 0;
    for (Vertex v = 0; v < n; ++v)
        if (row[v] != kInf) maxval = std::max(maxval, static_cast<int>(row[v]));
    std::vector<std::vector<Vertex>> buckets(maxval + n + 1);
    for (Vertex v = 0; v < n; ++v)
        if (row[v] != kInf) buckets[row[v]].push_back(v);
    for (int d = 0; d < static_cast<int>(buckets.size()); ++d) {
        for (size_t i = 0; i < buckets[d].size(); ++i) {
            Vertex v = buckets[d][i];
            if (row[v] != d) continue;
            for (Vertex u : g.neighbors(v)) {
                if (row[u] > d + 1) {
                    row[u] = static_cast<uint16_t>(d + 1);
                    if (d + 1 < static_cast<int>(buckets.size()))
                        buckets[d + 1].push_back(u);
                }
            }
        }
    }
}

} // namespace

SteinerTree min_steiner_tree(const EmbeddedGraph& g, const std::vector<Vertex>& terminals) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(terminals.size());
    if (k == 0) fail(ErrorCode::EmptySourceSet, "no terminals");
    if (k > 12)
        fail(ErrorCode::TooManyTerminals, std::to_string(k) + " terminals (max 12)");
    for (Vertex t : terminals)
        if (t < 0 || t >= n) fail(ErrorCode::BadVertexId, "terminal " + std::to_string(t));

    SteinerTree out;
    out.terminals = terminals;
    std::sort(out.terminals.begin(), out.terminals.end());
    out.terminals.erase(std::unique(out.terminals.begin(), out.terminals.end()),
                        out.terminals.end());
    const int kk = static_cast<int>(out.terminals.size());
    if (kk == 1) {
        out.vertices = {out.terminals[0]};
        return out;
    }

    const int full = (1 << kk) - 1;
    // dp[mask][v] = min edges of a tree containing {terminals in mask} + v
    std::vector<std::vector<uint16_t>> dp(full + 1, std::vector<uint16_t>(n, kInf));
    for (int i = 0; i < kk; ++i) dp[1 << i][out.terminals[i]] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        auto& row = dp[mask];
        // merge two subtrees at a common vertex
        for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            int rest = mask ^ sub;
            if (sub < rest) continue; // each split once
            const auto& a = dp[sub];
            const auto& b = dp[rest];
            for (Vertex v = 0; v < n; ++v) {
                if (a[v] == kInf || b[v] == kInf) continue;
                uint16_t c = static_cast<uint16_t>(a[v] + b[v]);
                if (c < row[v]) row[v] = c;
            }
        }
        relax_row(g, row);
    }

    // deterministic reconstruction by re-checking which transition is tight
    std::vector<std::pair<Vertex, Vertex>> edges;
    struct Item {
        int mask;
        Vertex v;
    };
    std::vector<Item> stack{{full, [&] {
                                 Vertex best = 0;
                                 for (Vertex v = 1; v < n; ++v)
                                     if (dp[full][v] < dp[full][best]) best = v;
                                 return best;
                             }()}};
    std::set<Vertex> tree_vertices;
    while (!stack.empty()) {
        auto [mask, v] = stack.back();
        stack.pop_back();
        tree_vertices.insert(v);
        uint16_t val = dp[mask][v];
        if (val == 0) continue;
        bool split = false;
        for (int sub = (mask - 1) & mask; sub > 0 && !split; sub = (sub - 1) & mask) {
            int rest = mask ^ sub;
            if (sub < rest) continue;
            if (dp[sub][v] != kInf && dp[rest][v] != kInf &&
                dp[sub][v] + dp[rest][v] == val) {
                stack.push_back({sub, v});
                stack.push_back({rest, v});
                split = true;
            }
        }
        if (split) continue;
        bool stepped = false;
        for (Vertex u : g.neighbors(v)) {
            if (dp[mask][u] != kInf && dp[mask][u] + 1 == val) {
                edges.emplace_back(std::min(u, v), std::max(u, v));
                stack.push_back({mask, u});
                stepped = true;
                break;
            }
        }
        if (!stepped)
            fail(ErrorCode::LemmaViolation, "steiner reconstruction failed");
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = edges;
    for (auto& [a, b] : edges) {
        tree_vertices.insert(a);
        tree_vertices.insert(b);
    }
    out.vertices.assign(tree_vertices.begin(), tree_vertices.end());

    // sanity: tree with all terminals, optimal edge count
    if (out.edge_count() != out.size() - 1)
        fail(ErrorCode::LemmaViolation, "steiner result is not a tree");
    for (Vertex t : out.terminals)
        if (!out.contains(t)) fail(ErrorCode::LemmaViolation, "terminal missing from tree");
    return out;
}

CleanPath longest_clean_path(const SteinerTree& t) {
    CleanPath out;
    if (t.size() == 1) {
        out.path = {t.vertices[0]};
        out.middle = t.vertices[0];
        out.u_prime = {t.vertices[0]};
        return out;
    }

    std::map<Vertex, std::vector<Vertex>> adj;
    for (auto& [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<Vertex> uprime(t.terminals.begin(), t.terminals.end());
    for (Vertex v : t.vertices)
        if (static_cast<int>(adj[v].size()) != 2) uprime.insert(v);
    out.u_prime.assign(uprime.begin(), uprime.end());

    if (t.terminals.size() >= 2) {
        size_t cap = 2 * t.terminals.size() - 2;
        if (out.u_prime.size() > cap)
            fail(ErrorCode::LemmaViolation, "|U'| exceeds 2|U|-2");
    }

    // maximal paths with endpoints in U' and interior outside U'
    std::vector<std::vector<Vertex>> paths;
    std::set<std::pair<Vertex, Vertex>> used;
    for (Vertex s : out.u_prime) {
        for (Vertex nxt : adj[s]) {
            if (used.count({s, nxt})) continue;
            std::vector<Vertex> p{s};
            Vertex prev = s, cur = nxt;
            used.insert({s, nxt});
            while (true) {
                p.push_back(cur);
                if (uprime.count(cur)) break;
                Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
            }
            used.insert({p[p.size() - 1], p[p.size() - 2]});
            if (p.back() < p.front()) std::reverse(p.begin(), p.end());
            paths.push_back(std::move(p));
        }
    }
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    out.path = paths.front();
    out.middle = out.path[(out.path.size() - 1) / 2];

    long long bound = 21LL * out.length() + 1;
    if (t.size() > bound)
        fail(ErrorCode::LemmaViolation, "n(T) exceeds 21|P|+1");
    return out;
}

} // namespace hexdom
