#include "hexdom/domination.hpp"

#include <algorithm>
#include <set>

namespace hexdom {

DominationCheck is_dominating(const EmbeddedGraph& g, const std::vector<Vertex>& set) {
    DominationCheck out;
    std::vector<char> covered(g.vertex_count(), 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorCode::BadVertexId, "set vertex " + std::to_string(v));
        covered[v] = 1;
        for (Vertex u : g.neighbors(v)) covered[u] = 1;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) out.uncovered.push_back(v);
    out.valid = out.uncovered.empty();
    return out;
}

DominationResult greedy(const EmbeddedGraph& g) {
    DominationResult out;
    out.provenance = "greedy";
    const int n = g.vertex_count();
    std::vector<char> covered(n, 0);
    int remaining = n;
    while (remaining > 0) {
        Vertex best = -1;
        int best_gain = -1;
        for (Vertex v = 0; v < n; ++v) {
            int gain = covered[v] ? 0 : 1;
            for (Vertex u : g.neighbors(v)) gain += covered[u] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        out.set.push_back(best);
        if (!covered[best]) {
            covered[best] = 1;
            --remaining;
        }
        for (Vertex u : g.neighbors(best))
            if (!covered[u]) {
                covered[u] = 1;
                --remaining;
            }
    }
    std::sort(out.set.begin(), out.set.end());
    out.size = static_cast<int>(out.set.size());
    out.valid = true;
    return out;
}

namespace {

struct Searcher {
    const EmbeddedGraph& g;
    int n;
    int max_closed; // maxdeg + 1
    std::vector<int> cover_count; // how many chosen vertices cover v
    std::vector<Vertex> chosen;
    std::vector<Vertex> best;

    explicit Searcher(const EmbeddedGraph& g_) : g(g_), n(g_.vertex_count()) {
        int maxd = 0;
        for (Vertex v = 0; v < n; ++v) maxd = std::max(maxd, g.degree(v));
        max_closed = maxd + 1;
        cover_count.assign(n, 0);
    }

    void take(Vertex v, int delta) {
        cover_count[v] += delta;
        for (Vertex u : g.neighbors(v)) cover_count[u] += delta;
    }

    void search() {
        int undominated = 0;
        Vertex pick = -1;
        int pick_options = 1 << 30;
        for (Vertex v = 0; v < n; ++v) {
            if (cover_count[v] == 0) {
                ++undominated;
                int options = 1 + g.degree(v);
                if (options < pick_options) {
                    pick_options = options;
                    pick = v;
                }
            }
        }
        if (undominated == 0) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        int lower = (undominated + max_closed - 1) / max_closed;
        if (chosen.size() + lower >= best.size()) return;
        // every dominator of `pick` in ascending order
        std::vector<Vertex> options{pick};
        for (Vertex u : g.neighbors(pick)) options.push_back(u);
        std::sort(options.begin(), options.end());
        for (Vertex u : options) {
            chosen.push_back(u);
            take(u, +1);
            search();
            take(u, -1);
            chosen.pop_back();
        }
    }
};

} // namespace

DominationResult exact_gamma(const EmbeddedGraph& g, std::optional<int> upper_hint,
                             int instance_limit) {
    if (g.vertex_count() > instance_limit)
        fail(ErrorCode::InstanceTooLarge,
             std::to_string(g.vertex_count()) + " vertices exceeds the exact-solver limit");
    DominationResult out;
    out.provenance = "exact";
    if (g.vertex_count() == 0) {
        out.valid = true;
        return out;
    }
    auto seed = greedy(g);
    Searcher s(g);
    s.best = seed.set;
    // upper_hint is advisory only: a hint below the greedy bound cannot be
    // trusted without a witness set, so the search keeps its own bound
    (void)upper_hint;
    s.search();
    out.set = s.best;
    std::sort(out.set.begin(), out.set.end());
    out.size = static_cast<int>(out.set.size());
    out.valid = is_dominating(g, out.set).valid;
    if (!out.valid) fail(ErrorCode::DominationFailure, "exact solver produced invalid set");
    return out;
}

// ── cylinder machinery ──────────────────────────────────────────────

std::vector<CylinderLabel> cylinder_label_neighbors(const CylinderSpec& s, int a, int b) {
    std::vector<CylinderLabel> out;
    auto push = [&](int aa, int bb) {
        if (bb < 0 || bb > s.ell) return;
        out.push_back({((aa % s.w) + s.w) % s.w, bb});
    };
    push(a + 1, b);
    push(a - 1, b);
    push(a, b + 1);
    push(a, b - 1);
    if (a < s.k) push(a + 1, b + 1);
    if (a > s.k || a == 0) push(a - 1, b + 1);
    int c = (a - 1 + s.w) % s.w;
    if (c < s.k && (c + 1) % s.w == a) push(c, b - 1);
    c = (a + 1) % s.w;
    if ((c > s.k || c == 0) && (c - 1 + s.w) % s.w == a) push(c, b - 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

/// Coverage bookkeeping over the label grid: cnt[v] counts set members in
/// the closed neighborhood of v. Interior vertices are those that must be
/// dominated (1 <= b <= ell-1).
struct SheetDomination {
    const CylinderSpec& spec;
    int stride;
    std::vector<std::vector<int>> nbrs; // flattened labels
    std::vector<char> interior;
    std::vector<int> cnt;
    std::vector<char> member;

    int id(int a, int b) const { return b * spec.w + a; }

    explicit SheetDomination(const CylinderSpec& s) : spec(s), stride(s.w) {
        int total = s.w * (s.ell + 1);
        nbrs.resize(total);
        interior.assign(total, 0);
        for (int a = 0; a < s.w; ++a) {
            for (int b = 0; b <= s.ell; ++b) {
                for (const auto& nb : cylinder_label_neighbors(s, a, b))
                    nbrs[id(a, b)].push_back(id(nb.a, nb.b));
                if (b >= 1 && b <= s.ell - 1) interior[id(a, b)] = 1;
            }
        }
        cnt.assign(total, 0);
        member.assign(total, 0);
    }

    void reset() {
        std::fill(cnt.begin(), cnt.end(), 0);
        std::fill(member.begin(), member.end(), 0);
    }

    void add(int v) {
        member[v] = 1;
        ++cnt[v];
        for (int u : nbrs[v]) ++cnt[u];
    }
    void remove(int v) {
        member[v] = 0;
        --cnt[v];
        for (int u : nbrs[v]) --cnt[u];
    }
    bool all_covered() const {
        for (size_t v = 0; v < cnt.size(); ++v)
            if (interior[v] && cnt[v] == 0) return false;
        return true;
    }
    /// Interior vertices covered only by v itself.
    bool removable(int v) const {
        if (interior[v] && cnt[v] == 1) return false;
        for (int u : nbrs[v])
            if (interior[u] && cnt[u] == 1) return false;
        return true;
    }
    std::vector<int> holes_after_removing(int p, int q) {
        std::vector<int> holes;
        remove(p);
        remove(q);
        auto scan = [&](int v) {
            if (interior[v] && cnt[v] == 0) holes.push_back(v);
        };
        scan(p);
        scan(q);
        for (int u : nbrs[p]) scan(u);
        for (int u : nbrs[q]) scan(u);
        std::sort(holes.begin(), holes.end());
        holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
        add(p);
        add(q);
        return holes;
    }
};

/// Base points of the sheet rows for a given cut position: row i carries
/// cylinder ring (cut + i) mod w; steps follow the diagonal pattern.
std::vector<LatticeCoord> sheet_bases(const CylinderSpec& s, int cut) {
    std::vector<LatticeCoord> base(s.w + 2);
    base[0] = {0, 0};
    for (int i = 0; i < s.w + 1; ++i) {
        int a = (cut + i) % s.w;
        base[i + 1] = base[i] + (a < s.k ? LatticeCoord{1, 0} : LatticeCoord{1, 1});
    }
    return base;
}

} // namespace

CylinderDominate cylinder_dominate(const CylinderSpec& spec) {
    spec.validate();
    if (spec.ell < 2) fail(ErrorCode::SpecOutOfRange, "cylinder_dominate needs ell >= 2");
    SheetDomination dom(spec);
    CylinderDominate out;
    out.bound = static_cast<long long>((spec.ell + 6) / 7) * (spec.w + 2);

    std::vector<int> best;
    bool have = false;
    auto good_enough = [&] { return have && static_cast<long long>(best.size()) <= out.bound; };

    for (int cut = 0; cut < spec.w && !good_enough(); ++cut) {
        auto base = sheet_bases(spec, cut);
        for (int mirror = 0; mirror < 2 && !good_enough(); ++mirror) {
            for (int residue = 0; residue < 7 && !good_enough(); ++residue) {
                std::set<int> sz;
                for (int i = 0; i < spec.w + 2; ++i) {
                    for (int b = 0; b <= spec.ell; ++b) {
                        long long x = base[i].x, y = base[i].y + b;
                        long long val = mirror ? (2 * x + y) : (x + 2 * y);
                        if (((val - residue) % 7 + 7) % 7 == 0)
                            sz.insert(dom.id((cut + i) % spec.w, b));
                    }
                }
                dom.reset();
                for (int v : sz) dom.add(v);
                if (!dom.all_covered()) continue;
                // drop provably redundant points, ascending
                for (int v : std::vector<int>(sz.begin(), sz.end())) {
                    if (dom.removable(v)) {
                        dom.remove(v);
                        sz.erase(v);
                    }
                }
                // replace two points by one while oversize
                bool improved = true;
                while (improved && static_cast<long long>(sz.size()) > out.bound) {
                    improved = false;
                    std::vector<int> cur(sz.begin(), sz.end());
                    for (size_t i = 0; i < cur.size() && !improved; ++i) {
                        for (size_t j = i + 1; j < cur.size() && !improved; ++j) {
                            auto holes = dom.holes_after_removing(cur[i], cur[j]);
                            if (holes.empty()) continue; // prune already handled singles
                            // a replacement must cover every hole
                            int h0 = holes[0];
                            std::vector<int> cands{h0};
                            for (int u : dom.nbrs[h0]) cands.push_back(u);
                            std::sort(cands.begin(), cands.end());
                            for (int cand : cands) {
                                if (dom.member[cand] ||
                                    cand == cur[i] || cand == cur[j])
                                    continue;
                                bool covers_all = true;
                                for (int h : holes) {
                                    bool c = (cand == h);
                                    for (int u : dom.nbrs[h])
                                        if (u == cand) c = true;
                                    if (!c) {
                                        covers_all = false;
                                        break;
                                    }
                                }
                                if (covers_all) {
                                    dom.remove(cur[i]);
                                    dom.remove(cur[j]);
                                    dom.add(cand);
                                    sz.erase(cur[i]);
                                    sz.erase(cur[j]);
                                    sz.insert(cand);
                                    improved = true;
                                    break;
                                }
                            }
                        }
                    }
                }
                if (!have || sz.size() < best.size()) {
                    best.assign(sz.begin(), sz.end());
                    have = true;
                    out.residue = residue;
                    out.cut = cut;
                    out.mirrored = mirror == 1;
                }
            }
        }
    }
    if (!have) fail(ErrorCode::DominationFailure, "no pattern candidate dominates the interior");
    dom.reset();
    for (int v : best) dom.add(v);
    if (!dom.all_covered())
        fail(ErrorCode::DominationFailure, "cylinder pattern set lost coverage");
    for (int v : best) out.set.push_back({v % spec.w, v / spec.w});
    std::sort(out.set.begin(), out.set.end());
    out.size = static_cast<int>(out.set.size());
    out.bound_ok = out.size <= out.bound;
    return out;
}

DominationResult cylinder_complete(const EmbeddedGraph& g, const CylinderSpec& spec,
                                   const std::vector<Vertex>& label_map) {
    spec.validate();
    if (static_cast<int>(label_map.size()) != spec.patch_vertices())
        fail(ErrorCode::LabelMismatch, "label map size differs from w(ell+1)");
    std::vector<char> labeled(g.vertex_count(), 0);
    for (Vertex v : label_map) {
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorCode::LabelMismatch, "label maps outside the host");
        if (labeled[v]) fail(ErrorCode::LabelMismatch, "label map repeats a vertex");
        labeled[v] = 1;
    }
    // every cylinder edge must be present between the labeled vertices
    for (int a = 0; a < spec.w; ++a) {
        for (int b = 0; b <= spec.ell; ++b) {
            Vertex u = label_map[spec.vertex(a, b)];
            for (const auto& nb : cylinder_label_neighbors(spec, a, b)) {
                Vertex v = label_map[spec.vertex(nb.a, nb.b)];
                if (!g.adjacent(u, v))
                    fail(ErrorCode::LabelMismatch,
                         "cylinder edge missing at z(" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
            }
        }
    }

    auto sz = cylinder_dominate(spec);
    std::set<Vertex> d;
    for (const auto& lbl : sz.set) d.insert(label_map[spec.vertex(lbl.a, lbl.b)]);
    // all non-interior vertices join wholesale
    std::vector<char> interior(g.vertex_count(), 0);
    for (int a = 0; a < spec.w; ++a)
        for (int b = 1; b < spec.ell; ++b) interior[label_map[spec.vertex(a, b)]] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!interior[v]) d.insert(v);

    DominationResult out;
    out.provenance = "cylinder";
    out.set.assign(d.begin(), d.end());
    out.size = static_cast<int>(out.set.size());
    auto check = is_dominating(g, out.set);
    out.valid = check.valid;
    if (!out.valid)
        fail(ErrorCode::DominationFailure, "cylinder completion left vertices uncovered");
    BoundCheck bc;
    bc.numerator = static_cast<long long>((spec.ell + 6) / 7) * (spec.w + 2) +
                   g.vertex_count() - static_cast<long long>(spec.w) * (spec.ell - 1);
    bc.denominator = 1;
    bc.holds = out.size <= bc.numerator;
    out.bound_checked = bc;
    if (!bc.holds)
        fail(ErrorCode::DominationFailure, "cylinder completion exceeds its size bound");
    return out;
}

} // namespace hexdom
