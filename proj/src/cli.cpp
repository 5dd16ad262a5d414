#include "hexdom/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hexdom/json_io.hpp"
#include "hexdom/marginal.hpp"
#include "hexdom/render.hpp"

namespace hexdom {

namespace {

EmbeddedGraph make_family(const std::string& family, int m, int w, int ell, int k) {
    if (family == "octahedron") return octahedron();
    if (family == "geodesic") return geodesic_sphere(m);
    if (family == "band") return band_graph(m);
    if (family == "mt") return mt_family(m);
    if (family == "hex") return hex_patch(m).graph;
    if (family == "cylinder-patch") return cylinder_patch({w, ell, k});
    if (family == "cylinder-sphere") return cylinder_sphere({w, ell, k});
    fail(ErrorCode::UsageError, "unknown family " + family);
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.hi < r.lo) fail(ErrorCode::UsageError, "empty range " + text);
    return r;
}

int cmd_generate(const std::string& family, int m, int w, int ell, int k,
                 const std::string& out) {
    auto g = make_family(family, m, w, ell, k);
    json j = graph_to_json(g);
    if (out.empty()) std::cout << j.dump() << "\n";
    else save_json_file(out, j);
    std::cerr << "generated " << family << ": n=" << g.vertex_count()
              << " e=" << g.edge_count() << "\n";
    return 0;
}

int cmd_solve(const std::string& graph_path, bool exact, int limit,
              const std::string& out) {
    auto g = graph_from_json(load_json_file(graph_path));
    DominationResult r = exact ? exact_gamma(g, std::nullopt, limit) : greedy(g);
    json j = result_to_json(r);
    if (out.empty()) std::cout << j.dump() << "\n";
    else save_json_file(out, j);
    std::cerr << (exact ? "gamma = " : "greedy size = ") << r.size << "\n";
    return r.valid ? 0 : 1;
}

int cmd_construct(const std::string& graph_path, int force_branch,
                  const std::string& report_path, const std::string& out) {
    auto g = graph_from_json(load_json_file(graph_path));
    PipelineOptions opts;
    opts.force_branch = force_branch;
    auto rep = quarter_dominating_set(g, opts);
    json j = report_to_json(rep);
    if (!report_path.empty()) save_json_file(report_path, j);
    if (out.empty()) std::cout << j.dump() << "\n";
    else save_json_file(out, result_to_json(rep.result));
    std::cerr << "branch=" << rep.branch << " size=" << rep.result.size << " n/4="
              << rep.n / 4.0 << "\n";
    return rep.result.valid ? 0 : 1;
}

int cmd_verify_lemmas(const std::string& graph_path, int samples, uint32_t seed) {
    auto g = graph_from_json(load_json_file(graph_path));
    auto rep = verify_lemmas(g, samples, seed);
    std::cout << "samples " << rep.samples << "\n";
    std::cout << "lemma1 pass " << rep.lemma1_pass << " fail " << rep.lemma1_fail << "\n";
    std::cout << "lemma3 pass " << rep.lemma3_pass << " fail " << rep.lemma3_fail << "\n";
    std::cout << "walk-range pass " << rep.walk_range_pass << " fail " << rep.walk_range_fail
              << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_cut(const std::string& graph_path, const std::string& out) {
    auto g = graph_from_json(load_json_file(graph_path));
    auto u = deficiency_set(g);
    auto tree = min_steiner_tree(g, u);
    auto cd = cut_along_tree(g, tree);
    json j = cut_disc_to_json(cd);
    if (out.empty()) std::cout << j.dump() << "\n";
    else save_json_file(out, j);
    std::cerr << "disc: n=" << cd.disc.n << " tree copies=" << cd.tree_copies().size()
              << "\n";
    return 0;
}

int cmd_develop(const std::string& disc_path, const std::string& out) {
    auto cd = cut_disc_from_json(load_json_file(disc_path));
    auto dev = develop(cd);
    json j = development_to_json(dev);
    if (out.empty()) std::cout << j.dump() << "\n";
    else save_json_file(out, j);
    return 0;
}

int cmd_render(const std::string& graph_path, const std::string& coords_path,
               const std::string& set_path, const std::string& out) {
    auto g = graph_from_json(load_json_file(graph_path));
    std::optional<std::vector<LatticeCoord>> coords;
    if (!coords_path.empty()) {
        auto j = load_json_file(coords_path);
        std::vector<LatticeCoord> cs;
        for (const auto& e : j.at("coords")) cs.push_back({e.at(0), e.at(1)});
        coords = cs;
    }
    RenderOptions opts;
    if (!set_path.empty()) {
        auto j = load_json_file(set_path);
        opts.highlight = j.at("set").get<std::vector<Vertex>>();
    }
    auto svg = render_svg(g, coords, opts);
    if (out.empty()) {
        std::cout << svg;
    } else {
        std::ofstream f(out);
        if (!f) fail(ErrorCode::InvalidInput, "cannot write " + out);
        f << svg;
    }
    return 0;
}

int cmd_stats(const std::string& family, const Range& range, const std::string& format,
              int exact_limit) {
    bool tsv = format != "json";
    json rows = json::array();
    if (tsv)
        std::cout << "family\tparam\tn\tgamma_or_bound\tpipeline\tbranch\tn/4\tn/6\n";
    for (int p = range.lo; p <= range.hi; ++p) {
        EmbeddedGraph g = make_family(family, p, p, p, 0);
        PipelineReport rep = quarter_dominating_set(g);
        std::string gamma = "-";
        if (g.vertex_count() <= exact_limit)
            gamma = std::to_string(exact_gamma(g, std::nullopt, exact_limit).size);
        if (tsv) {
            std::cout << family << "\t" << p << "\t" << g.vertex_count() << "\t" << gamma
                      << "\t" << rep.result.size << "\t" << rep.branch << "\t"
                      << g.vertex_count() / 4.0 << "\t" << g.vertex_count() / 6.0 << "\n";
        } else {
            rows.push_back({{"family", family},
                            {"param", p},
                            {"n", g.vertex_count()},
                            {"gamma_or_bound", gamma},
                            {"pipeline", rep.result.size},
                            {"branch", rep.branch},
                            {"quarter", g.vertex_count() / 4.0},
                            {"sixth", g.vertex_count() / 6.0}});
        }
    }
    if (!tsv) std::cout << rows.dump(2) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"dominating sets in max-degree-6 plane triangulations"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a graph family as JSON");
    std::string gen_family;
    int gen_m = 2, gen_w = 6, gen_ell = 10, gen_k = 0;
    std::string gen_out;
    gen->add_option("family", gen_family,
                    "octahedron|geodesic|band|mt|hex|cylinder-patch|cylinder-sphere")
        ->required();
    gen->add_option("--m", gen_m, "family parameter (m, k or r)");
    gen->add_option("--w", gen_w, "cylinder width");
    gen->add_option("--ell", gen_ell, "cylinder length");
    gen->add_option("--twist", gen_k, "cylinder twist");
    gen->add_option("-o,--out", gen_out, "output file");

    // solve
    auto* solve = app.add_subcommand("solve", "dominating set for a graph");
    std::string solve_graph, solve_out;
    bool solve_exact = false, solve_greedy = false;
    int solve_limit = 60;
    solve->add_option("--graph", solve_graph)->required();
    solve->add_flag("--exact", solve_exact);
    solve->add_flag("--greedy", solve_greedy);
    solve->add_option("--limit", solve_limit, "exact-solver size cap");
    solve->add_option("-o,--out", solve_out);

    // construct
    auto* con = app.add_subcommand("construct", "run the constructive pipeline");
    std::string con_graph, con_json, con_out;
    int con_force = 0;
    con->add_option("--graph", con_graph)->required();
    con->add_option("--force-branch", con_force)->check(CLI::Range(0, 2));
    con->add_option("--json", con_json, "write the full report here");
    con->add_option("-o,--out", con_out, "write the result set here");

    // verify-lemmas
    auto* ver = app.add_subcommand("verify-lemmas", "empirical lemma checks");
    std::string ver_graph;
    int ver_samples = 100;
    uint32_t ver_seed = 1;
    ver->add_option("--graph", ver_graph)->required();
    ver->add_option("--samples", ver_samples);
    ver->add_option("--seed", ver_seed);

    // cut
    auto* cut = app.add_subcommand("cut", "cut along the deficiency Steiner tree");
    std::string cut_graph, cut_out;
    cut->add_option("--graph", cut_graph)->required();
    cut->add_option("--out,-o", cut_out);

    // develop
    auto* devc = app.add_subcommand("develop", "lattice coordinates for a cut disc");
    std::string dev_disc, dev_out;
    devc->add_option("disc", dev_disc)->required();
    devc->add_option("-o,--out", dev_out);

    // render
    auto* ren = app.add_subcommand("render", "draw a graph as SVG");
    std::string ren_graph, ren_coords, ren_set, ren_out;
    ren->add_option("graph", ren_graph)->required();
    ren->add_option("--coords", ren_coords, "development coords JSON");
    ren->add_option("--set", ren_set, "result JSON whose set gets highlighted");
    ren->add_option("-o,--out", ren_out);

    // stats
    auto* st = app.add_subcommand("stats", "table across a family");
    std::string st_family = "band", st_range = "1..4", st_format = "tsv";
    int st_limit = 60;
    st->add_option("--family", st_family);
    st->add_option("--k,--m,--r", st_range, "parameter range lo..hi");
    st->add_option("--format", st_format, "tsv|json");
    st->add_option("--limit", st_limit);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_family, gen_m, gen_w, gen_ell, gen_k, gen_out);
        if (solve->parsed()) {
            if (solve_exact == solve_greedy)
                fail(ErrorCode::UsageError, "choose exactly one of --exact / --greedy");
            return cmd_solve(solve_graph, solve_exact, solve_limit, solve_out);
        }
        if (con->parsed()) return cmd_construct(con_graph, con_force, con_json, con_out);
        if (ver->parsed()) return cmd_verify_lemmas(ver_graph, ver_samples, ver_seed);
        if (cut->parsed()) return cmd_cut(cut_graph, cut_out);
        if (devc->parsed()) return cmd_develop(dev_disc, dev_out);
        if (ren->parsed()) return cmd_render(ren_graph, ren_coords, ren_set, ren_out);
        if (st->parsed()) return cmd_stats(st_family, parse_range(st_range), st_format, st_limit);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::UsageError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace hexdom
