#include "hexdom/json_io.hpp"

#include <fstream>

namespace hexdom {

json graph_to_json(const EmbeddedGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["rotations"] = g.rotations();
    return j;
}

EmbeddedGraph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("rotations"))
        fail(ErrorCode::InvalidInput, "graph json needs fields n and rotations");
    int n = j.at("n").get<int>();
    auto rot = j.at("rotations").get<std::vector<std::vector<Vertex>>>();
    return EmbeddedGraph::build(n, std::move(rot));
}

json result_to_json(const DominationResult& r) {
    json j;
    j["set"] = r.set;
    j["size"] = r.size;
    j["valid"] = r.valid;
    j["provenance"] = r.provenance;
    if (r.bound_checked) {
        j["bound"] = {{"numerator", r.bound_checked->numerator},
                      {"denominator", r.bound_checked->denominator},
                      {"holds", r.bound_checked->holds}};
    }
    return j;
}

json cut_disc_to_json(const CutDisc& cd) {
    json j;
    j["n"] = cd.disc.n;
    j["rotations"] = cd.disc.rot;
    j["twins"] = cd.disc.twin;
    j["copy_map"] = cd.copy_map;
    j["tree_copy"] = cd.tree_copy;
    j["outer_face"] = cd.outer_face;
    j["original_n"] = cd.original_n;
    j["tree_size"] = cd.tree_size;
    return j;
}

CutDisc cut_disc_from_json(const json& j) {
    CutDisc cd;
    cd.disc.n = j.at("n").get<int>();
    cd.disc.rot = j.at("rotations").get<std::vector<std::vector<Vertex>>>();
    cd.disc.twin = j.at("twins").get<std::vector<std::vector<int>>>();
    cd.copy_map = j.at("copy_map").get<std::vector<Vertex>>();
    auto tc = j.at("tree_copy").get<std::vector<int>>();
    cd.tree_copy.assign(tc.begin(), tc.end());
    cd.outer_face = j.at("outer_face").get<int>();
    cd.original_n = j.at("original_n").get<int>();
    cd.tree_size = j.at("tree_size").get<int>();
    return cd;
}

json development_to_json(const Development& dev) {
    json coords = json::array();
    for (const auto& c : dev.coord) coords.push_back({c.x, c.y});
    json j;
    j["coords"] = coords;
    j["anchor_face"] = dev.anchor_face;
    return j;
}

json report_to_json(const PipelineReport& rep) {
    json j;
    j["n"] = rep.n;
    j["deficiency_set"] = rep.deficiency;
    j["steiner_size"] = rep.steiner_size;
    j["path_length"] = rep.path_length;
    j["threshold_ok"] = rep.threshold_ok;
    j["branch"] = rep.branch;
    if (!rep.fallback_reason.empty()) j["fallback_reason"] = rep.fallback_reason;
    if (rep.hexagon_r >= 0) j["hexagon_r"] = rep.hexagon_r;
    if (rep.overlap_q >= 0) j["overlap_q"] = rep.overlap_q;
    if (rep.cylinder) {
        j["cylinder"] = {{"w", rep.cylinder->w}, {"ell", rep.cylinder->ell},
                         {"k", rep.cylinder->k}};
    }
    if (rep.residue >= 0) j["residue"] = rep.residue;
    j["result"] = result_to_json(rep.result);
    auto bound_json = [](const BoundCheck& b) {
        return json{{"numerator", b.numerator},
                    {"denominator", b.denominator},
                    {"holds", b.holds}};
    };
    if (rep.branch1_bound) j["branch1_bound"] = bound_json(*rep.branch1_bound);
    if (rep.cylinder_bound) j["cylinder_bound"] = bound_json(*rep.cylinder_bound);
    j["quarter_bound"] = bound_json(rep.quarter_bound);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace hexdom
