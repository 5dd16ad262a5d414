#pragma once

#include <string>

#include <json.hpp>

#include "hexdom/domination.hpp"
#include "hexdom/pipeline.hpp"
#include "hexdom/surgery.hpp"

namespace hexdom {

using json = nlohmann::json;

/// Interchange format: {"n": <int>, "rotations": [[<int>,...],...]},
/// vertex ids 0-based, neighbor lists counterclockwise.
json graph_to_json(const EmbeddedGraph& g);
EmbeddedGraph graph_from_json(const json& j);

json result_to_json(const DominationResult& r);

json cut_disc_to_json(const CutDisc& cd);
CutDisc cut_disc_from_json(const json& j);

json development_to_json(const Development& dev);

json report_to_json(const PipelineReport& rep);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace hexdom
