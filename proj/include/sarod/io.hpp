#pragma once

#include "sarod/construction.hpp"
#include "sarod/rigidity.hpp"
#include "sarod/snl.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sarod {

using Json = nlohmann::ordered_json;

// Vertex ids are 1-based in every file format.
struct NetworkFile {
  Framework fw;
  std::vector<int> anchors;  // 0-based
  std::optional<Json> construction;
};

Json construction_to_json(const Construction& c);
Json network_to_json(const Framework& fw, const std::vector<int>& anchors, const Construction* c = nullptr);

// Throws std::invalid_argument with a field path (e.g. "vertices[3].pos").
NetworkFile network_from_json(const Json& j);

// Parse errors carry the line and column.
Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& j);
NetworkFile read_network(const std::string& path);

Json measurements_to_json(const MeasurementSet& m);
// Values are matched to the network's triples; every triple must be present.
MeasurementSet measurements_from_json(const Json& j, const SensorNetwork& net);

Json rank_report_to_json(const RankReport& r);
Json quad_report_to_json(const QuadReport& r);
Json solution_to_json(const EdgeSolution& s);
Json localization_to_json(const LocalizationResult& r);

// vertex_id,true_x,true_y,est_x,est_y,err
void write_result_csv(std::ostream& os, const Config2d& truth, const Config2d& estimate);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace sarod
