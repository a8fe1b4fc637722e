#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "heatfk/graph.hpp"
#include "heatfk/report.hpp"

namespace heatfk {

using Json = nlohmann::ordered_json;

// Graph files: {"measure_kind", "vertices": [{"id", "m"?}], "edges": [{"u", "v", "b"}]},
// one entry per unordered pair, "m" present iff the measure is explicit.
// Violations throw SchemaError with the offending field or line.
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& doc);
std::string dump_graph(const WeightedGraph& g);
WeightedGraph parse_graph(const std::string& text);
WeightedGraph load_graph(const std::string& path);
void save_graph(const WeightedGraph& g, const std::string& path);

// Non-finite numbers become the strings "inf", "-inf", "nan".
Json number_json(double v);

Json report_to_json(const PropertyReport& rep, const std::string& config_hash);
std::string dump_report(const PropertyReport& rep, const std::string& config_hash);

// Shortest round-trip decimal form, independent of the C locale.
std::string format_number(double v);

const std::string& csv_header();
// One row per grid point; coordinates are joined as key=value;key=value.
std::vector<std::string> csv_rows(const std::string& graph_name, const PropertyReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

} // namespace heatfk
