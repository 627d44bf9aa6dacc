#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "primepark/classical.hpp"
#include "primepark/enumeration.hpp"
#include "primepark/lattice_path.hpp"
#include "primepark/markov.hpp"
#include "primepark/parking.hpp"

namespace primepark {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "sink": "0", "edges": [["v1","v2",1], ...],
///  "parts": [["v1","v2"], ...]}; "parts" is optional.
RootedMultigraph graph_from_json(const Json& doc);
Json graph_to_json(const RootedMultigraph& graph);
RootedMultigraph load_graph(const std::string& path);

/// {"values": {"v1": 2, "v2": 0}}, one entry per non-sink vertex.
std::vector<Grains> values_from_json(const RootedMultigraph& graph, const Json& doc, const std::string& key = "values");
Json values_to_json(const RootedMultigraph& graph, std::span<const Grains> values);
Configuration load_configuration(const RootedMultigraph& graph, const std::string& path);
/// Same format; positivity is checked here.
ParkingCandidate load_parking(const RootedMultigraph& graph, const std::string& path);
/// {"weights": {"v1": 0.5, "v2": 0.5}}.
std::vector<double> load_weights(const RootedMultigraph& graph, const std::string& path);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// family,params,class,count,expected,match,millis
void write_reports_csv(std::ostream& out, const std::vector<EnumerationReport>& reports);
Json reports_to_json(const std::vector<EnumerationReport>& reports);

/// {"vertices": [...], "class": "...", "count": n, "elements": [[...], ...]}
Json elements_to_json(const RootedMultigraph& graph, ElementClass cls, const std::vector<std::vector<Grains>>& elements);
std::vector<std::vector<Grains>> elements_from_json(const Json& doc);

/// step,dropped_vertex,configuration
void write_markov_trace_csv(std::ostream& out, const RootedMultigraph& graph, const MarkovRun& run);

/// Plain SVG polylines, one per path, on a unit grid scaled by `scale`.
std::string paths_to_svg(const std::vector<std::vector<std::pair<int, int>>>& paths, int scale = 20);

std::string big_to_string(const BigInt& x);

}  // namespace primepark
