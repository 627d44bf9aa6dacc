#include "primepark/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace primepark {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

RootedMultigraph graph_from_json(const Json& doc) {
  const Json& vs = field(doc, "vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<std::string> names;
  for (const auto& v : vs) names.push_back(as_string(v, "vertex name"));
  const std::string sink = as_string(field(doc, "sink"), "\"sink\"");
  const Json& es = field(doc, "edges");
  if (!es.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<EdgeSpec> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) {
      throw ParseError("each edge must be [from, to, multiplicity]");
    }
    edges.push_back({as_string(e[0], "edge endpoint"), as_string(e[1], "edge endpoint"), e[2].get<Multiplicity>()});
  }
  RootedMultigraph graph = build_graph(std::move(names), sink, edges);
  if (doc.contains("parts")) {
    std::vector<std::vector<VertexId>> parts;
    for (const auto& part : doc.at("parts")) {
      std::vector<VertexId> ids;
      for (const auto& v : part) ids.push_back(graph.id(as_string(v, "part member")));
      parts.push_back(std::move(ids));
    }
    graph = graph.with_parts(std::move(parts));
  }
  return graph;
}

Json graph_to_json(const RootedMultigraph& graph) {
  Json doc;
  Json vs = Json::array();
  for (VertexId v : graph.declaration_order()) vs.push_back(graph.name(v));
  doc["vertices"] = vs;
  doc["sink"] = graph.name(graph.sink());
  Json es = Json::array();
  for (const auto& e : graph.edges()) es.push_back(Json::array({e.from, e.to, e.multiplicity}));
  doc["edges"] = es;
  if (graph.has_parts()) {
    Json parts = Json::array();
    for (const auto& part : graph.parts()) {
      Json names = Json::array();
      for (VertexId v : part) names.push_back(graph.name(v));
      parts.push_back(names);
    }
    doc["parts"] = parts;
  }
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

RootedMultigraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

std::vector<Grains> values_from_json(const RootedMultigraph& graph, const Json& doc, const std::string& key) {
  const Json& obj = field(doc, key.c_str());
  if (!obj.is_object()) throw ParseError("\"" + key + "\" must be an object");
  std::vector<Grains> out(graph.non_sink_count());
  std::vector<bool> seen(out.size(), false);
  for (const auto& [name, value] : obj.items()) {
    if (!graph.has_vertex(name)) throw ParseError("unknown vertex '" + name + "'");
    const VertexId v = graph.id(name);
    if (graph.is_sink(v)) throw ParseError("the sink '" + name + "' carries no value");
    if (!value.is_number_integer()) throw ParseError("value for '" + name + "' must be an integer");
    out[v] = value.get<Grains>();
    seen[v] = true;
  }
  for (VertexId v = 0; v < out.size(); ++v) {
    if (!seen[v]) throw ParseError("missing value for vertex '" + graph.name(v) + "'");
  }
  return out;
}

Json values_to_json(const RootedMultigraph& graph, std::span<const Grains> values) {
  Json obj = Json::object();
  for (VertexId v : graph.declaration_order()) {
    if (!graph.is_sink(v)) obj[graph.name(v)] = values[v];
  }
  return Json{{"values", obj}};
}

Configuration load_configuration(const RootedMultigraph& graph, const std::string& path) {
  return Configuration(values_from_json(graph, read_json_file(path)));
}

ParkingCandidate load_parking(const RootedMultigraph& graph, const std::string& path) {
  return ParkingCandidate(values_from_json(graph, read_json_file(path)));
}

std::vector<double> load_weights(const RootedMultigraph& graph, const std::string& path) {
  const Json doc = read_json_file(path);
  const Json& obj = field(doc, "weights");
  if (!obj.is_object()) throw ParseError("\"weights\" must be an object");
  std::vector<double> out(graph.non_sink_count());
  std::vector<bool> seen(out.size(), false);
  for (const auto& [name, value] : obj.items()) {
    if (!graph.has_vertex(name) || graph.is_sink(graph.id(name))) {
      throw ParseError("weight for unknown or sink vertex '" + name + "'");
    }
    if (!value.is_number()) throw ParseError("weight for '" + name + "' must be a number");
    out[graph.id(name)] = value.get<double>();
    seen[graph.id(name)] = true;
  }
  for (VertexId v = 0; v < out.size(); ++v) {
    if (!seen[v]) throw ParseError("missing weight for vertex '" + graph.name(v) + "'");
  }
  return out;
}

std::string big_to_string(const BigInt& x) { return x.str(); }

namespace {

Json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_reports_csv(std::ostream& out, const std::vector<EnumerationReport>& reports) {
  out << "family,params,class,count,expected,match,millis\n";
  for (const auto& r : reports) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << r.millis;
    out << csv_field(r.family) << ',' << csv_field(r.params) << ',' << r.class_label << ',' << r.count << ','
        << (r.expected ? r.expected->str() : "") << ',' << (r.match ? "true" : "false") << ',' << ms.str() << '\n';
  }
}

Json reports_to_json(const std::vector<EnumerationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["family"] = r.family;
    j["params"] = r.params;
    j["class"] = r.class_label;
    j["count"] = big_to_json(r.count);
    j["expected"] = r.expected ? big_to_json(*r.expected) : Json(nullptr);
    j["source"] = r.source;
    j["match"] = r.match;
    j["millis"] = r.millis;
    arr.push_back(j);
  }
  return arr;
}

Json elements_to_json(const RootedMultigraph& graph, ElementClass cls,
                      const std::vector<std::vector<Grains>>& elements) {
  Json doc;
  Json names = Json::array();
  for (VertexId v = 0; v < graph.non_sink_count(); ++v) names.push_back(graph.name(v));
  doc["vertices"] = names;
  doc["class"] = class_name(cls);
  doc["count"] = elements.size();
  doc["elements"] = elements;
  return doc;
}

std::vector<std::vector<Grains>> elements_from_json(const Json& doc) {
  try {
    return field(doc, "elements").get<std::vector<std::vector<Grains>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad element list: ") + e.what());
  }
}

void write_markov_trace_csv(std::ostream& out, const RootedMultigraph& graph, const MarkovRun& run) {
  out << "step,dropped_vertex,configuration\n";
  for (const auto& s : run.trace) {
    out << s.step << ',' << (s.step == 0 ? "" : graph.name(s.dropped)) << ",\"" << format_values(s.state.values())
        << "\"\n";
  }
}

std::string paths_to_svg(const std::vector<std::vector<std::pair<int, int>>>& paths, int scale) {
  int max_x = 1;
  int min_y = 0;
  int max_y = 1;
  for (const auto& path : paths) {
    for (auto [x, y] : path) {
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  const int pad = scale;
  const int width = max_x * scale + 2 * pad;
  const int height = (max_y - min_y) * scale + 2 * pad;
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    os << "  <polyline fill=\"none\" stroke=\"" << colours[i % 4] << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < paths[i].size(); ++k) {
      const auto [x, y] = paths[i][k];
      os << (k ? " " : "") << pad + x * scale << ',' << pad + (max_y - y) * scale;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace primepark
