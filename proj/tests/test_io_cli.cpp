#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "primepark/cli.hpp"
#include "primepark/io.hpp"
#include "primepark/markov.hpp"
#include "primepark/witness.hpp"
#include "support.hpp"

using namespace primepark;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("primepark_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (path / name).string();
    write_text_file(p, text);
    return p;
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kK2 = R"({"vertices": ["0", "v1", "v2"], "sink": "0",
  "edges": [["0", "v1", 1], ["0", "v2", 1], ["v1", "v2", 1]]})";

std::string values(const std::string& a, const std::string& b) {
  return R"({"values": {"v1": )" + a + R"(, "v2": )" + b + "}}";
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("graph JSON round trip", "[cli]") {
  for (const auto& [label, g] : family_graphs(5)) {
    INFO(label);
    const Json doc = graph_to_json(g);
    const auto back = graph_from_json(Json::parse(doc.dump()));
    CHECK(back.describe() == g.describe());
    CHECK(back.parts() == g.parts());
    CHECK(spanning_tree_count(back) == spanning_tree_count(g));
  }
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["0"]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["0","a"], "sink": "0", "edges": [["a","a",1]]})")),
                  GraphError);
}

TEST_CASE("value JSON", "[cli]") {
  const auto g = k2();
  CHECK(values_from_json(g, Json::parse(values("2", "0"))) == std::vector<Grains>{2, 0});
  CHECK_THROWS_AS(values_from_json(g, Json::parse(R"({"values": {"v1": 1}})")), ParseError);
  CHECK_THROWS_AS(values_from_json(g, Json::parse(R"({"values": {"v1": 1, "v2": 1, "x": 1}})")), ParseError);
  CHECK(values_from_json(g, values_to_json(g, std::vector<Grains>{4, -1})) == std::vector<Grains>{4, -1});

  TempDir dir;
  const auto bad = dir.write("p.json", values("0", "1"));
  CHECK_THROWS_AS(load_parking(g, bad), DomainError);
  CHECK_THROWS_AS(read_json_file(dir.write("broken.json", "{nope")), ParseError);
  CHECK_THROWS_AS(read_json_file((dir.path / "missing.json").string()), ParseError);
}

TEST_CASE("element and report serialisation", "[cli]") {
  const auto g = k2();
  const std::vector<std::vector<Grains>> elements{{1, 1}, {1, 2}};
  const Json doc = elements_to_json(g, ElementClass::Pf, elements);
  CHECK(doc["count"] == 2);
  CHECK(elements_from_json(doc) == elements);

  EnumerationReport r{"complete", "n=4", "ppf", 27, BigInt(27), "closed-form:ppf", true, 1.5};
  std::ostringstream csv;
  write_reports_csv(csv, {r});
  CHECK(csv.str().rfind("family,params,class,count,expected,match,millis\n", 0) == 0);
  CHECK(contains(csv.str(), "complete,n=4,ppf,27,27,true,"));
  CHECK(reports_to_json({r})[0]["count"] == 27);

  BigInt huge = 1;
  for (int i = 0; i < 30; ++i) huge *= 1000;
  CHECK(big_to_string(huge) == "1" + std::string(90, '0'));
}

TEST_CASE("markov trace CSV", "[cli]") {
  const auto g = k2();
  const auto run = markov_run(g, Configuration({0, 0}), uniform_weights(2), 3, 1, true);
  std::ostringstream os;
  write_markov_trace_csv(os, g, run);
  std::istringstream lines(os.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "step,dropped_vertex,configuration");
  std::getline(lines, line);
  CHECK(line == "0,,\"0,0\"");  // the start row has no dropped vertex
  std::size_t rows = 1;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("svg rendering", "[cli]") {
  const auto svg = paths_to_svg({{{0, 0}, {1, 0}, {1, 1}}});
  CHECK(contains(svg, "<svg"));
  CHECK(contains(svg, "<polyline"));
}

TEST_CASE("check subcommand exit codes", "[cli]") {
  TempDir dir;
  const auto graph = dir.write("k2.json", kK2);
  const auto c11 = dir.write("c11.json", values("1", "1"));
  const auto c00 = dir.write("c00.json", values("0", "0"));
  const auto c20 = dir.write("c20.json", values("2", "0"));
  const auto p12 = dir.write("p12.json", values("1", "2"));
  const auto p22 = dir.write("p22.json", values("2", "2"));

  auto r = cli({"check", "--graph", graph, "--input", c11, "--property", "recurrent"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "burning sequence: (0, v1, v2)"));
  r = cli({"check", "--graph", graph, "--input", c00, "--property", "recurrent"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "forbidden set: {v1,v2}"));
  r = cli({"check", "--graph", graph, "--input", c20, "--property", "recurrent"});
  CHECK(r.code == 1);
  for (const std::string oracle : {"burning", "forbidden", "orientation"}) {
    CHECK(cli({"check", "--graph", graph, "--input", c11, "--property", "recurrent", "--oracle", oracle}).code == 0);
    CHECK(cli({"check", "--graph", graph, "--input", c00, "--property", "recurrent", "--oracle", oracle}).code == 1);
  }

  CHECK(cli({"check", "--graph", graph, "--input", c11, "--property", "strongly-recurrent"}).code == 0);
  CHECK(cli({"check", "--graph", graph, "--input", c11, "--property", "strongly-recurrent", "--quantifier", "exists"}).code == 0);
  CHECK(cli({"check", "--graph", graph, "--input", c00, "--property", "minimal-recurrent"}).code == 1);

  r = cli({"check", "--graph", graph, "--input", p12, "--property", "parking", "--oracle", "fast"});
  CHECK(r.code == 0);
  r = cli({"check", "--graph", graph, "--input", p12, "--property", "prime"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "failing vertex: v1"));
  CHECK(contains(r.out, "({v1},{v2})"));
  CHECK(cli({"check", "--graph", graph, "--input", p12, "--property", "prime", "--oracle", "bruteforce"}).code == 1);
  CHECK(cli({"check", "--graph", graph, "--input", p22, "--property", "parking"}).code == 1);
  r = cli({"check", "--graph", graph, "--input", p22, "--property", "prime"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));

  CHECK(cli({"check", "--graph", graph, "--input", c11, "--property", "nonsense"}).code == 2);
  CHECK(cli({"check", "--graph", (dir.path / "none.json").string(), "--input", c11, "--property", "recurrent"})
            .code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("enumerate subcommand", "[cli]") {
  auto r = cli({"enumerate", "--family", "wheel", "--n", "5", "--class", "sr-forall", "--expected"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, ",6,6,true,"));
  r = cli({"enumerate", "--family", "complete", "--n", "4", "--class", "ppf", "--expected", "--output", "list"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count: 27"));
  r = cli({"enumerate", "--family", "tripartite", "--p", "2", "--q", "2", "--class", "ppf", "--output", "json"});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["count"] == 5);
  CHECK(doc["elements"].size() == 5);
  CHECK(cli({"enumerate", "--family", "wheel", "--n", "4", "--class", "pf-inc"}).code == 2);
  CHECK(cli({"enumerate", "--family", "complete", "--n", "7", "--class", "pf", "--space-cap", "10"}).code == 2);
  CHECK(cli({"--jobs", "2", "enumerate", "--family", "complete", "--n", "5", "--class", "ppf", "--expected"}).code ==
        0);

  TempDir dir;
  const auto graph = dir.write("k2.json", kK2);
  r = cli({"enumerate", "--graph", graph, "--class", "recurrent", "--expected", "--output", "list"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count: 3"));
}

TEST_CASE("decompose subcommand", "[cli]") {
  TempDir dir;
  const auto graph = dir.write("k2.json", kK2);
  auto r = cli({"decompose", "--graph", graph, "--pf", dir.write("p.json", values("1", "2"))});
  CHECK(r.code == 0);
  CHECK(r.out == "({v1},{v2})\n");
  r = cli({"decompose", "--graph", graph, "--pf", dir.write("q.json", values("1", "1")), "--all"});
  CHECK(r.code == 0);
  CHECK(r.out == "({v1,v2})\ndecompositions: 1\n");
  CHECK(cli({"decompose", "--graph", graph, "--pf", dir.write("r.json", values("2", "2"))}).code == 2);
}

TEST_CASE("simulate subcommand", "[cli]") {
  TempDir dir;
  const auto graph = dir.write("k2.json", kK2);
  const auto t1 = (dir.path / "t1.csv").string();
  const auto t2 = (dir.path / "t2.csv").string();
  CHECK(cli({"simulate", "--graph", graph, "--steps", "10000", "--seed", "5", "--trace", t1}).code == 0);
  CHECK(cli({"simulate", "--graph", graph, "--steps", "10000", "--seed", "5", "--trace", t2}).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(t1) == slurp(t2));
  CHECK_FALSE(slurp(t1).empty());
  auto r = cli({"simulate", "--graph", graph, "--steps", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "distinct stable configurations visited: 1"));

  const auto mu = dir.write("mu.json", R"({"weights": {"v1": 0.25, "v2": 0.75}})");
  CHECK(cli({"simulate", "--graph", graph, "--steps", "50", "--mu", mu}).code == 0);
  const auto bad = dir.write("bad.json", R"({"weights": {"v1": 0.2, "v2": 0.2}})");
  CHECK(cli({"simulate", "--graph", graph, "--steps", "50", "--mu", bad}).code == 2);
}

TEST_CASE("paths subcommand", "[cli]") {
  auto r = cli({"paths", "--pf", "1,1,1,3,4,4,7,7,7", "--kind", "dyck"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "steps: UUUDDUDUUDDDUUUDDD"));
  CHECK(contains(r.out, "breakpoints: {6,9}"));
  r = cli({"paths", "--pf", "1,1,1,3,4,4,7,7,7", "--kind", "lukasiewicz"});
  CHECK(contains(r.out, "steps: 2,-1,0,1,-1,-1,2,-1,-1"));
  r = cli({"paths", "--pq", "0,0,2,2,3;0,0,1,2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "L_a: EENNEENEN"));
  CHECK(contains(r.out, "L_b: NNENENEEE"));
  r = cli({"paths", "--pqpf", "3,4,1,1,3;1,3,2,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "prime: true"));
  CHECK(cli({"paths", "--pf", "2,2"}).code == 2);

  TempDir dir;
  const auto svg = (dir.path / "p.svg").string();
  CHECK(cli({"paths", "--pf", "1,1,2", "--svg", svg}).code == 0);
  CHECK(fs::exists(svg));
}

TEST_CASE("stored witness fixtures", "[cli]") {
  const std::string root = PRIMEPARK_FIXTURES;
  const Json gap = read_json_file(root + "/quantifier_gap.json");
  const auto g = graph_from_json(gap["graph"]);
  const Configuration c(values_from_json(g, gap, "configuration"));
  CHECK(is_strongly_recurrent(g, c, Quantifier::Exists));
  CHECK_FALSE(is_strongly_recurrent(g, c, Quantifier::ForAll));

  const Json dec = read_json_file(root + "/decomposition_witness.json");
  const auto h = graph_from_json(dec["graph"]);
  const ParkingCandidate p(values_from_json(h, dec, "parking"));
  const auto decs = prime_decompositions(h, p);
  std::vector<std::string> names;
  for (const auto& d : decs) names.push_back(d.to_string(h));
  CHECK(names == dec["decompositions"].get<std::vector<std::string>>());
  std::set<std::vector<std::size_t>> shapes;
  for (const auto& d : decs) shapes.insert(block_sizes(d));
  CHECK(shapes.size() >= 2);
}
