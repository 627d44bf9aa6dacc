#include "primepark/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "primepark/io.hpp"
#include "primepark/orientation.hpp"
#include "primepark/witness.hpp"

namespace primepark {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

/// Usage problems detected after CLI11 has parsed the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  SearchLimits limits;
  std::size_t jobs = 1;
  std::uint64_t space_cap = 100'000'000;
};

std::string paren(std::span<const Grains> values) { return "(" + format_values(values) + ")"; }

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string graph;
  std::string input;
  std::string property;
  std::string quantifier = "forall";
  std::string oracle;
};

int check_recurrent(const RootedMultigraph& g, const Configuration& c, const std::string& oracle,
                    const Globals& globals, std::ostream& out) {
  for (VertexId v = 0; v < c.size(); ++v) {
    if (c[v] >= g.degree(v)) {
      out << "recurrent: false\nreason: not stable, " << g.name(v) << " holds " << c[v] << " >= deg " << g.degree(v)
          << "\n";
      return kFalse;
    }
  }
  const VertexSet forbidden = max_forbidden_set(g, c);
  const bool negative = std::any_of(c.values().begin(), c.values().end(), [](Grains x) { return x < 0; });
  bool verdict = forbidden.empty();
  std::optional<RootedAcyclicOrientation> orientation;
  std::vector<VertexId> burning;
  if (!negative) {
    if (oracle == "burning") {
      auto r = is_recurrent_burning(g, c);
      verdict = r.recurrent;
      burning = r.burning_sequence;
    } else if (oracle == "orientation") {
      orientation = compatible_orientation(g, c, globals.limits.orientation_cap);
      verdict = orientation.has_value();
    } else if (oracle != "forbidden") {
      throw UsageError("oracle '" + oracle + "' does not apply to recurrence");
    }
  }
  out << "recurrent: " << (verdict ? "true" : "false") << "\n";
  if (!burning.empty()) out << "burning sequence: " << format_sequence(g, burning) << "\n";
  if (orientation) {
    out << "orientation:";
    for (const auto& e : orientation->edges) {
      out << ' ' << g.name(e.tail) << "->" << g.name(e.head);
      if (e.multiplicity > 1) out << 'x' << e.multiplicity;
    }
    out << "\n";
  }
  if (!verdict) out << "forbidden set: " << format_vertex_set(g, forbidden) << "\n";
  return verdict ? kTrue : kFalse;
}

int check_strong(const RootedMultigraph& g, const Configuration& c, const std::string& quantifier,
                 std::ostream& out) {
  if (quantifier != "forall" && quantifier != "exists") throw UsageError("quantifier must be forall or exists");
  const Quantifier q = quantifier == "forall" ? Quantifier::ForAll : Quantifier::Exists;
  const bool verdict = is_strongly_recurrent(g, c, q);
  out << "strongly-recurrent (" << quantifier << "): " << (verdict ? "true" : "false") << "\n";
  if (!is_recurrent(g, c)) {
    out << "reason: not recurrent";
    if (is_stable(g, c)) out << ", forbidden set " << format_vertex_set(g, max_forbidden_set(g, c));
    out << "\n";
    return kFalse;
  }
  out << "V_M: " << format_vertex_set(g, v_m_set(g, c)) << "\n";
  for (VertexId v : v_m_set(g, c).members()) {
    const Configuration reduced = remove_off_grains(g, c, v);
    const bool ok = is_recurrent(g, reduced);
    if ((q == Quantifier::ForAll && !ok) || (q == Quantifier::Exists && ok)) {
      out << (ok ? "witness: " : "failing vertex: ") << g.name(v) << " -> " << paren(reduced.values())
          << (ok ? " recurrent" : " not recurrent") << "\n";
      break;
    }
  }
  return verdict ? kTrue : kFalse;
}

int check_minimal(const RootedMultigraph& g, const Configuration& c, std::ostream& out) {
  const bool verdict = is_minimal_recurrent(g, c);
  out << "minimal-recurrent: " << (verdict ? "true" : "false") << "\n";
  if (!verdict) {
    if (!is_recurrent(g, c)) {
      out << "reason: not recurrent\n";
    } else {
      for (VertexId v = 0; v < c.size(); ++v) {
        Configuration lower = c;
        --lower[v];
        if (is_recurrent(g, lower)) {
          out << "removable grain at: " << g.name(v) << "\n";
          break;
        }
      }
    }
  }
  return verdict ? kTrue : kFalse;
}

int check_parking(const RootedMultigraph& g, const ParkingCandidate& p, const std::string& oracle,
                  const Globals& globals, std::ostream& out) {
  bool verdict;
  if (oracle == "fast" || oracle.empty()) {
    verdict = is_g_parking_fast(g, p);
  } else if (oracle == "bruteforce") {
    verdict = is_g_parking_naive(g, p, globals.limits.subset_cap);
  } else {
    throw UsageError("oracle '" + oracle + "' does not apply to parking");
  }
  out << "parking: " << (verdict ? "true" : "false") << "\n";
  if (!verdict) out << "violating subset: " << format_vertex_set(g, parking_violation(g, p)) << "\n";
  return verdict ? kTrue : kFalse;
}

int check_prime(const RootedMultigraph& g, const ParkingCandidate& p, const std::string& oracle,
                const Globals& globals, std::ostream& out) {
  if (!is_g_parking_fast(g, p)) {
    throw DomainError("input is not a G-parking function (violating subset " +
                      format_vertex_set(g, parking_violation(g, p)) + ")");
  }
  bool verdict;
  std::optional<VertexId> failing;
  if (oracle == "fast" || oracle.empty()) {
    failing = prime_failure(g, p);
    verdict = !failing;
  } else if (oracle == "bruteforce") {
    verdict = is_prime_bruteforce(g, p, globals.limits);
  } else {
    throw UsageError("oracle '" + oracle + "' does not apply to primeness");
  }
  out << "prime: " << (verdict ? "true" : "false") << "\n";
  if (failing) {
    out << "failing vertex: " << g.name(*failing) << " (p^{v+} = " << paren(add_off_grains(g, p, *failing).values())
        << " not parking)\n";
  }
  if (!verdict && g.non_sink_count() <= globals.limits.partition_cap) {
    if (auto part = find_decomposing_partition(g, p, globals.limits)) {
      out << "decomposing partition: " << part->to_string(g) << "\n";
    }
  }
  return verdict ? kTrue : kFalse;
}

int run_check(const CheckArgs& a, const Globals& globals, std::ostream& out) {
  const RootedMultigraph g = load_graph(a.graph);
  const Json doc = read_json_file(a.input);
  const auto values = values_from_json(g, doc);
  if (a.property == "recurrent") {
    return check_recurrent(g, Configuration(values), a.oracle.empty() ? "burning" : a.oracle, globals, out);
  }
  if (a.property == "strongly-recurrent") return check_strong(g, Configuration(values), a.quantifier, out);
  if (a.property == "minimal-recurrent") return check_minimal(g, Configuration(values), out);
  if (a.property == "parking") return check_parking(g, ParkingCandidate(values), a.oracle, globals, out);
  if (a.property == "prime") return check_prime(g, ParkingCandidate(values), a.oracle, globals, out);
  throw UsageError("unknown property '" + a.property + "'");
}

// ------------------------------------------------------------ enumerate

struct FamilyArgs {
  std::string family;
  int n = -1;
  int p = -1;
  int q = -1;
  int m = -1;
};

FamilySpec family_from_args(const FamilyArgs& a) {
  const FamilyKind kind = parse_family_kind(a.family);
  auto need = [&](int value, const char* flag) {
    if (value < 0) throw UsageError(a.family + " needs " + flag);
    return value;
  };
  switch (kind) {
    case FamilyKind::Complete: return FamilySpec::complete(need(a.n, "--n"));
    case FamilyKind::Wheel: return FamilySpec::wheel(need(a.n, "--n"));
    case FamilyKind::Tripartite: return FamilySpec::tripartite(need(a.p, "--p"), need(a.q, "--q"));
    case FamilyKind::Bipartite: return FamilySpec::bipartite(need(a.p, "--p"), need(a.q, "--q"));
    case FamilyKind::Split: return FamilySpec::split(need(a.m, "--m"), need(a.n, "--n"));
  }
  throw UsageError("unknown family");
}

struct EnumerateArgs {
  FamilyArgs family;
  std::string graph;
  std::string cls;
  std::string output = "csv";
  bool expected = false;
};

int run_enumerate(const EnumerateArgs& a, const Globals& globals, std::ostream& out) {
  if (a.family.family.empty() == a.graph.empty()) throw UsageError("give exactly one of --family or --graph");
  const ElementClass cls = parse_class(a.cls);
  std::optional<FamilySpec> spec;
  if (!a.family.family.empty()) spec = family_from_args(a.family);
  const RootedMultigraph g = spec ? make_family(*spec) : load_graph(a.graph);
  const EnumerationOptions options{globals.jobs, globals.space_cap};

  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.family = spec ? spec->family_name() : "graph";
  report.params = spec ? spec->params() : a.graph;
  report.class_label = class_name(cls);
  std::vector<std::vector<Grains>> elements;
  if (a.output == "csv") {
    report.count = count_class(g, cls, options);
  } else {
    elements = enumerate_class(g, cls, options);
    report.count = elements.size();
  }
  if (a.expected) {
    std::optional<ClosedFormClass> closed = spec ? closed_form_for(*spec, cls) : std::nullopt;
    if (closed) {
      report.expected = closed_form_count(*spec, *closed);
      report.source = "closed-form:" + to_string(*closed);
    } else if (cls == ElementClass::Recurrent || cls == ElementClass::Pf) {
      report.expected = spanning_tree_count(g);
      report.source = "spanning-trees";
    } else {
      throw UsageError("no expected count is known for class " + a.cls + " on this graph");
    }
    report.match = *report.expected == report.count;
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (a.output == "csv") {
    write_reports_csv(out, {report});
  } else if (a.output == "json") {
    Json doc = elements_to_json(g, cls, elements);
    doc["report"] = reports_to_json({report}).at(0);
    out << doc.dump(2) << "\n";
  } else if (a.output == "list") {
    for (const auto& e : elements) out << paren(e) << "\n";
    out << "count: " << report.count << "\n";
    if (report.expected) {
      out << "expected: " << *report.expected << " (" << report.source << ") "
          << (report.match ? "match" : "MISMATCH") << "\n";
    }
  } else {
    throw UsageError("output must be csv, json or list");
  }
  return report.match ? kTrue : kFalse;
}

// ------------------------------------------------------------ decompose

int run_decompose(const std::string& graph_path, const std::string& pf_path, bool all, const Globals& globals,
                  std::ostream& out) {
  const RootedMultigraph g = load_graph(graph_path);
  const ParkingCandidate p = load_parking(g, pf_path);
  if (!is_g_parking_fast(g, p)) throw DomainError("input is not a G-parking function");
  if (all) {
    const auto parts = prime_decompositions(g, p, globals.limits);
    for (const auto& part : parts) out << part.to_string(g) << "\n";
    out << "decompositions: " << parts.size() << "\n";
  } else {
    out << first_prime_decomposition(g, p, globals.limits).to_string(g) << "\n";
  }
  return kTrue;
}

// ------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string graph;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::string mu;
  std::string trace;
  std::string start;
};

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  const RootedMultigraph g = load_graph(a.graph);
  const std::vector<double> weights = a.mu.empty() ? uniform_weights(g.non_sink_count()) : load_weights(g, a.mu);
  const Configuration start =
      a.start.empty() ? Configuration::zeros(g.non_sink_count()) : load_configuration(g, a.start);
  const MarkovRun run = markov_run(g, start, weights, a.steps, a.seed, true);

  std::optional<std::uint64_t> entry;
  bool all_recurrent_after = true;
  for (const auto& s : run.trace) {
    const bool rec = is_recurrent(g, s.state);
    if (!entry && rec) entry = s.step;
    if (entry && !rec) all_recurrent_after = false;
  }
  std::size_t recurrent_states = 0;
  for (const auto& [c, count] : run.visits) recurrent_states += is_recurrent(g, c);
  out << "steps: " << a.steps << "\n";
  out << "distinct stable configurations visited: " << run.visits.size() << "\n";
  out << "recurrent among them: " << recurrent_states << "\n";
  if (entry) {
    out << "first entry into Rec at step: " << *entry << "\n";
    out << "all states after entry recurrent: " << (all_recurrent_after ? "true" : "false") << "\n";
  } else {
    out << "first entry into Rec: never\n";
  }
  for (const auto& [c, count] : run.visits) {
    out << "  " << paren(c.values()) << " " << count << (is_recurrent(g, c) ? " recurrent" : "") << "\n";
  }
  if (!a.trace.empty()) {
    std::ostringstream csv;
    write_markov_trace_csv(csv, g, run);
    write_text_file(a.trace, csv.str());
  }
  return kTrue;
}

// ---------------------------------------------------------------- paths

std::string format_points(const std::vector<std::pair<int, int>>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += (i ? "," : "") + std::string("(") + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")";
  }
  return s + "}";
}

std::string format_index_set(const std::set<std::size_t>& xs) {
  std::string s = "{";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

void report_pair(const MonotonePath& la, const MonotonePath& lb, const std::string& svg, std::ostream& out) {
  const bool above = weakly_above(lb, la);
  const auto common = common_points(la, lb);
  const bool endpoints_only = common.size() == 2;
  out << "L_a: " << la.steps << "\n";
  out << "L_b: " << lb.steps << "\n";
  out << "weakly above: " << (above ? "true" : "false") << "\n";
  out << "common points: " << format_points(common) << "\n";
  out << "endpoint-only intersection: " << (endpoints_only ? "true" : "false") << "\n";
  out << "prime: " << (above && endpoints_only ? "true" : "false") << "\n";
  if (!svg.empty()) write_text_file(svg, paths_to_svg({la.points(), lb.points()}));
}

int run_paths(const std::string& pf, const std::string& kind, const std::string& pq, const std::string& pqpf,
              const std::string& svg, std::ostream& out) {
  const int given = !pf.empty() + !pq.empty() + !pqpf.empty();
  if (given != 1) throw UsageError("give exactly one of --pf, --pq or --pqpf");
  if (!pf.empty()) {
    if (kind != "dyck" && kind != "lukasiewicz") throw UsageError("kind must be dyck or lukasiewicz");
    const PreferenceVector p = parse_preferences(pf);
    const StepPath path = to_path(p, kind == "dyck" ? PathKind::Dyck : PathKind::Lukasiewicz);
    out << "steps: " << path.to_string() << "\n";
    out << "touches: " << format_index_set(path.axis_touches()) << "\n";
    out << "breakpoints: " << format_index_set(breakpoints(p)) << "\n";
    out << "prime: " << (is_classical_prime(p) ? "true" : "false") << "\n";
    if (!svg.empty()) write_text_file(svg, paths_to_svg({path.points()}));
    return kTrue;
  }
  if (!pq.empty()) {
    const PqVector v = parse_pq(pq);
    const int p = static_cast<int>(v.on_p.size());
    const int q = static_cast<int>(v.on_q.size());
    report_pair(path_from_a(v.on_p, q), path_from_b(v.on_q, p), svg, out);
    return kTrue;
  }
  const PqVector v = parse_pq(pqpf);
  const int p = static_cast<int>(v.on_p.size());
  const int q = static_cast<int>(v.on_q.size());
  const auto [la, lb] = pq_paths(v, p, q);
  report_pair(la, lb, svg, out);
  return kTrue;
}

// -------------------------------------------------------- verify/witness

int run_verify(const std::string& output, const Globals& globals, std::ostream& out) {
  const auto reports = verify_counts(default_suite(), {globals.jobs, globals.space_cap});
  if (output == "json") {
    out << reports_to_json(reports).dump(2) << "\n";
  } else if (output == "csv") {
    write_reports_csv(out, reports);
  } else {
    throw UsageError("output must be csv or json");
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.match; });
  return ok ? kTrue : kFalse;
}

int run_witness(const std::string& kind, std::uint64_t seed, std::size_t vertices, std::size_t attempts,
                const std::string& output, std::ostream& out) {
  Json doc;
  if (kind == "gap") {
    auto w = search_quantifier_gap(seed, vertices, attempts);
    if (!w) {
      out << "no witness found\n";
      return kFalse;
    }
    doc["kind"] = "quantifier-gap";
    doc["seed"] = seed;
    doc["attempt"] = w->attempt;
    doc["graph"] = graph_to_json(w->graph);
    doc["configuration"] = values_to_json(w->graph, w->config.values())["values"];
    out << "graph: " << w->graph.describe() << "\n";
    out << "configuration: " << paren(w->config.values()) << "\n";
    out << "V_M: " << format_vertex_set(w->graph, v_m_set(w->graph, w->config)) << "\n";
  } else if (kind == "decomposition") {
    auto w = search_decomposition_witness(seed, vertices, attempts);
    if (!w) {
      out << "no witness found\n";
      return kFalse;
    }
    doc["kind"] = "decomposition";
    doc["seed"] = seed;
    doc["attempt"] = w->attempt;
    doc["graph"] = graph_to_json(w->graph);
    doc["parking"] = values_to_json(w->graph, w->pf.values())["values"];
    Json parts = Json::array();
    for (const auto& d : w->decompositions) parts.push_back(d.to_string(w->graph));
    doc["decompositions"] = parts;
    out << "graph: " << w->graph.describe() << "\n";
    out << "parking function: " << paren(w->pf.values()) << "\n";
    for (const auto& d : w->decompositions) out << "  " << d.to_string(w->graph) << "\n";
  } else {
    throw UsageError("kind must be gap or decomposition");
  }
  out << doc.dump(2) << "\n";
  if (!output.empty()) write_text_file(output, doc.dump(2) + "\n");
  return kTrue;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sandpile and G-parking function toolkit", "primepark"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--subset-cap", globals.limits.subset_cap, "max non-sink vertices for the subset parking test");
  app.add_option("--partition-cap", globals.limits.partition_cap, "max non-sink vertices for partition searches");
  app.add_option("--orientation-cap", globals.limits.orientation_cap, "max total edge multiplicity for orientations");
  app.add_option("--jobs", globals.jobs, "enumeration workers")->check(CLI::PositiveNumber);
  app.add_option("--space-cap", globals.space_cap, "max enumeration search space");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "test one configuration or parking function");
  check_cmd->add_option("--graph", check.graph, "graph JSON")->required();
  check_cmd->add_option("--input", check.input, "values JSON")->required();
  check_cmd->add_option("--property", check.property)
      ->required()
      ->check(CLI::IsMember({"recurrent", "strongly-recurrent", "minimal-recurrent", "parking", "prime"}));
  check_cmd->add_option("--quantifier", check.quantifier)->check(CLI::IsMember({"forall", "exists"}));
  check_cmd->add_option("--oracle", check.oracle)
      ->check(CLI::IsMember({"burning", "forbidden", "orientation", "bruteforce", "fast"}));

  EnumerateArgs enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate a class and count it");
  enum_cmd->add_option("--family", enumerate.family.family)
      ->check(CLI::IsMember({"complete", "wheel", "tripartite", "bipartite", "split"}));
  enum_cmd->add_option("--n", enumerate.family.n);
  enum_cmd->add_option("--p", enumerate.family.p);
  enum_cmd->add_option("--q", enumerate.family.q);
  enum_cmd->add_option("--m", enumerate.family.m);
  enum_cmd->add_option("--graph", enumerate.graph, "graph JSON");
  enum_cmd->add_option("--class", enumerate.cls)->required();
  enum_cmd->add_option("--output", enumerate.output)->check(CLI::IsMember({"csv", "json", "list"}));
  enum_cmd->add_flag("--expected", enumerate.expected, "compare with the known count");

  std::string dec_graph;
  std::string dec_pf;
  bool dec_all = false;
  auto* dec_cmd = app.add_subcommand("decompose", "prime decompositions of a parking function");
  dec_cmd->add_option("--graph", dec_graph)->required();
  dec_cmd->add_option("--pf", dec_pf)->required();
  dec_cmd->add_flag("--all", dec_all);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "run the grain-addition Markov chain");
  sim_cmd->add_option("--graph", sim.graph)->required();
  sim_cmd->add_option("--steps", sim.steps)->required();
  sim_cmd->add_option("--seed", sim.seed);
  sim_cmd->add_option("--mu", sim.mu, "weights JSON");
  sim_cmd->add_option("--trace", sim.trace, "trace CSV to write");
  sim_cmd->add_option("--start", sim.start, "start configuration JSON (default all zero)");

  std::string path_pf;
  std::string path_kind = "dyck";
  std::string path_pq;
  std::string path_pqpf;
  std::string path_svg;
  auto* path_cmd = app.add_subcommand("paths", "render lattice paths");
  path_cmd->add_option("--pf", path_pf, "classical parking function, e.g. 1,1,3");
  path_cmd->add_option("--kind", path_kind)->check(CLI::IsMember({"dyck", "lukasiewicz"}));
  path_cmd->add_option("--pq", path_pq, "lattice vectors a;b");
  path_cmd->add_option("--pqpf", path_pqpf, "(p,q) parking values, P part;Q part");
  path_cmd->add_option("--svg", path_svg);

  std::string verify_output = "csv";
  auto* verify_cmd = app.add_subcommand("verify", "check every closed-form count");
  verify_cmd->add_option("--output", verify_output)->check(CLI::IsMember({"csv", "json"}));

  std::string witness_kind;
  std::uint64_t witness_seed = 1;
  std::size_t witness_vertices = 5;
  std::size_t witness_attempts = 500;
  std::string witness_output;
  auto* witness_cmd = app.add_subcommand("witness", "seeded search for counterexample witnesses");
  witness_cmd->add_option("--kind", witness_kind)->required()->check(CLI::IsMember({"gap", "decomposition"}));
  witness_cmd->add_option("--seed", witness_seed);
  witness_cmd->add_option("--vertices", witness_vertices);
  witness_cmd->add_option("--attempts", witness_attempts);
  witness_cmd->add_option("--output", witness_output, "fixture JSON to write");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check_cmd) return run_check(check, globals, out);
    if (*enum_cmd) return run_enumerate(enumerate, globals, out);
    if (*dec_cmd) return run_decompose(dec_graph, dec_pf, dec_all, globals, out);
    if (*sim_cmd) return run_simulate(sim, out);
    if (*path_cmd) return run_paths(path_pf, path_kind, path_pq, path_pqpf, path_svg, out);
    if (*verify_cmd) return run_verify(verify_output, globals, out);
    if (*witness_cmd) {
      return run_witness(witness_kind, witness_seed, witness_vertices, witness_attempts, witness_output, out);
    }
  } catch (const GraphError& e) {
    err << "error: graph: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace primepark
