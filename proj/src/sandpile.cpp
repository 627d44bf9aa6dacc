#include "primepark/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace primepark {

Grains Configuration::total() const {
  return std::accumulate(values_.begin(), values_.end(), Grains{0});
}

Configuration degree_vector(const RootedMultigraph& graph) {
  std::vector<Grains> out(graph.non_sink_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = graph.degree(v);
  return Configuration(std::move(out));
}

Configuration maximal_stable(const RootedMultigraph& graph) {
  std::vector<Grains> out(graph.non_sink_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = graph.degree(v) - 1;
  return Configuration(std::move(out));
}

std::string format_values(std::span<const Grains> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

std::string format_sequence(const RootedMultigraph& graph, std::span<const VertexId> sequence) {
  std::string out = "(";
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) out += ", ";
    out += graph.name(sequence[i]);
  }
  return out + ")";
}

void check_domain(const RootedMultigraph& graph, std::span<const Grains> values) {
  if (values.size() != graph.non_sink_count()) {
    throw DomainError("expected " + std::to_string(graph.non_sink_count()) + " values, got " +
                      std::to_string(values.size()));
  }
}

bool is_stable(const RootedMultigraph& graph, const Configuration& c) {
  check_domain(graph, c.values());
  for (VertexId v = 0; v < c.size(); ++v) {
    if (c[v] >= graph.degree(v)) return false;
  }
  return true;
}

namespace {

void apply_toppling(const RootedMultigraph& graph, std::vector<Grains>& x, VertexId v) {
  x[v] -= graph.degree(v);
  for (const auto& nb : graph.neighbours(v)) {
    if (!graph.is_sink(nb.vertex)) x[nb.vertex] += nb.multiplicity;
  }
}

std::vector<Grains> to_vector(const Configuration& c) { return {c.values().begin(), c.values().end()}; }

}  // namespace

Configuration topple(const RootedMultigraph& graph, const Configuration& c, VertexId v) {
  check_domain(graph, c.values());
  if (v >= graph.non_sink_count()) throw DomainError("the sink does not topple");
  if (c[v] < graph.degree(v)) {
    throw DomainError("vertex '" + graph.name(v) + "' is stable and cannot topple");
  }
  auto x = to_vector(c);
  apply_toppling(graph, x, v);
  return Configuration(std::move(x));
}

StabilisationTrace stabilize(const RootedMultigraph& graph, const Configuration& c, StabilizeOptions options) {
  check_domain(graph, c.values());
  const std::size_t n = graph.non_sink_count();
  auto x = to_vector(c);
  StabilisationTrace trace;
  trace.odometer.assign(n, 0);

  std::deque<VertexId> worklist;
  std::vector<bool> queued(n, false);
  auto enqueue = [&](VertexId v) {
    if (!queued[v] && x[v] >= graph.degree(v)) {
      queued[v] = true;
      worklist.push_back(v);
    }
  };
  for (VertexId v = 0; v < n; ++v) enqueue(v);

  std::uint64_t topplings = 0;
  while (!worklist.empty()) {
    VertexId v = worklist.front();
    worklist.pop_front();
    queued[v] = false;
    if (x[v] < graph.degree(v)) continue;
    if (++topplings > options.max_topplings) {
      throw NonTermination("stabilisation exceeded " + std::to_string(options.max_topplings) + " topplings");
    }
    apply_toppling(graph, x, v);
    ++trace.odometer[v];
    if (options.record_log) trace.log.push_back(v);
    for (const auto& nb : graph.neighbours(v)) {
      if (!graph.is_sink(nb.vertex)) enqueue(nb.vertex);
    }
    enqueue(v);
  }
  trace.final = Configuration(std::move(x));
  return trace;
}

StabilisationTrace stabilize_random_order(const RootedMultigraph& graph, const Configuration& c,
                                          std::mt19937_64& rng, StabilizeOptions options) {
  check_domain(graph, c.values());
  const std::size_t n = graph.non_sink_count();
  auto x = to_vector(c);
  StabilisationTrace trace;
  trace.odometer.assign(n, 0);
  std::vector<VertexId> unstable;
  std::uint64_t topplings = 0;
  for (;;) {
    unstable.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (x[v] >= graph.degree(v)) unstable.push_back(v);
    }
    if (unstable.empty()) break;
    if (++topplings > options.max_topplings) {
      throw NonTermination("stabilisation exceeded " + std::to_string(options.max_topplings) + " topplings");
    }
    std::uniform_int_distribution<std::size_t> pick(0, unstable.size() - 1);
    VertexId v = unstable[pick(rng)];
    apply_toppling(graph, x, v);
    ++trace.odometer[v];
    if (options.record_log) trace.log.push_back(v);
  }
  trace.final = Configuration(std::move(x));
  return trace;
}

BurningResult is_recurrent_burning(const RootedMultigraph& graph, const Configuration& c) {
  check_domain(graph, c.values());
  for (VertexId v = 0; v < c.size(); ++v) {
    if (c[v] < 0) throw DomainError("burning test needs a non-negative configuration");
    if (c[v] >= graph.degree(v)) throw DomainError("burning test needs a stable configuration");
  }
  auto x = to_vector(c);
  for (VertexId v = 0; v < x.size(); ++v) x[v] += graph.sink_mult(v);
  StabilisationTrace trace = stabilize(graph, Configuration(std::move(x)));

  BurningResult result;
  const bool once_each =
      std::all_of(trace.odometer.begin(), trace.odometer.end(), [](std::int64_t k) { return k == 1; });
  result.recurrent = once_each && trace.final == c;
  if (result.recurrent) {
    result.burning_sequence.push_back(graph.sink());
    result.burning_sequence.insert(result.burning_sequence.end(), trace.log.begin(), trace.log.end());
  }
  return result;
}

VertexSet max_forbidden_set(const RootedMultigraph& graph, const Configuration& c) {
  check_domain(graph, c.values());
  const std::size_t n = graph.non_sink_count();
  std::vector<bool> in_f(n, true);
  std::vector<Multiplicity> deg_f(n);
  for (VertexId v = 0; v < n; ++v) deg_f[v] = graph.degree(v) - graph.sink_mult(v);

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!in_f[v] || c[v] < deg_f[v]) continue;
      in_f[v] = false;
      changed = true;
      for (const auto& nb : graph.neighbours(v)) {
        if (!graph.is_sink(nb.vertex)) deg_f[nb.vertex] -= nb.multiplicity;
      }
    }
  }
  VertexSet out(graph.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    if (in_f[v]) out.insert(v);
  }
  return out;
}

bool is_recurrent(const RootedMultigraph& graph, const Configuration& c) {
  return is_stable(graph, c) && max_forbidden_set(graph, c).empty();
}

VertexSet v_m_set(const RootedMultigraph& graph, const Configuration& c) {
  check_domain(graph, c.values());
  VertexSet out(graph.vertex_count());
  for (VertexId v = 0; v < c.size(); ++v) {
    const Multiplicity to_sink = graph.sink_mult(v);
    if (to_sink > 0 && c[v] >= graph.degree(v) - to_sink) out.insert(v);
  }
  return out;
}

Configuration remove_off_grains(const RootedMultigraph& graph, const Configuration& c, VertexId v) {
  if (!v_m_set(graph, c).contains(v)) {
    throw DomainError("vertex is not in V_M(c)");
  }
  auto x = to_vector(c);
  for (VertexId w = 0; w < x.size(); ++w) {
    if (w != v) x[w] -= graph.sink_mult(w);
  }
  return Configuration(std::move(x));
}

bool is_strongly_recurrent(const RootedMultigraph& graph, const Configuration& c, Quantifier quantifier) {
  if (!is_recurrent(graph, c)) return false;
  const auto candidates = v_m_set(graph, c).members();
  for (VertexId v : candidates) {
    const bool ok = is_recurrent(graph, remove_off_grains(graph, c, v));
    if (quantifier == Quantifier::ForAll && !ok) return false;
    if (quantifier == Quantifier::Exists && ok) return true;
  }
  return quantifier == Quantifier::ForAll;
}

bool is_minimal_recurrent(const RootedMultigraph& graph, const Configuration& c) {
  if (!is_recurrent(graph, c)) return false;
  Configuration lowered = c;
  for (VertexId v = 0; v < c.size(); ++v) {
    --lowered[v];
    const bool still = is_recurrent(graph, lowered);
    ++lowered[v];
    if (still) return false;
  }
  return true;
}

}  // namespace primepark
