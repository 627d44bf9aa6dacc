#include "primepark/markov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace primepark {

std::vector<double> uniform_weights(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

MarkovRun markov_run(const RootedMultigraph& graph, const Configuration& start, std::span<const double> weights,
                     std::uint64_t steps, std::uint64_t seed, bool record_trace) {
  check_domain(graph, start.values());
  const std::size_t n = graph.non_sink_count();
  if (weights.size() != n) {
    throw DomainError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  }
  double sum = 0;
  for (double w : weights) {
    if (!(w > 0)) throw DomainError("every weight must be strictly positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("weights must sum to 1");

  std::vector<double> cumulative(n);
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += weights[i] / sum;
    cumulative[i] = acc;
  }

  // std::discrete_distribution is implementation-defined; this draw is not.
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> VertexId {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return it == cumulative.end() ? n - 1 : static_cast<VertexId>(it - cumulative.begin());
  };

  MarkovRun run;
  Configuration c = stabilize(graph, start, {.record_log = false}).final;
  ++run.visits[c];
  if (record_trace) run.trace.push_back({0, graph.sink(), c});
  for (std::uint64_t step = 1; step <= steps; ++step) {
    const VertexId v = draw();
    ++c[v];
    c = stabilize(graph, c, {.record_log = false}).final;
    ++run.visits[c];
    if (record_trace) run.trace.push_back({step, v, c});
  }
  return run;
}

std::vector<Configuration> states_after_first_entry(const MarkovRun& run,
                                                    const std::function<bool(const Configuration&)>& pred) {
  std::set<Configuration> seen;
  bool entered = false;
  for (const auto& s : run.trace) {
    if (!entered && pred(s.state)) entered = true;
    if (entered) seen.insert(s.state);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace primepark
