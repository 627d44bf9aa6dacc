#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "primepark/sandpile.hpp"

namespace primepark {

struct MarkovStep {
  std::uint64_t step;
  VertexId dropped;
  Configuration state;
};

struct MarkovRun {
  /// Visit counts per stable configuration; the start counts once.
  std::map<Configuration, std::uint64_t> visits;
  /// Filled only when a trace was requested.
  std::vector<MarkovStep> trace;
};

std::vector<double> uniform_weights(std::size_t n);

/// Drops a grain at v ~ weights and stabilises, `steps` times. Weights must
/// be strictly positive and sum to 1 within 1e-9; they are renormalised.
/// Identical seeds give identical runs on every platform.
MarkovRun markov_run(const RootedMultigraph& graph, const Configuration& start, std::span<const double> weights,
                     std::uint64_t steps, std::uint64_t seed, bool record_trace = false);

/// States visited from the first step whose state satisfies `pred`
/// onwards. Requires a recorded trace.
std::vector<Configuration> states_after_first_entry(const MarkovRun& run,
                                                    const std::function<bool(const Configuration&)>& pred);

}  // namespace primepark
