#pragma once

#include <compare>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "primepark/graph.hpp"

namespace primepark {

/// Integer grain count on each non-sink vertex, indexed by VertexId.
/// Negative values are allowed.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Grains> values) : values_(std::move(values)) {}

  static Configuration zeros(std::size_t size) { return Configuration(std::vector<Grains>(size, 0)); }

  std::size_t size() const { return values_.size(); }
  Grains operator[](VertexId v) const { return values_.at(v); }
  Grains& operator[](VertexId v) { return values_.at(v); }
  std::span<const Grains> values() const { return values_; }
  Grains total() const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Grains> values_;
};

/// deg(v) for every non-sink vertex.
Configuration degree_vector(const RootedMultigraph& graph);
/// deg(v) - 1: the maximal stable configuration.
Configuration maximal_stable(const RootedMultigraph& graph);

/// "1,0,2" in declaration order.
std::string format_values(std::span<const Grains> values);
/// "(s, v1, v2)".
std::string format_sequence(const RootedMultigraph& graph, std::span<const VertexId> sequence);

/// Throws DomainError when c is not defined on exactly the non-sink vertices.
void check_domain(const RootedMultigraph& graph, std::span<const Grains> values);

bool is_stable(const RootedMultigraph& graph, const Configuration& c);

/// One toppling at an unstable vertex; throws DomainError otherwise.
Configuration topple(const RootedMultigraph& graph, const Configuration& c, VertexId v);

struct StabilisationTrace {
  Configuration final;
  std::vector<std::int64_t> odometer;  // topplings per non-sink vertex
  std::vector<VertexId> log;           // empty unless requested
};

struct StabilizeOptions {
  std::uint64_t max_topplings = 10'000'000;
  bool record_log = true;
};

/// Topples unstable vertices from a FIFO worklist seeded in declaration
/// order until the configuration is stable. Throws NonTermination when
/// the toppling budget runs out.
StabilisationTrace stabilize(const RootedMultigraph& graph, const Configuration& c, StabilizeOptions options = {});

/// Same end state, but each step topples a uniformly random unstable vertex.
StabilisationTrace stabilize_random_order(const RootedMultigraph& graph, const Configuration& c,
                                          std::mt19937_64& rng, StabilizeOptions options = {});

struct BurningResult {
  bool recurrent = false;
  /// Starts with the sink; empty when not recurrent.
  std::vector<VertexId> burning_sequence;
};

/// Dhar's burning test: topples the sink into c, stabilises and checks that
/// every vertex toppled exactly once and c came back. Requires c stable and
/// non-negative.
BurningResult is_recurrent_burning(const RootedMultigraph& graph, const Configuration& c);

/// Peels vertices with c(v) >= deg^F(v) from F = V~ in declaration order;
/// the fixed point is the unique maximal forbidden subconfiguration.
VertexSet max_forbidden_set(const RootedMultigraph& graph, const Configuration& c);

/// Stable and no forbidden subconfiguration. Accepts any integer input.
bool is_recurrent(const RootedMultigraph& graph, const Configuration& c);

/// {v adjacent to the sink : c(v) >= deg(v) - mult(v, sink)}.
VertexSet v_m_set(const RootedMultigraph& graph, const Configuration& c);

/// c minus mult(w, sink) grains at every w != v. Requires v in V_M(c).
Configuration remove_off_grains(const RootedMultigraph& graph, const Configuration& c, VertexId v);

enum class Quantifier { ForAll, Exists };

/// False for non-recurrent input.
bool is_strongly_recurrent(const RootedMultigraph& graph, const Configuration& c,
                           Quantifier quantifier = Quantifier::ForAll);

/// Recurrent, and removing one grain anywhere breaks recurrence.
bool is_minimal_recurrent(const RootedMultigraph& graph, const Configuration& c);

}  // namespace primepark
