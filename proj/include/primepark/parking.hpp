#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primepark/sandpile.hpp"

namespace primepark {

/// Positive value on every non-sink vertex, indexed by VertexId.
class ParkingCandidate {
 public:
  ParkingCandidate() = default;
  /// Throws DomainError on a value below 1.
  explicit ParkingCandidate(std::vector<Grains> values);

  std::size_t size() const { return values_.size(); }
  Grains operator[](VertexId v) const { return values_.at(v); }
  std::span<const Grains> values() const { return values_; }

  friend auto operator<=>(const ParkingCandidate&, const ParkingCandidate&) = default;
  friend bool operator==(const ParkingCandidate&, const ParkingCandidate&) = default;

 private:
  std::vector<Grains> values_;
};

/// Subset test: every non-empty S of non-sink vertices holds some v with
/// p(v) <= deg^{V minus S}(v). Throws LimitError above subset_cap vertices.
bool is_g_parking_naive(const RootedMultigraph& graph, const ParkingCandidate& p, std::size_t subset_cap = 20);

/// Burning test on deg - p.
bool is_g_parking_fast(const RootedMultigraph& graph, const ParkingCandidate& p);

/// deg - c. Throws DomainError unless c is recurrent.
ParkingCandidate pf_from_config(const RootedMultigraph& graph, const Configuration& c);
/// deg - p. Throws DomainError unless p is a G-parking function.
Configuration config_from_pf(const RootedMultigraph& graph, const ParkingCandidate& p);

/// Non-parking witness: the subset S violating the subset condition, which
/// is the maximal forbidden set of deg - p. Empty for parking functions.
VertexSet parking_violation(const RootedMultigraph& graph, const ParkingCandidate& p);

struct OrderedPartition {
  std::vector<VertexSet> blocks;

  /// Throws DomainError unless the blocks are non-empty, disjoint and
  /// cover the non-sink vertices.
  void validate(const RootedMultigraph& graph) const;
  /// "({v1},{v2,v3})".
  std::string to_string(const RootedMultigraph& graph) const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

struct PartitionRestriction {
  std::vector<Grains> on_a;  // p restricted to A, in increasing id order
  std::vector<Grains> on_b;  // p(v) - deg^A(v) for v in B, may be <= 0
};

PartitionRestriction restrict_partition(const RootedMultigraph& graph, const ParkingCandidate& p,
                                        const OrderedPartition& partition);

/// Whether p decomposes along (A, B). Partitions whose G^A or G^B is
/// disconnected never decompose. Throws DomainError if p is not parking.
bool is_decomposable(const RootedMultigraph& graph, const ParkingCandidate& p, const OrderedPartition& partition,
                     const SearchLimits& limits = {});

/// First decomposing 2-block partition in mask order, if any.
std::optional<OrderedPartition> find_decomposing_partition(const RootedMultigraph& graph, const ParkingCandidate& p,
                                                           const SearchLimits& limits = {});

/// No 2-block ordered partition decomposes p.
bool is_prime_bruteforce(const RootedMultigraph& graph, const ParkingCandidate& p, const SearchLimits& limits = {});

/// {v : p(v) <= mult(v, sink)}.
VertexSet parking_v_m_set(const RootedMultigraph& graph, const ParkingCandidate& p);

/// p + sum over w != v of mult(w, sink) at w.
ParkingCandidate add_off_grains(const RootedMultigraph& graph, const ParkingCandidate& p, VertexId v);

/// p^{v+} is parking for every v in V_M(p). Throws DomainError if p is not parking.
bool is_prime_fast(const RootedMultigraph& graph, const ParkingCandidate& p);

/// The first v in V_M(p) with p^{v+} not parking, if any.
std::optional<VertexId> prime_failure(const RootedMultigraph& graph, const ParkingCandidate& p);

/// Every ordered partition whose successive restrictions are prime parking
/// functions on the induced graphs, sorted by block order.
std::vector<OrderedPartition> prime_decompositions(const RootedMultigraph& graph, const ParkingCandidate& p,
                                                   const SearchLimits& limits = {});

/// The first prime decomposition found (one always exists for a parking
/// function), built greedily.
OrderedPartition first_prime_decomposition(const RootedMultigraph& graph, const ParkingCandidate& p,
                                           const SearchLimits& limits = {});

struct DeletedVertex {
  RootedMultigraph graph;
  std::vector<Grains> values;
};

/// p restricted to the graph with v removed.
DeletedVertex delete_one_vertex(const RootedMultigraph& graph, const ParkingCandidate& p, VertexId v);

/// Whether deleting v keeps every prime p with v in V_M(p) parking:
/// mult(w, sink) = mult(w, v) for every other non-sink w, and v touches the
/// sink (otherwise v can never lie in V_M(p)).
bool deletion_lemma_applies(const RootedMultigraph& graph, VertexId v);

}  // namespace primepark
