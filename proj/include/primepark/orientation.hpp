#pragma once

#include <optional>
#include <vector>

#include "primepark/sandpile.hpp"

namespace primepark {

struct OrientedEdge {
  VertexId tail;
  VertexId head;
  Multiplicity multiplicity;
};

/// Acyclic orientation whose only vertex without outgoing edges is the
/// sink. Parallel copies of an edge always share a direction (opposite
/// copies would form a 2-cycle).
struct RootedAcyclicOrientation {
  std::vector<OrientedEdge> edges;
  std::vector<Multiplicity> in_degree;   // indexed by VertexId, sink included
  std::vector<Multiplicity> out_degree;

  bool compatible_with(const Configuration& c) const;
};

/// Exhaustive enumeration; throws LimitError when the total edge
/// multiplicity exceeds orientation_cap.
std::vector<RootedAcyclicOrientation> rooted_acyclic_orientations(const RootedMultigraph& graph,
                                                                  std::size_t orientation_cap = 14);

/// An orientation O with c(v) >= in^O(v) on every non-sink vertex, if any.
std::optional<RootedAcyclicOrientation> compatible_orientation(const RootedMultigraph& graph,
                                                               const Configuration& c,
                                                               std::size_t orientation_cap = 14);

bool is_recurrent_orientation(const RootedMultigraph& graph, const Configuration& c,
                              std::size_t orientation_cap = 14);

/// Enumerates the orientations of one graph once and answers many
/// recurrence queries against the distinct in-degree vectors.
class OrientationOracle {
 public:
  OrientationOracle(const RootedMultigraph& graph, std::size_t orientation_cap = 14);

  bool is_recurrent(const Configuration& c) const;
  std::size_t orientation_count() const { return orientation_count_; }

 private:
  std::vector<std::vector<Multiplicity>> in_degrees_;
  std::size_t orientation_count_ = 0;
};

}  // namespace primepark
