#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "primepark/errors.hpp"
#include "primepark/types.hpp"

namespace primepark {

/// Subset of the vertices of a graph, stored as a bitmap over a fixed
/// universe (normally all vertices, sink included).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  /// Bit i of mask selects vertex i.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }
  void insert(VertexId v);
  void erase(VertexId v);
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  VertexSet complement() const;
  std::vector<VertexId> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_same_universe(const VertexSet& other) const;

  std::vector<bool> bits_;
};

struct EdgeSpec {
  std::string from;
  std::string to;
  Multiplicity multiplicity = 1;
};

/// Finite connected loop-free multigraph with a designated sink.
///
/// Immutable after construction. Vertex names are kept in declaration
/// order, which fixes every output ordering. Internally the non-sink
/// vertices are numbered 0..n-1 in declaration order and the sink is n,
/// so a configuration on the graph is simply a vector of length n.
class RootedMultigraph {
 public:
  struct Neighbour {
    VertexId vertex;
    Multiplicity multiplicity;
  };

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t non_sink_count() const { return names_.size() - 1; }
  VertexId sink() const { return names_.size() - 1; }
  bool is_sink(VertexId v) const { return v == sink(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  /// Throws GraphError(UnknownVertex).
  VertexId id(std::string_view name) const;
  bool has_vertex(std::string_view name) const;

  /// All vertex ids in declaration order (sink wherever it was declared).
  std::span<const VertexId> declaration_order() const { return declaration_order_; }

  std::span<const Neighbour> neighbours(VertexId v) const { return adjacency_.at(v); }
  Multiplicity mult(VertexId v, VertexId w) const;
  Multiplicity degree(VertexId v) const { return degree_.at(v); }
  Multiplicity sink_mult(VertexId v) const { return mult(v, sink()); }
  Multiplicity total_multiplicity() const { return total_multiplicity_; }

  /// Sum of mult(v, w) over w in subset.
  Multiplicity deg_within(VertexId v, const VertexSet& subset) const;

  VertexSet all_vertices() const;
  VertexSet non_sink_vertices() const;

  /// Edges with positive multiplicity, each unordered pair once, listed by
  /// the declaration order of their endpoints.
  std::vector<EdgeSpec> edges() const;

  /// Declared symmetric parts (used by the "increasing" classes of family
  /// graphs). Each part lists non-sink ids in order; empty when undeclared.
  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
  bool has_parts() const { return !parts_.empty(); }
  /// Returns a copy with parts attached; parts must partition the non-sink
  /// vertices.
  RootedMultigraph with_parts(std::vector<std::vector<VertexId>> parts) const;

  std::string describe() const;

  friend RootedMultigraph build_graph(std::vector<std::string> vertices, std::string_view sink,
                                      std::span<const EdgeSpec> edges);

 private:
  RootedMultigraph() = default;

  std::vector<std::string> names_;
  std::vector<VertexId> declaration_order_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<Neighbour>> adjacency_;
  std::vector<Multiplicity> degree_;
  Multiplicity total_multiplicity_ = 0;
  std::vector<std::vector<VertexId>> parts_;
};

/// Validates and assembles a rooted multigraph. Repeated (v, w) entries add
/// up. Throws GraphError naming the violated invariant.
RootedMultigraph build_graph(std::vector<std::string> vertices, std::string_view sink,
                             std::span<const EdgeSpec> edges);

inline RootedMultigraph build_graph(std::vector<std::string> vertices, std::string_view sink,
                                    std::initializer_list<EdgeSpec> edges) {
  return build_graph(std::move(vertices), sink, std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

/// G[A + sink]. Non-sink ids of the result follow the increasing order of
/// A's ids; names are preserved. Parts are restricted to A. Throws
/// GraphError(Disconnected) when the induced graph is not connected.
RootedMultigraph induced_with_sink(const RootedMultigraph& graph, const VertexSet& subset);

/// True iff removing the sink disconnects the remaining vertices.
bool sink_is_cut_vertex(const RootedMultigraph& graph);

/// Determinant of the reduced Laplacian (sink row and column deleted),
/// by fraction-free Bareiss elimination over arbitrary-precision integers.
BigInt spanning_tree_count(const RootedMultigraph& graph);

/// Removes a non-sink vertex and its incident edges.
RootedMultigraph delete_vertex(const RootedMultigraph& graph, VertexId v);

/// Formats a subset as "{v1,v3}", members in declaration order.
std::string format_vertex_set(const RootedMultigraph& graph, const VertexSet& subset);

}  // namespace primepark
