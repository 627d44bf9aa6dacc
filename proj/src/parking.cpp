#include "primepark/parking.hpp"

#include <algorithm>

namespace primepark {

ParkingCandidate::ParkingCandidate(std::vector<Grains> values) : values_(std::move(values)) {
  for (Grains x : values_) {
    if (x < 1) throw DomainError("parking values must be positive, got " + std::to_string(x));
  }
}

namespace {

constexpr std::size_t kMaskBits = 62;

void check_values(const RootedMultigraph& graph, const ParkingCandidate& p) { check_domain(graph, p.values()); }

std::vector<Multiplicity> dense_matrix(const RootedMultigraph& graph) {
  const std::size_t n = graph.non_sink_count();
  std::vector<Multiplicity> m(n * n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& nb : graph.neighbours(v)) {
      if (nb.vertex < n) m[v * n + nb.vertex] = nb.multiplicity;
    }
  }
  return m;
}

// The subset condition on G[A + sink] with values q on A, for every
// non-empty S inside A. deg^{(A + s) minus S}(v) = deg^A(v) + mult(v,s) - deg^S(v).
bool subset_condition(const RootedMultigraph& graph, const std::vector<Multiplicity>& m,
                      std::span<const Grains> q, std::uint64_t a_mask) {
  const std::size_t n = graph.non_sink_count();
  std::vector<Multiplicity> base(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!((a_mask >> v) & 1U)) continue;
    base[v] = graph.sink_mult(v);
    for (VertexId w = 0; w < n; ++w) {
      if ((a_mask >> w) & 1U) base[v] += m[v * n + w];
    }
  }
  for (std::uint64_t s = a_mask; s != 0; s = (s - 1) & a_mask) {
    bool witness = false;
    for (VertexId v = 0; v < n && !witness; ++v) {
      if (!((s >> v) & 1U)) continue;
      Multiplicity inside = 0;
      for (VertexId w = 0; w < n; ++w) {
        if ((s >> w) & 1U) inside += m[v * n + w];
      }
      witness = q[v] <= base[v] - inside;
    }
    if (!witness) return false;
  }
  return true;
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_parking(const RootedMultigraph& graph, const ParkingCandidate& p) {
  if (!is_g_parking_fast(graph, p)) throw DomainError("input is not a G-parking function");
}

void require_partition_cap(const RootedMultigraph& graph, const SearchLimits& limits) {
  const std::size_t n = graph.non_sink_count();
  if (n > limits.partition_cap || n > kMaskBits) {
    throw LimitError("partition search limited to " + std::to_string(limits.partition_cap) +
                     " non-sink vertices, graph has " + std::to_string(n));
  }
}

VertexSet set_from_mask(const RootedMultigraph& graph, std::uint64_t mask) {
  return VertexSet::from_mask(graph.vertex_count(), mask);
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t mask = 0;
  for (VertexId v : s.members()) mask |= std::uint64_t{1} << v;
  return mask;
}

// p(v) - deg^{used}(v) on the vertices of block, in increasing id order;
// nullopt if any value drops below 1.
std::optional<std::vector<Grains>> shifted_values(const RootedMultigraph& graph, const std::vector<Multiplicity>& m,
                                                  const ParkingCandidate& p, std::uint64_t used,
                                                  std::uint64_t block) {
  const std::size_t n = graph.non_sink_count();
  std::vector<Grains> out;
  for (VertexId v = 0; v < n; ++v) {
    if (!((block >> v) & 1U)) continue;
    Grains x = p[v];
    for (VertexId w = 0; w < n; ++w) {
      if ((used >> w) & 1U) x -= m[v * n + w];
    }
    if (x < 1) return std::nullopt;
    out.push_back(x);
  }
  return out;
}

}  // namespace

bool is_g_parking_naive(const RootedMultigraph& graph, const ParkingCandidate& p, std::size_t subset_cap) {
  check_values(graph, p);
  const std::size_t n = graph.non_sink_count();
  if (n > subset_cap || n > kMaskBits) {
    throw LimitError("subset test limited to " + std::to_string(subset_cap) + " non-sink vertices, graph has " +
                     std::to_string(n));
  }
  return subset_condition(graph, dense_matrix(graph), p.values(), full_mask(n));
}

bool is_g_parking_fast(const RootedMultigraph& graph, const ParkingCandidate& p) {
  check_values(graph, p);
  std::vector<Grains> c(p.size());
  for (VertexId v = 0; v < p.size(); ++v) {
    if (p[v] > graph.degree(v)) return false;
    c[v] = graph.degree(v) - p[v];
  }
  return is_recurrent_burning(graph, Configuration(std::move(c))).recurrent;
}

ParkingCandidate pf_from_config(const RootedMultigraph& graph, const Configuration& c) {
  if (!is_recurrent(graph, c)) throw DomainError("configuration is not recurrent");
  std::vector<Grains> out(c.size());
  for (VertexId v = 0; v < c.size(); ++v) out[v] = graph.degree(v) - c[v];
  return ParkingCandidate(std::move(out));
}

Configuration config_from_pf(const RootedMultigraph& graph, const ParkingCandidate& p) {
  require_parking(graph, p);
  std::vector<Grains> out(p.size());
  for (VertexId v = 0; v < p.size(); ++v) out[v] = graph.degree(v) - p[v];
  return Configuration(std::move(out));
}

VertexSet parking_violation(const RootedMultigraph& graph, const ParkingCandidate& p) {
  check_values(graph, p);
  std::vector<Grains> c(p.size());
  for (VertexId v = 0; v < p.size(); ++v) c[v] = graph.degree(v) - p[v];
  return max_forbidden_set(graph, Configuration(std::move(c)));
}

void OrderedPartition::validate(const RootedMultigraph& graph) const {
  VertexSet seen(graph.vertex_count());
  for (const auto& block : blocks) {
    if (block.universe() != graph.vertex_count()) throw DomainError("partition block from another graph");
    if (block.empty()) throw DomainError("partition blocks must be non-empty");
    if (block.contains(graph.sink())) throw DomainError("partition blocks must avoid the sink");
    if (!(seen & block).empty()) throw DomainError("partition blocks must be disjoint");
    seen |= block;
  }
  if (seen != graph.non_sink_vertices()) throw DomainError("partition blocks must cover every non-sink vertex");
}

std::string OrderedPartition::to_string(const RootedMultigraph& graph) const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += format_vertex_set(graph, blocks[i]);
  }
  return out + ")";
}

PartitionRestriction restrict_partition(const RootedMultigraph& graph, const ParkingCandidate& p,
                                        const OrderedPartition& partition) {
  check_values(graph, p);
  partition.validate(graph);
  if (partition.blocks.size() != 2) throw DomainError("expected a 2-block partition (A,B)");
  const VertexSet& a = partition.blocks[0];
  PartitionRestriction out;
  for (VertexId v = 0; v < p.size(); ++v) {
    if (a.contains(v)) {
      out.on_a.push_back(p[v]);
    } else {
      out.on_b.push_back(p[v] - graph.deg_within(v, a));
    }
  }
  return out;
}

namespace {

// Decomposability along the bipartition (a_mask, rest) of a parking p.
// A disconnected G^A already fails the subset condition (take S to be a
// component missing the sink), and a disconnected G^B forces some
// p^B(v) <= 0, so neither case needs to build the induced graphs.
bool decomposes(const RootedMultigraph& graph, const std::vector<Multiplicity>& m, const ParkingCandidate& p,
                std::uint64_t a_mask) {
  const std::size_t n = graph.non_sink_count();
  const std::uint64_t b_mask = full_mask(n) & ~a_mask;
  if (!shifted_values(graph, m, p, a_mask, b_mask)) return false;
  std::vector<Grains> q(p.values().begin(), p.values().end());
  return subset_condition(graph, m, q, a_mask);
}

}  // namespace

bool is_decomposable(const RootedMultigraph& graph, const ParkingCandidate& p, const OrderedPartition& partition,
                     const SearchLimits& limits) {
  check_values(graph, p);
  partition.validate(graph);
  if (partition.blocks.size() != 2) throw DomainError("expected a 2-block partition (A,B)");
  if (graph.non_sink_count() > kMaskBits) throw LimitError("graph too large for the decomposability test");
  if (graph.non_sink_count() > limits.subset_cap) {
    throw LimitError("subset test limited to " + std::to_string(limits.subset_cap) + " non-sink vertices");
  }
  require_parking(graph, p);
  return decomposes(graph, dense_matrix(graph), p, mask_of(partition.blocks[0]));
}

std::optional<OrderedPartition> find_decomposing_partition(const RootedMultigraph& graph, const ParkingCandidate& p,
                                                           const SearchLimits& limits) {
  check_values(graph, p);
  require_partition_cap(graph, limits);
  require_parking(graph, p);
  const std::size_t n = graph.non_sink_count();
  const auto m = dense_matrix(graph);
  const std::uint64_t full = full_mask(n);
  for (std::uint64_t a = 1; a < full; ++a) {
    if (decomposes(graph, m, p, a)) {
      return OrderedPartition{{set_from_mask(graph, a), set_from_mask(graph, full & ~a)}};
    }
  }
  return std::nullopt;
}

bool is_prime_bruteforce(const RootedMultigraph& graph, const ParkingCandidate& p, const SearchLimits& limits) {
  return !find_decomposing_partition(graph, p, limits).has_value();
}

VertexSet parking_v_m_set(const RootedMultigraph& graph, const ParkingCandidate& p) {
  check_values(graph, p);
  VertexSet out(graph.vertex_count());
  for (VertexId v = 0; v < p.size(); ++v) {
    if (p[v] <= graph.sink_mult(v)) out.insert(v);
  }
  return out;
}

ParkingCandidate add_off_grains(const RootedMultigraph& graph, const ParkingCandidate& p, VertexId v) {
  check_values(graph, p);
  std::vector<Grains> out(p.values().begin(), p.values().end());
  for (VertexId w = 0; w < out.size(); ++w) {
    if (w != v) out[w] += graph.sink_mult(w);
  }
  return ParkingCandidate(std::move(out));
}

std::optional<VertexId> prime_failure(const RootedMultigraph& graph, const ParkingCandidate& p) {
  require_parking(graph, p);
  for (VertexId v : parking_v_m_set(graph, p).members()) {
    if (!is_g_parking_fast(graph, add_off_grains(graph, p, v))) return v;
  }
  return std::nullopt;
}

bool is_prime_fast(const RootedMultigraph& graph, const ParkingCandidate& p) {
  return !prime_failure(graph, p).has_value();
}

namespace {

// Depth-first over blocks; candidate blocks are tried in lexicographic
// order of their member lists, so partitions come out sorted.
class DecompositionSearch {
 public:
  DecompositionSearch(const RootedMultigraph& graph, const ParkingCandidate& p)
      : graph_(graph), p_(p), m_(dense_matrix(graph)) {}

  template <typename Emit>
  bool run(Emit&& emit) {
    std::vector<std::uint64_t> blocks;
    return descend(0, blocks, emit);
  }

 private:
  template <typename Emit>
  bool descend(std::uint64_t used, std::vector<std::uint64_t>& blocks, Emit& emit) {
    const std::uint64_t full = full_mask(graph_.non_sink_count());
    if (used == full) {
      OrderedPartition out;
      for (std::uint64_t b : blocks) out.blocks.push_back(set_from_mask(graph_, b));
      return emit(std::move(out));
    }
    for (std::uint64_t block : candidate_blocks(full & ~used)) {
      if (!is_prime_block(used, block)) continue;
      blocks.push_back(block);
      const bool stop = descend(used | block, blocks, emit);
      blocks.pop_back();
      if (stop) return true;
    }
    return false;
  }

  std::vector<std::uint64_t> candidate_blocks(std::uint64_t remaining) const {
    std::vector<std::pair<std::vector<VertexId>, std::uint64_t>> keyed;
    for (std::uint64_t s = remaining; s != 0; s = (s - 1) & remaining) {
      keyed.emplace_back(set_from_mask(graph_, s).members(), s);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::uint64_t> out;
    for (auto& k : keyed) out.push_back(k.second);
    return out;
  }

  bool is_prime_block(std::uint64_t used, std::uint64_t block) const {
    auto values = shifted_values(graph_, m_, p_, used, block);
    if (!values) return false;
    std::optional<RootedMultigraph> sub;
    try {
      sub.emplace(induced_with_sink(graph_, set_from_mask(graph_, block)));
    } catch (const GraphError&) {
      return false;
    }
    ParkingCandidate q(std::move(*values));
    return is_g_parking_fast(*sub, q) && is_prime_fast(*sub, q);
  }

  const RootedMultigraph& graph_;
  const ParkingCandidate& p_;
  std::vector<Multiplicity> m_;
};

}  // namespace

std::vector<OrderedPartition> prime_decompositions(const RootedMultigraph& graph, const ParkingCandidate& p,
                                                   const SearchLimits& limits) {
  check_values(graph, p);
  require_partition_cap(graph, limits);
  require_parking(graph, p);
  std::vector<OrderedPartition> out;
  DecompositionSearch(graph, p).run([&](OrderedPartition part) {
    out.push_back(std::move(part));
    return false;
  });
  return out;
}

OrderedPartition first_prime_decomposition(const RootedMultigraph& graph, const ParkingCandidate& p,
                                           const SearchLimits& limits) {
  check_values(graph, p);
  require_partition_cap(graph, limits);
  require_parking(graph, p);
  OrderedPartition found;
  DecompositionSearch(graph, p).run([&](OrderedPartition part) {
    found = std::move(part);
    return true;
  });
  return found;
}

DeletedVertex delete_one_vertex(const RootedMultigraph& graph, const ParkingCandidate& p, VertexId v) {
  check_values(graph, p);
  RootedMultigraph smaller = delete_vertex(graph, v);
  std::vector<Grains> values;
  for (VertexId w = 0; w < p.size(); ++w) {
    if (w != v) values.push_back(p[w]);
  }
  return {std::move(smaller), std::move(values)};
}

bool deletion_lemma_applies(const RootedMultigraph& graph, VertexId v) {
  if (v >= graph.non_sink_count()) throw DomainError("the sink cannot be deleted");
  if (graph.sink_mult(v) == 0) return false;
  for (VertexId w = 0; w < graph.non_sink_count(); ++w) {
    if (w != v && graph.sink_mult(w) != graph.mult(w, v)) return false;
  }
  return true;
}

}  // namespace primepark
