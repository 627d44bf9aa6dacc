#include "primepark/orientation.hpp"

#include <algorithm>
#include <set>

namespace primepark {

bool RootedAcyclicOrientation::compatible_with(const Configuration& c) const {
  for (VertexId v = 0; v < c.size(); ++v) {
    if (c[v] < in_degree.at(v)) return false;
  }
  return true;
}

namespace {

struct Pair {
  VertexId a;
  VertexId b;
  Multiplicity multiplicity;
};

// Calls visit(orientation) for every rooted acyclic orientation.
template <typename Visit>
void for_each_orientation(const RootedMultigraph& graph, std::size_t cap, Visit&& visit) {
  if (graph.total_multiplicity() > static_cast<Multiplicity>(cap)) {
    throw LimitError("orientation search limited to total edge multiplicity " + std::to_string(cap) +
                     ", graph has " + std::to_string(graph.total_multiplicity()));
  }
  std::vector<Pair> pairs;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& nb : graph.neighbours(v)) {
      if (nb.vertex > v) pairs.push_back({v, nb.vertex, nb.multiplicity});
    }
  }
  const std::size_t count = graph.vertex_count();
  const std::size_t k = pairs.size();
  if (k > 40) throw LimitError("orientation search over more than 40 vertex pairs");
  RootedAcyclicOrientation o;
  std::vector<std::vector<VertexId>> successors(count);
  std::vector<Multiplicity> pending(count);
  std::vector<VertexId> ready;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    o.edges.clear();
    o.in_degree.assign(count, 0);
    o.out_degree.assign(count, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const bool forward = (mask >> i) & 1U;
      const VertexId tail = forward ? pairs[i].a : pairs[i].b;
      const VertexId head = forward ? pairs[i].b : pairs[i].a;
      o.edges.push_back({tail, head, pairs[i].multiplicity});
      o.out_degree[tail] += pairs[i].multiplicity;
      o.in_degree[head] += pairs[i].multiplicity;
    }
    if (o.out_degree[graph.sink()] != 0) continue;
    bool rooted = true;
    for (VertexId v = 0; v < graph.non_sink_count(); ++v) {
      if (o.out_degree[v] == 0) {
        rooted = false;
        break;
      }
    }
    if (!rooted) continue;

    // Kahn: repeatedly strip vertices with no remaining incoming edges.
    for (auto& s : successors) s.clear();
    for (const auto& e : o.edges) successors[e.tail].push_back(e.head);
    ready.clear();
    for (VertexId v = 0; v < count; ++v) {
      pending[v] = 0;
    }
    for (const auto& e : o.edges) ++pending[e.head];
    for (VertexId v = 0; v < count; ++v) {
      if (pending[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
      VertexId v = ready.back();
      ready.pop_back();
      ++removed;
      for (VertexId w : successors[v]) {
        if (--pending[w] == 0) ready.push_back(w);
      }
    }
    if (removed == count) visit(o);
  }
}

void check_input(const RootedMultigraph& graph, const Configuration& c) {
  check_domain(graph, c.values());
  for (VertexId v = 0; v < c.size(); ++v) {
    if (c[v] < 0 || c[v] >= graph.degree(v)) {
      throw DomainError("orientation test needs a stable non-negative configuration");
    }
  }
}

}  // namespace

std::vector<RootedAcyclicOrientation> rooted_acyclic_orientations(const RootedMultigraph& graph,
                                                                  std::size_t orientation_cap) {
  std::vector<RootedAcyclicOrientation> out;
  for_each_orientation(graph, orientation_cap, [&](const RootedAcyclicOrientation& o) { out.push_back(o); });
  return out;
}

std::optional<RootedAcyclicOrientation> compatible_orientation(const RootedMultigraph& graph,
                                                               const Configuration& c,
                                                               std::size_t orientation_cap) {
  check_input(graph, c);
  std::optional<RootedAcyclicOrientation> found;
  for_each_orientation(graph, orientation_cap, [&](const RootedAcyclicOrientation& o) {
    if (!found && o.compatible_with(c)) found = o;
  });
  return found;
}

bool is_recurrent_orientation(const RootedMultigraph& graph, const Configuration& c, std::size_t orientation_cap) {
  return compatible_orientation(graph, c, orientation_cap).has_value();
}

OrientationOracle::OrientationOracle(const RootedMultigraph& graph, std::size_t orientation_cap) {
  std::set<std::vector<Multiplicity>> distinct;
  const std::size_t n = graph.non_sink_count();
  for_each_orientation(graph, orientation_cap, [&](const RootedAcyclicOrientation& o) {
    ++orientation_count_;
    distinct.emplace(o.in_degree.begin(), o.in_degree.begin() + static_cast<std::ptrdiff_t>(n));
  });
  in_degrees_.assign(distinct.begin(), distinct.end());
}

bool OrientationOracle::is_recurrent(const Configuration& c) const {
  if (!in_degrees_.empty() && c.size() != in_degrees_.front().size()) {
    throw DomainError("configuration size does not match the oracle's graph");
  }
  return std::any_of(in_degrees_.begin(), in_degrees_.end(), [&](const std::vector<Multiplicity>& in) {
    for (VertexId v = 0; v < in.size(); ++v) {
      if (c[v] < in[v]) return false;
    }
    return true;
  });
}

}  // namespace primepark
