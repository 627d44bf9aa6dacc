// Shared test graphs and test-only oracles. The oracles deliberately avoid
// the library's fast paths: spanning trees are counted by edge-subset
// enumeration, recurrence by reachability in the grain-addition chain and
// parking by the literal subset condition over VertexSet.
#pragma once

#include <bit>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "primepark/families.hpp"
#include "primepark/parking.hpp"
#include "primepark/sandpile.hpp"

namespace testsupport {

using namespace primepark;

inline RootedMultigraph k2() { return make_family(FamilySpec::complete(2)); }
inline RootedMultigraph w3() { return make_family(FamilySpec::wheel(3)); }

/// Two triangles glued at the sink.
inline RootedMultigraph bowtie() {
  return build_graph({"0", "a", "b", "c", "d"}, "0",
                     {{"0", "a", 1}, {"0", "b", 1}, {"a", "b", 1}, {"0", "c", 1}, {"0", "d", 1}, {"c", "d", 1}});
}

struct NamedGraph {
  std::string label;
  RootedMultigraph graph;
};

inline std::vector<NamedGraph> random_graphs(std::size_t count, std::uint64_t seed, std::size_t max_vertices,
                                             Multiplicity max_mult) {
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t vertices = 3 + i % (max_vertices - 2);
    out.push_back({"random#" + std::to_string(i), random_connected_multigraph(rng, vertices, max_mult)});
  }
  return out;
}

/// Family instances with at most `max_non_sink` non-sink vertices.
inline std::vector<NamedGraph> family_graphs(std::size_t max_non_sink) {
  std::vector<FamilySpec> specs = {
      FamilySpec::complete(1),     FamilySpec::complete(2),     FamilySpec::complete(3),
      FamilySpec::complete(4),     FamilySpec::complete(5),     FamilySpec::complete(6),
      FamilySpec::wheel(3),        FamilySpec::wheel(4),        FamilySpec::wheel(5),
      FamilySpec::wheel(6),        FamilySpec::tripartite(1, 1), FamilySpec::tripartite(2, 1),
      FamilySpec::tripartite(2, 2), FamilySpec::tripartite(2, 3), FamilySpec::tripartite(3, 2),
      FamilySpec::tripartite(3, 3), FamilySpec::bipartite(1, 2), FamilySpec::bipartite(2, 2),
      FamilySpec::bipartite(3, 2), FamilySpec::bipartite(3, 3), FamilySpec::split(1, 1),
      FamilySpec::split(2, 1),     FamilySpec::split(2, 2),     FamilySpec::split(3, 2),
  };
  std::vector<NamedGraph> out;
  for (const auto& s : specs) {
    RootedMultigraph g = make_family(s);
    if (g.non_sink_count() <= max_non_sink) out.push_back({s.describe(), std::move(g)});
  }
  out.push_back({"bowtie", bowtie()});
  return out;
}

/// Every stable non-negative configuration, first vertex most significant.
inline void for_each_stable(const RootedMultigraph& g, const std::function<void(const Configuration&)>& visit) {
  const std::size_t n = g.non_sink_count();
  std::vector<Grains> x(n, 0);
  for (;;) {
    visit(Configuration(x));
    std::size_t k = n;
    while (k > 0 && x[k - 1] == g.degree(k - 1) - 1) x[--k] = 0;
    if (k == 0) return;
    ++x[k - 1];
  }
}

/// Spanning trees by brute force over subsets of vertex pairs, each tree
/// weighted by the product of its multiplicities.
inline BigInt brute_spanning_trees(const RootedMultigraph& g) {
  struct E {
    VertexId a, b;
    Multiplicity m;
  };
  std::vector<E> edges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& nb : g.neighbours(v)) {
      if (nb.vertex > v) edges.push_back({v, nb.vertex, nb.multiplicity});
    }
  }
  const std::size_t need = g.vertex_count() - 1;
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != need) continue;
    std::vector<VertexId> parent(g.vertex_count());
    for (VertexId v = 0; v < parent.size(); ++v) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    bool acyclic = true;
    BigInt weight = 1;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const VertexId ra = find(edges[i].a);
      const VertexId rb = find(edges[i].b);
      if (ra == rb) acyclic = false;
      parent[ra] = rb;
      weight *= edges[i].m;
    }
    if (acyclic) total += weight;
  }
  return total;
}

/// Rec as the set of stable states reachable from deg - 1 under
/// c -> Stab(c + 1_v).
inline std::set<Configuration> recurrent_by_reachability(const RootedMultigraph& g) {
  std::set<Configuration> seen{maximal_stable(g)};
  std::vector<Configuration> frontier{maximal_stable(g)};
  while (!frontier.empty()) {
    Configuration c = frontier.back();
    frontier.pop_back();
    for (VertexId v = 0; v < c.size(); ++v) {
      Configuration d = c;
      ++d[v];
      Configuration s = stabilize(g, d, {.record_log = false}).final;
      if (seen.insert(s).second) frontier.push_back(s);
    }
  }
  return seen;
}

/// The subset condition, literally, over VertexSet.
inline bool parking_by_subsets(const RootedMultigraph& g, std::span<const Grains> p) {
  const std::size_t n = g.non_sink_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = VertexSet::from_mask(g.vertex_count(), mask);
    const VertexSet complement = g.all_vertices() - s;
    bool found = false;
    for (VertexId v : s.members()) found = found || p[v] <= g.deg_within(v, complement);
    if (!found) return false;
  }
  return true;
}

inline BigInt pow_big(long long b, long long e) {
  BigInt out = 1;
  for (long long i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace testsupport
