#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace primepark;
using namespace testsupport;

namespace {

ParkingCandidate pf(std::initializer_list<Grains> xs) { return ParkingCandidate(std::vector<Grains>(xs)); }

OrderedPartition two_blocks(const RootedMultigraph& g, std::initializer_list<VertexId> a,
                            std::initializer_list<VertexId> b) {
  return {{VertexSet(g.vertex_count(), a), VertexSet(g.vertex_count(), b)}};
}

/// Every positive vector with p(v) <= deg(v).
void for_each_bounded(const RootedMultigraph& g, const std::function<void(const ParkingCandidate&)>& visit) {
  for_each_stable(g, [&](const Configuration& c) { visit(ParkingCandidate(std::vector<Grains>(
                                                       c.values().begin(), c.values().end()))); });
}

ParkingCandidate shifted(const Configuration& c) {
  std::vector<Grains> x(c.values().begin(), c.values().end());
  for (auto& v : x) ++v;
  return ParkingCandidate(std::move(x));
}

/// Literal brute-force decomposability over a 2-block partition, building
/// both induced graphs explicitly.
bool decomposable_literal(const RootedMultigraph& g, const ParkingCandidate& p, const VertexSet& a) {
  const VertexSet b = g.non_sink_vertices() - a;
  RootedMultigraph ga = g, gb = g;
  try {
    ga = induced_with_sink(g, a);
    gb = induced_with_sink(g, b);
  } catch (const GraphError&) {
    return false;
  }
  std::vector<Grains> pa, pb;
  for (VertexId v : a.members()) pa.push_back(p[v]);
  for (VertexId v : b.members()) {
    const Grains value = p[v] - g.deg_within(v, a);
    if (value <= 0) return false;
    pb.push_back(value);
  }
  return parking_by_subsets(ga, pa) && parking_by_subsets(gb, pb);
}

std::vector<std::vector<VertexId>> block_key(const OrderedPartition& d) {
  std::vector<std::vector<VertexId>> key;
  for (const auto& b : d.blocks) key.push_back(b.members());
  return key;
}

}  // namespace

TEST_CASE("candidates must be positive", "[parking]") {
  CHECK_THROWS_AS(pf({1, 0}), DomainError);
}

TEST_CASE("naive and fast parking tests", "[parking]") {
  const auto g = k2();
  CHECK(is_g_parking_naive(g, pf({1, 1})));
  CHECK_FALSE(is_g_parking_naive(g, pf({1, 3})));
  CHECK(is_g_parking_naive(make_family(FamilySpec::complete(4)), pf({3, 1, 3, 1})));
  CHECK(is_g_parking_fast(g, pf({1, 1})));
  CHECK_FALSE(is_g_parking_fast(g, pf({2, 2})));
  CHECK_FALSE(is_g_parking_fast(g, pf({1, 3})));

  const auto t54 = make_family(FamilySpec::tripartite(5, 4));
  const auto example = pf({3, 4, 1, 1, 3, 1, 3, 2, 1});
  CHECK(is_g_parking_fast(t54, example));
  CHECK(is_g_parking_naive(t54, example));

  for (const auto& [label, h] : family_graphs(6)) {
    INFO(label);
    CHECK(is_g_parking_fast(h, ParkingCandidate(std::vector<Grains>(h.non_sink_count(), 1))));
  }
  CHECK_THROWS_AS(is_g_parking_naive(make_family(FamilySpec::complete(5)), pf({1, 1, 1, 1, 1}), 4), LimitError);
}

TEST_CASE("parking tests agree with the literal subset condition", "[parking]") {
  auto graphs = family_graphs(5);
  for (auto& r : random_graphs(15, 4, 6, 2)) graphs.push_back(std::move(r));
  for (const auto& [label, g] : graphs) {
    INFO(label);
    for_each_stable(g, [&](const Configuration& c) {
      const auto p = shifted(c);
      const bool expected = parking_by_subsets(g, p.values());
      CHECK(is_g_parking_naive(g, p) == expected);
      CHECK(is_g_parking_fast(g, p) == expected);
      CHECK(parking_violation(g, p).empty() == expected);
    });
  }
}

TEST_CASE("configuration and parking conversions", "[parking]") {
  const auto g = k2();
  CHECK(pf_from_config(g, Configuration({1, 1})) == pf({1, 1}));
  CHECK(pf_from_config(g, Configuration({1, 0})) == pf({1, 2}));
  CHECK_THROWS_AS(pf_from_config(g, Configuration({0, 0})), DomainError);
  CHECK_THROWS_AS(config_from_pf(g, pf({2, 2})), DomainError);
  for (const auto& [label, h] : family_graphs(4)) {
    for (const auto& c : recurrent_by_reachability(h)) CHECK(config_from_pf(h, pf_from_config(h, c)) == c);
  }
}

TEST_CASE("partition restriction and decomposability", "[parking]") {
  const auto k3 = make_family(FamilySpec::complete(3));
  const auto part = two_blocks(k3, {0, 1}, {2});
  const auto r = restrict_partition(k3, pf({1, 1, 2}), part);
  CHECK(r.on_a == std::vector<Grains>{1, 1});
  CHECK(r.on_b == std::vector<Grains>{0});
  CHECK_FALSE(is_decomposable(k3, pf({1, 1, 2}), part));

  const auto g = k2();
  CHECK(restrict_partition(g, pf({1, 1}), two_blocks(g, {0}, {1})).on_b == std::vector<Grains>{0});
  CHECK_FALSE(is_decomposable(g, pf({1, 1}), two_blocks(g, {0}, {1})));
  CHECK_FALSE(is_decomposable(g, pf({1, 1}), two_blocks(g, {1}, {0})));
  CHECK(is_decomposable(g, pf({1, 2}), two_blocks(g, {0}, {1})));

  const auto k4 = make_family(FamilySpec::complete(4));
  CHECK(is_decomposable(k4, pf({3, 1, 3, 1}), two_blocks(k4, {1, 3}, {0, 2})));

  const auto bow = bowtie();
  const auto sep = restrict_partition(bow, pf({1, 2, 2, 1}), two_blocks(bow, {0, 1}, {2, 3}));
  CHECK(sep.on_b == std::vector<Grains>{2, 1});

  CHECK_THROWS_AS(two_blocks(g, {0}, {0}).validate(g), DomainError);
  CHECK_THROWS_AS(is_decomposable(g, pf({2, 2}), two_blocks(g, {0}, {1})), DomainError);
}

TEST_CASE("primeness", "[parking]") {
  const auto g = k2();
  CHECK(is_prime_bruteforce(g, pf({1, 1})));
  CHECK_FALSE(is_prime_bruteforce(g, pf({1, 2})));
  CHECK(is_prime_fast(g, pf({1, 1})));
  CHECK_FALSE(is_prime_fast(g, pf({1, 2})));
  CHECK(prime_failure(g, pf({1, 2})) == VertexId{0});
  CHECK(parking_v_m_set(g, pf({1, 1})) == VertexSet(3, {0, 1}));
  CHECK(add_off_grains(g, pf({1, 1}), 0) == pf({1, 2}));
  CHECK_THROWS_AS(is_prime_fast(g, pf({2, 2})), DomainError);

  const auto bow = bowtie();
  for_each_stable(bow, [&](const Configuration& c) {
    const auto p = shifted(c);
    if (!is_g_parking_fast(bow, p)) return;
    CHECK_FALSE(is_prime_bruteforce(bow, p));
    CHECK_FALSE(is_prime_fast(bow, p));
  });
}

TEST_CASE("primeness oracles agree with literal decomposability", "[parking]") {
  auto graphs = family_graphs(5);
  for (auto& r : random_graphs(15, 17, 6, 2)) graphs.push_back(std::move(r));
  for (const auto& [label, g] : graphs) {
    INFO(label);
    const std::uint64_t full = (std::uint64_t{1} << g.non_sink_count()) - 1;
    const bool cut = sink_is_cut_vertex(g);
    if (!cut) CHECK(is_prime_fast(g, ParkingCandidate(std::vector<Grains>(g.non_sink_count(), 1))));
    for_each_stable(g, [&](const Configuration& c) {
      const auto p = shifted(c);
      if (!is_g_parking_fast(g, p)) return;
      bool prime = true;
      for (std::uint64_t mask = 1; mask < full && prime; ++mask) {
        prime = !decomposable_literal(g, p, VertexSet::from_mask(g.vertex_count(), mask));
      }
      CHECK(is_prime_bruteforce(g, p) == prime);
      CHECK(is_prime_fast(g, p) == prime);
      if (cut) CHECK_FALSE(prime);
      const Configuration sandpile = config_from_pf(g, p);
      CHECK(is_strongly_recurrent(g, sandpile) == prime);
      const auto decs = prime_decompositions(g, p);
      CHECK_FALSE(decs.empty());
      CHECK(std::is_sorted(decs.begin(), decs.end(), [](const auto& x, const auto& y) {
        return block_key(x) < block_key(y);
      }));
      const bool single = std::any_of(decs.begin(), decs.end(), [](const auto& d) { return d.blocks.size() == 1; });
      CHECK(single == prime);
      CHECK(first_prime_decomposition(g, p) == decs.front());
    });
  }
}

TEST_CASE("prime decompositions", "[parking]") {
  const auto g = k2();
  auto decs = prime_decompositions(g, pf({1, 1}));
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].to_string(g) == "({v1,v2})");
  decs = prime_decompositions(g, pf({1, 2}));
  CHECK(std::any_of(decs.begin(), decs.end(), [&](const auto& d) { return d.to_string(g) == "({v1},{v2})"; }));
}

TEST_CASE("vertex deletion", "[parking]") {
  // Complete graphs: deleting a 1-entry of a prime function leaves a parking function.
  for (int n = 2; n <= 5; ++n) {
    const auto g = make_family(FamilySpec::complete(n));
    for (VertexId v = 0; v < g.non_sink_count(); ++v) CHECK(deletion_lemma_applies(g, v));
    for_each_stable(g, [&](const Configuration& c) {
      const auto p = shifted(c);
      if (!is_g_parking_fast(g, p) || !is_prime_fast(g, p)) return;
      for (VertexId v = 0; v < g.non_sink_count(); ++v) {
        if (p[v] != 1) continue;
        const auto d = delete_one_vertex(g, p, v);
        CHECK(is_g_parking_fast(d.graph, ParkingCandidate(d.values)));
      }
    });
  }

  const auto split = make_family(FamilySpec::split(3, 2));
  const VertexId c1 = split.id("c1");
  CHECK(deletion_lemma_applies(split, c1));
  for_each_stable(split, [&](const Configuration& c) {
    const auto p = shifted(c);
    if (!is_g_parking_fast(split, p) || !is_part_increasing(split, p.values()) || !is_prime_fast(split, p)) return;
    const auto d = delete_one_vertex(split, p, c1);
    CHECK(is_g_parking_fast(d.graph, ParkingCandidate(d.values)));
  });

  const auto bip = make_family(FamilySpec::bipartite(3, 2));
  CHECK_FALSE(deletion_lemma_applies(bip, bip.id("p1")));
  CHECK_THROWS_AS(delete_one_vertex(bip, pf({1, 1, 1, 1, 1}), bip.sink()), GraphError);
}
