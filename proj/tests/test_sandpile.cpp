#include "catch_amalgamated.hpp"
#include "primepark/markov.hpp"
#include "primepark/orientation.hpp"
#include "support.hpp"

using namespace primepark;
using namespace testsupport;

namespace {

Configuration cfg(std::initializer_list<Grains> xs) { return Configuration(std::vector<Grains>(xs)); }

}  // namespace

TEST_CASE("stability", "[sandpile]") {
  CHECK(is_stable(k2(), cfg({1, 1})));
  CHECK_FALSE(is_stable(k2(), cfg({2, 0})));
  CHECK(is_stable(w3(), cfg({2, 2, 2})));
  CHECK_THROWS_AS(is_stable(k2(), cfg({1})), DomainError);
}

TEST_CASE("toppling", "[sandpile]") {
  CHECK(topple(k2(), cfg({2, 0}), 0) == cfg({0, 1}));
  CHECK(topple(k2(), cfg({2, 2}), 0) == cfg({0, 3}));
  CHECK_THROWS_AS(topple(k2(), cfg({1, 1}), 0), DomainError);
}

TEST_CASE("stabilisation", "[sandpile]") {
  auto t = stabilize(k2(), cfg({2, 2}));
  CHECK(t.final == cfg({1, 1}));
  CHECK(t.odometer == std::vector<std::int64_t>{1, 1});

  t = stabilize(k2(), cfg({1, 0}));
  CHECK(t.final == cfg({1, 0}));
  CHECK(t.log.empty());

  t = stabilize(k2(), cfg({2, 0}));
  CHECK(t.final == cfg({0, 1}));
  CHECK(t.odometer == std::vector<std::int64_t>{1, 0});

  CHECK_THROWS_AS(stabilize(k2(), cfg({50, 50}), {.max_topplings = 3}), NonTermination);
}

TEST_CASE("stabilisation is order independent", "[sandpile]") {
  std::mt19937_64 rng(99);
  for (const auto& [label, g] : random_graphs(10, 8, 6, 3)) {
    INFO(label);
    for (int t = 0; t < 20; ++t) {
      std::vector<Grains> x(g.non_sink_count());
      for (VertexId v = 0; v < x.size(); ++v) x[v] = static_cast<Grains>(rng() % (3 * g.degree(v)));
      const Configuration c(x);
      const auto a = stabilize(g, c);
      const auto b = stabilize_random_order(g, c, rng);
      CHECK(a.final == b.final);
      CHECK(a.odometer == b.odometer);
      CHECK(is_stable(g, a.final));
    }
  }
}

TEST_CASE("burning test", "[sandpile]") {
  const auto g = k2();
  auto r = is_recurrent_burning(g, cfg({1, 1}));
  CHECK(r.recurrent);
  CHECK(format_sequence(g, r.burning_sequence) == "(0, v1, v2)");
  CHECK_FALSE(is_recurrent_burning(g, cfg({0, 0})).recurrent);
  CHECK_FALSE(is_recurrent_burning(w3(), cfg({2, 0, 0})).recurrent);
  CHECK_THROWS_AS(is_recurrent_burning(g, cfg({2, 0})), DomainError);
  CHECK_THROWS_AS(is_recurrent_burning(g, cfg({-1, 0})), DomainError);
}

TEST_CASE("forbidden sets", "[sandpile]") {
  const auto g = k2();
  CHECK(max_forbidden_set(g, cfg({0, 0})) == VertexSet(3, {0, 1}));
  CHECK(max_forbidden_set(g, cfg({1, 0})).empty());
  CHECK(max_forbidden_set(g, cfg({1, -1})).contains(1));
}

TEST_CASE("orientation oracle", "[sandpile]") {
  const auto g = k2();
  CHECK(is_recurrent_orientation(g, cfg({1, 1})));
  CHECK_FALSE(is_recurrent_orientation(g, cfg({0, 0})));
  // Three vertex pairs, 2^3 orientations, of which those rooted and acyclic
  // are v1->v2 or v2->v1 with both pointing into the sink.
  CHECK(rooted_acyclic_orientations(g).size() == 2);
  for (const auto& [label, h] : family_graphs(4)) {
    if (h.total_multiplicity() > 14) continue;
    INFO(label);
    CHECK(is_recurrent_orientation(h, maximal_stable(h)));
  }
  CHECK_THROWS_AS(rooted_acyclic_orientations(make_family(FamilySpec::complete(5)), 14), LimitError);
}

TEST_CASE("recurrence oracles agree with reachability", "[sandpile]") {
  auto graphs = family_graphs(4);
  for (auto& r : random_graphs(12, 21, 5, 2)) graphs.push_back(std::move(r));
  for (const auto& [label, g] : graphs) {
    if (g.total_multiplicity() > 16) continue;
    INFO(label);
    const auto rec = recurrent_by_reachability(g);
    const OrientationOracle oracle(g, 16);
    std::size_t count = 0;
    for_each_stable(g, [&](const Configuration& c) {
      const bool expected = rec.contains(c);
      count += expected;
      CHECK(is_recurrent_burning(g, c).recurrent == expected);
      CHECK(max_forbidden_set(g, c).empty() == expected);
      CHECK(oracle.is_recurrent(c) == expected);
    });
    CHECK(spanning_tree_count(g) == count);
  }
}

TEST_CASE("V_M and off-grain removal", "[sandpile]") {
  const auto g = k2();
  CHECK(v_m_set(g, cfg({1, 1})) == VertexSet(3, {0, 1}));
  CHECK(v_m_set(g, cfg({1, 0})) == VertexSet(3, {0}));
  CHECK(v_m_set(g, cfg({0, 0})).empty());
  CHECK(remove_off_grains(g, cfg({1, 1}), 0) == cfg({1, 0}));
  CHECK(remove_off_grains(g, cfg({1, 0}), 0) == cfg({1, -1}));
  CHECK(remove_off_grains(w3(), cfg({2, 2, 2}), 0) == cfg({2, 1, 1}));
  CHECK_THROWS_AS(remove_off_grains(g, cfg({0, 0}), 0), DomainError);
}

TEST_CASE("strong and minimal recurrence", "[sandpile]") {
  const auto g = k2();
  CHECK(is_strongly_recurrent(g, cfg({1, 1})));
  CHECK_FALSE(is_strongly_recurrent(g, cfg({1, 0})));
  CHECK_FALSE(is_strongly_recurrent(w3(), cfg({2, 0, 2})));
  CHECK_FALSE(is_strongly_recurrent(g, cfg({0, 0}), Quantifier::Exists));

  CHECK(is_minimal_recurrent(g, cfg({1, 0})));
  CHECK_FALSE(is_minimal_recurrent(g, cfg({1, 1})));
  CHECK_FALSE(is_minimal_recurrent(g, cfg({0, 0})));
}

TEST_CASE("wheel characterisations match the general tests", "[sandpile]") {
  for (int n = 3; n <= 6; ++n) {
    const auto g = make_family(FamilySpec::wheel(n));
    for_each_stable(g, [&](const Configuration& c) {
      CHECK(wheel_recurrent_char(n, c.values()) == is_recurrent(g, c));
      CHECK(wheel_sr_char(n, c.values()) == is_strongly_recurrent(g, c));
    });
  }
}

TEST_CASE("markov chain", "[sandpile]") {
  const auto g = k2();
  const auto w = uniform_weights(2);
  const auto run = markov_run(g, cfg({0, 0}), w, 10'000, 42, true);
  const auto rec = recurrent_by_reachability(g);
  CHECK(rec.size() == 3);
  for (std::size_t i = 101; i < run.trace.size(); ++i) CHECK(rec.contains(run.trace[i].state));
  const auto tail = states_after_first_entry(run, [&](const Configuration& c) { return rec.contains(c); });
  for (const auto& c : tail) CHECK(rec.contains(c));

  const auto again = markov_run(g, cfg({0, 0}), w, 10'000, 42, true);
  REQUIRE(again.trace.size() == run.trace.size());
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    CHECK(again.trace[i].dropped == run.trace[i].dropped);
    CHECK(again.trace[i].state == run.trace[i].state);
  }

  const auto idle = markov_run(g, cfg({1, 0}), w, 0, 7);
  CHECK(idle.visits.size() == 1);
  CHECK(idle.visits.begin()->first == cfg({1, 0}));

  const std::vector<double> bad{0.5, 0.4};
  CHECK_THROWS_AS(markov_run(g, cfg({0, 0}), bad, 5, 1), DomainError);
  const std::vector<double> zero{1.0, 0.0};
  CHECK_THROWS_AS(markov_run(g, cfg({0, 0}), zero, 5, 1), DomainError);
}
