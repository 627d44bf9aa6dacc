#include "primepark/families.hpp"

#include <algorithm>

#include "primepark/parking.hpp"

namespace primepark {

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Complete:
      if (a < 1) throw DomainError("complete graph needs n >= 1");
      break;
    case FamilyKind::Wheel:
      if (a < 3) throw DomainError("wheel needs n >= 3");
      break;
    case FamilyKind::Tripartite:
      if (a < 1 || b < 1) throw DomainError("tripartite graph needs p, q >= 1");
      break;
    case FamilyKind::Bipartite:
    case FamilyKind::Split:
      if (a < 0 || b < 1) throw DomainError(family_name() + " graph needs a first parameter >= 0 and a second >= 1");
      break;
  }
}

std::string FamilySpec::family_name() const {
  switch (kind) {
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::Tripartite: return "tripartite";
    case FamilyKind::Bipartite: return "bipartite";
    case FamilyKind::Split: return "split";
  }
  return "?";
}

std::string FamilySpec::params() const {
  switch (kind) {
    case FamilyKind::Complete:
    case FamilyKind::Wheel:
      return "n=" + std::to_string(a);
    case FamilyKind::Tripartite:
    case FamilyKind::Bipartite:
      return "p=" + std::to_string(a) + ",q=" + std::to_string(b);
    case FamilyKind::Split:
      return "m=" + std::to_string(a) + ",n=" + std::to_string(b);
  }
  return "";
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "complete") return FamilyKind::Complete;
  if (name == "wheel") return FamilyKind::Wheel;
  if (name == "tripartite") return FamilyKind::Tripartite;
  if (name == "bipartite") return FamilyKind::Bipartite;
  if (name == "split") return FamilyKind::Split;
  throw DomainError("unknown family '" + name + "'");
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void join_all(std::vector<EdgeSpec>& edges, const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  for (const auto& x : xs) {
    for (const auto& y : ys) edges.push_back({x, y, 1});
  }
}

void clique(std::vector<EdgeSpec>& edges, const std::vector<std::string>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) edges.push_back({xs[i], xs[j], 1});
  }
}

// Two parts: ids 0..first-1 then first..first+second-1.
std::vector<std::vector<VertexId>> two_parts(int first, int second) {
  std::vector<std::vector<VertexId>> parts;
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  for (int i = 0; i < first; ++i) a.push_back(static_cast<VertexId>(i));
  for (int j = 0; j < second; ++j) b.push_back(static_cast<VertexId>(first + j));
  if (!a.empty()) parts.push_back(a);
  parts.push_back(b);
  return parts;
}

template <typename... Lists>
std::vector<std::string> concat(const Lists&... lists) {
  std::vector<std::string> out;
  (out.insert(out.end(), lists.begin(), lists.end()), ...);
  return out;
}

}  // namespace

RootedMultigraph make_family(const FamilySpec& spec) {
  spec.validate();
  std::vector<EdgeSpec> edges;
  switch (spec.kind) {
    case FamilyKind::Complete: {
      auto names = concat(std::vector<std::string>{"0"}, numbered("v", 1, spec.a));
      clique(edges, names);
      std::vector<VertexId> all(static_cast<std::size_t>(spec.a));
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return build_graph(names, "0", edges).with_parts({all});
    }
    case FamilyKind::Wheel: {
      auto rim = numbered("v", 1, spec.a);
      for (std::size_t i = 0; i < rim.size(); ++i) {
        edges.push_back({"0", rim[i], 1});
        edges.push_back({rim[i], rim[(i + 1) % rim.size()], 1});
      }
      return build_graph(concat(std::vector<std::string>{"0"}, rim), "0", edges);
    }
    case FamilyKind::Tripartite: {
      auto ps = numbered("p", 1, spec.a);
      auto qs = numbered("q", 1, spec.b);
      const std::vector<std::string> sink{"s"};
      join_all(edges, sink, ps);
      join_all(edges, sink, qs);
      join_all(edges, ps, qs);
      return build_graph(concat(sink, ps, qs), "s", edges).with_parts(two_parts(spec.a, spec.b));
    }
    case FamilyKind::Bipartite: {
      auto ps = numbered("p", 0, spec.a);
      auto qs = numbered("q", 1, spec.b);
      join_all(edges, ps, qs);
      return build_graph(concat(ps, qs), "p0", edges).with_parts(two_parts(spec.a, spec.b));
    }
    case FamilyKind::Split: {
      auto cs = numbered("c", 0, spec.a);
      auto is = numbered("i", 1, spec.b);
      clique(edges, cs);
      join_all(edges, cs, is);
      return build_graph(concat(cs, is), "c0", edges).with_parts(two_parts(spec.a, spec.b));
    }
  }
  throw DomainError("unknown family");
}

bool wheel_recurrent_char(int n, std::span<const Grains> c) {
  if (n < 3 || c.size() != static_cast<std::size_t>(n)) throw DomainError("expected " + std::to_string(n) + " values");
  for (Grains x : c) {
    if (x < 0 || x > 2) throw DomainError("wheel configuration values must lie in {0,1,2}");
  }
  if (std::find(c.begin(), c.end(), 2) == c.end()) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i] != 0 || c[j] != 0) continue;
      // Walk the open cyclic interval from i to j.
      bool two = false;
      for (int k = (i + 1) % n; k != j && !two; k = (k + 1) % n) two = c[k] == 2;
      if (!two) return false;
    }
  }
  return true;
}

bool wheel_sr_char(int n, std::span<const Grains> c) {
  if (c.size() != static_cast<std::size_t>(n)) throw DomainError("expected " + std::to_string(n) + " values");
  int ones = 0;
  for (Grains x : c) {
    if (x != 1 && x != 2) return false;
    ones += x == 1;
  }
  return ones <= 1;
}

std::string to_string(ClosedFormClass cls) {
  switch (cls) {
    case ClosedFormClass::Ppf: return "ppf";
    case ClosedFormClass::PpfInc: return "ppf-inc";
    case ClosedFormClass::SrWheel: return "sr-wheel";
    case ClosedFormClass::Catalan: return "catalan";
  }
  return "?";
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

namespace {

// 0^0 = 1.
BigInt power(long long base, long long exp) {
  BigInt out = 1;
  for (long long i = 0; i < exp; ++i) out *= base;
  return out;
}

[[noreturn]] void mismatch(const FamilySpec& spec, ClosedFormClass cls) {
  throw DomainError("no closed form for class " + to_string(cls) + " on " + spec.describe());
}

}  // namespace

BigInt closed_form_count(const FamilySpec& spec, ClosedFormClass cls) {
  spec.validate();
  const long long a = spec.a;
  const long long b = spec.b;
  switch (spec.kind) {
    case FamilyKind::Complete:
      if (cls == ClosedFormClass::Ppf) return power(a - 1, a - 1);
      if (cls == ClosedFormClass::PpfInc || cls == ClosedFormClass::Catalan) {
        return catalan(static_cast<unsigned>(a - 1));
      }
      break;
    case FamilyKind::Wheel:
      if (cls == ClosedFormClass::SrWheel || cls == ClosedFormClass::Ppf) return a + 1;
      break;
    case FamilyKind::Tripartite:
      if (cls == ClosedFormClass::Ppf) {
        return power(a, b) * power(b - 1, a - 1) + power(b, a) * power(a - 1, b - 1) -
               BigInt(a + b - 1) * power(a - 1, b - 1) * power(b - 1, a - 1);
      }
      break;
    case FamilyKind::Bipartite:
      if (cls == ClosedFormClass::PpfInc && a >= 1) {
        const auto s = static_cast<unsigned>(a + b - 1);
        return binomial(s, static_cast<unsigned>(a)) * binomial(s, static_cast<unsigned>(a - 1)) / s;
      }
      break;
    case FamilyKind::Split:
      if (cls == ClosedFormClass::PpfInc && a >= 1) {
        const auto m = static_cast<unsigned>(a);
        const auto n = static_cast<unsigned>(b);
        return binomial(2 * m - 2, m - 1) * binomial(2 * m + n - 2, n) / m;
      }
      break;
  }
  mismatch(spec, cls);
}

bool is_part_increasing(const RootedMultigraph& graph, std::span<const Grains> values) {
  if (!graph.has_parts()) throw DomainError("increasing classes need a graph with declared parts");
  if (values.size() != graph.non_sink_count()) throw DomainError("value count does not match the graph");
  for (const auto& part : graph.parts()) {
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (values[part[i - 1]] > values[part[i]]) return false;
    }
  }
  return true;
}

namespace {

void check_increasing_prime(const RootedMultigraph& graph, std::span<const Grains> values) {
  if (!is_part_increasing(graph, values)) throw DomainError("input is not increasing");
  ParkingCandidate p(std::vector<Grains>(values.begin(), values.end()));
  if (!is_g_parking_fast(graph, p)) throw DomainError("input is not a parking function");
  if (!is_prime_fast(graph, p)) throw DomainError("input is not prime");
}

void check_increasing_parking(const RootedMultigraph& graph, std::span<const Grains> values) {
  if (!is_part_increasing(graph, values)) throw DomainError("input is not increasing");
  ParkingCandidate p(std::vector<Grains>(values.begin(), values.end()));
  if (!is_g_parking_fast(graph, p)) throw DomainError("input is not a parking function");
}

std::vector<Grains> drop_first(const FamilySpec& spec, FamilyKind kind, std::span<const Grains> values) {
  if (spec.kind != kind || spec.a < 1) throw DomainError("bijection needs " + FamilySpec{kind, 1, 1}.family_name() +
                                                         " with first parameter >= 1");
  check_increasing_prime(make_family(spec), values);
  // A prime increasing input carries its 1 on the first vertex of the part.
  if (values[0] != 1) throw DomainError("first vertex of the part does not carry value 1");
  return {values.begin() + 1, values.end()};
}

std::vector<Grains> prepend_one(const FamilySpec& spec, FamilyKind kind, std::span<const Grains> values) {
  if (spec.kind != kind || spec.a < 1) throw DomainError("bijection needs " + FamilySpec{kind, 1, 1}.family_name() +
                                                         " with first parameter >= 1");
  FamilySpec smaller = spec;
  --smaller.a;
  check_increasing_parking(make_family(smaller), values);
  std::vector<Grains> out{1};
  out.insert(out.end(), values.begin(), values.end());
  return out;
}

}  // namespace

std::vector<Grains> bipartite_prime_bijection(const FamilySpec& spec, std::span<const Grains> values) {
  return drop_first(spec, FamilyKind::Bipartite, values);
}

std::vector<Grains> bipartite_prime_bijection_inverse(const FamilySpec& spec, std::span<const Grains> values) {
  return prepend_one(spec, FamilyKind::Bipartite, values);
}

std::vector<Grains> split_prime_bijection(const FamilySpec& spec, std::span<const Grains> values) {
  return drop_first(spec, FamilyKind::Split, values);
}

std::vector<Grains> split_prime_bijection_inverse(const FamilySpec& spec, std::span<const Grains> values) {
  return prepend_one(spec, FamilyKind::Split, values);
}

RootedMultigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t vertices, Multiplicity max_mult) {
  if (vertices < 2) throw DomainError("need at least 2 vertices");
  if (max_mult < 1) throw DomainError("max multiplicity must be positive");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i < vertices; ++i) names.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<Multiplicity> mult(1, max_mult);
  std::bernoulli_distribution extra(0.5);
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<bool>> used(vertices, std::vector<bool>(vertices, false));
  // Random recursive tree: vertex i attaches to a uniformly chosen earlier one.
  for (std::size_t i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const std::size_t j = pick(rng);
    used[i][j] = used[j][i] = true;
    edges.push_back({names[i], names[j], mult(rng)});
  }
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = i + 1; j < vertices; ++j) {
      if (!used[i][j] && extra(rng)) edges.push_back({names[i], names[j], mult(rng)});
    }
  }
  return build_graph(names, "0", edges);
}

}  // namespace primepark
