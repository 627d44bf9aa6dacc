#include "primepark/enumeration.hpp"

#include <chrono>
#include <thread>

#include "primepark/orientation.hpp"
#include "primepark/parking.hpp"

namespace primepark {

std::string class_name(ElementClass cls) {
  switch (cls) {
    case ElementClass::Stable: return "stable";
    case ElementClass::Recurrent: return "recurrent";
    case ElementClass::SrForAll: return "sr-forall";
    case ElementClass::SrExists: return "sr-exists";
    case ElementClass::MinRecurrent: return "min-recurrent";
    case ElementClass::Pf: return "pf";
    case ElementClass::Ppf: return "ppf";
    case ElementClass::PfInc: return "pf-inc";
    case ElementClass::PpfInc: return "ppf-inc";
  }
  return "?";
}

ElementClass parse_class(const std::string& name) {
  for (auto cls : {ElementClass::Stable, ElementClass::Recurrent, ElementClass::SrForAll, ElementClass::SrExists,
                   ElementClass::MinRecurrent, ElementClass::Pf, ElementClass::Ppf, ElementClass::PfInc,
                   ElementClass::PpfInc}) {
    if (class_name(cls) == name) return cls;
  }
  throw DomainError("unknown class '" + name + "'");
}

bool is_parking_class(ElementClass cls) {
  return cls == ElementClass::Pf || cls == ElementClass::Ppf || is_increasing_class(cls);
}

bool is_increasing_class(ElementClass cls) { return cls == ElementClass::PfInc || cls == ElementClass::PpfInc; }

bool in_class(const RootedMultigraph& graph, ElementClass cls, std::span<const Grains> values) {
  check_domain(graph, values);
  auto config = [&] { return Configuration(std::vector<Grains>(values.begin(), values.end())); };
  if (is_parking_class(cls)) {
    for (Grains x : values) {
      if (x < 1) return false;
    }
    if (is_increasing_class(cls) && !is_part_increasing(graph, values)) return false;
    ParkingCandidate p(std::vector<Grains>(values.begin(), values.end()));
    if (!is_g_parking_fast(graph, p)) return false;
    return (cls == ElementClass::Pf || cls == ElementClass::PfInc) || is_prime_fast(graph, p);
  }
  switch (cls) {
    case ElementClass::Stable: return is_stable(graph, config());
    case ElementClass::Recurrent: return is_recurrent(graph, config());
    case ElementClass::SrForAll: return is_strongly_recurrent(graph, config(), Quantifier::ForAll);
    case ElementClass::SrExists: return is_strongly_recurrent(graph, config(), Quantifier::Exists);
    case ElementClass::MinRecurrent: return is_minimal_recurrent(graph, config());
    default: return false;
  }
}

ClassStream::ClassStream(const RootedMultigraph& graph, ElementClass cls, EnumerationOptions options)
    : ClassStream(graph, cls, is_parking_class(cls) ? 1 : 0,
                  is_parking_class(cls) ? graph.degree(0) : graph.degree(0) - 1, options) {}

ClassStream::ClassStream(const RootedMultigraph& graph, ElementClass cls, Grains first_lo, Grains first_hi,
                         EnumerationOptions options)
    : graph_(graph), cls_(cls) {
  const std::size_t n = graph.non_sink_count();
  const Grains shift = is_parking_class(cls) ? 1 : 0;
  BigInt space = 1;
  for (VertexId v = 0; v < n; ++v) {
    lo_.push_back(shift);
    hi_.push_back(graph.degree(v) - 1 + shift);
    space *= graph.degree(v);
  }
  if (space > options.space_cap) {
    throw LimitError("search space " + space.str() + " exceeds the cap of " + std::to_string(options.space_cap));
  }
  lo_[0] = std::max(lo_[0], first_lo);
  hi_[0] = std::min(hi_[0], first_hi);
  part_pred_.assign(n, std::nullopt);
  if (is_increasing_class(cls)) {
    if (!graph.has_parts()) throw DomainError("class " + class_name(cls) + " needs a graph with declared parts");
    for (const auto& part : graph.parts()) {
      for (std::size_t i = 1; i < part.size(); ++i) part_pred_[part[i]] = part[i - 1];
    }
  }
  current_.assign(n, 0);
}

Grains ClassStream::floor_at(std::size_t k) const {
  Grains floor = lo_[k];
  if (part_pred_[k] && *part_pred_[k] < k) floor = std::max(floor, current_[*part_pred_[k]]);
  return floor;
}

bool ClassStream::fill_from(std::size_t k) {
  for (std::size_t i = k; i < current_.size(); ++i) {
    current_[i] = floor_at(i);
    if (current_[i] > hi_[i]) return false;
  }
  return true;
}

bool ClassStream::advance() {
  if (!started_) {
    started_ = true;
    return fill_from(0);
  }
  for (std::size_t k = current_.size(); k-- > 0;) {
    while (current_[k] < hi_[k]) {
      ++current_[k];
      if (fill_from(k + 1)) return true;
    }
  }
  return false;
}

std::optional<std::vector<Grains>> ClassStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (in_class(graph_, cls_, current_)) return current_;
  }
  return std::nullopt;
}

namespace {

template <typename Work>
void split_first_vertex(const RootedMultigraph& graph, ElementClass cls, EnumerationOptions options, Work&& work) {
  ClassStream probe(graph, cls, options);  // validates caps and parts up front
  const Grains lo = probe.range_lo(0);
  const Grains hi = probe.range_hi(0);
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, width));
  std::vector<std::thread> threads;
  for (std::size_t j = 0; j < jobs; ++j) {
    const Grains from = lo + static_cast<Grains>(width * j / jobs);
    const Grains to = lo + static_cast<Grains>(width * (j + 1) / jobs) - 1;
    if (jobs == 1) {
      work(j, from, to);
    } else {
      threads.emplace_back([&, j, from, to] { work(j, from, to); });
    }
  }
  for (auto& t : threads) t.join();
}

}  // namespace

std::vector<std::vector<Grains>> enumerate_class(const RootedMultigraph& graph, ElementClass cls,
                                                 EnumerationOptions options) {
  std::vector<std::vector<std::vector<Grains>>> chunks(std::max<std::size_t>(1, options.jobs));
  split_first_vertex(graph, cls, options, [&](std::size_t j, Grains from, Grains to) {
    ClassStream stream(graph, cls, from, to, options);
    while (auto x = stream.next()) chunks[j].push_back(std::move(*x));
  });
  std::vector<std::vector<Grains>> out;
  for (auto& c : chunks) {
    for (auto& x : c) out.push_back(std::move(x));
  }
  return out;
}

BigInt count_class(const RootedMultigraph& graph, ElementClass cls, EnumerationOptions options) {
  std::vector<std::uint64_t> counts(std::max<std::size_t>(1, options.jobs), 0);
  split_first_vertex(graph, cls, options, [&](std::size_t j, Grains from, Grains to) {
    ClassStream stream(graph, cls, from, to, options);
    while (stream.next()) ++counts[j];
  });
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::optional<ClosedFormClass> closed_form_for(const FamilySpec& spec, ElementClass cls) {
  switch (spec.kind) {
    case FamilyKind::Complete:
      if (cls == ElementClass::Ppf || cls == ElementClass::SrForAll) return ClosedFormClass::Ppf;
      if (cls == ElementClass::PpfInc) return ClosedFormClass::Catalan;
      break;
    case FamilyKind::Wheel:
      if (cls == ElementClass::SrForAll || cls == ElementClass::Ppf) return ClosedFormClass::SrWheel;
      break;
    case FamilyKind::Tripartite:
      if (cls == ElementClass::Ppf || cls == ElementClass::SrForAll) return ClosedFormClass::Ppf;
      break;
    case FamilyKind::Bipartite:
    case FamilyKind::Split:
      if (cls == ElementClass::PpfInc && spec.a >= 1) return ClosedFormClass::PpfInc;
      break;
  }
  return std::nullopt;
}

EnumerationReport run_entry(const SuiteEntry& entry, EnumerationOptions options) {
  const auto start = std::chrono::steady_clock::now();
  const RootedMultigraph graph = make_family(entry.spec);
  EnumerationReport r;
  r.family = entry.spec.family_name();
  r.params = entry.spec.params();
  r.class_label = class_name(entry.cls);
  r.count = count_class(graph, entry.cls, options);
  switch (entry.source) {
    case ExpectedSource::None:
      break;
    case ExpectedSource::ClosedForm:
      r.expected = closed_form_count(entry.spec, entry.closed_form);
      r.source = "closed-form:" + to_string(entry.closed_form);
      break;
    case ExpectedSource::SpanningTrees:
      r.expected = spanning_tree_count(graph);
      r.source = "spanning-trees";
      break;
  }
  r.match = !r.expected || *r.expected == r.count;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<EnumerationReport> verify_counts(const std::vector<SuiteEntry>& suite, EnumerationOptions options) {
  std::vector<EnumerationReport> out;
  for (const auto& e : suite) out.push_back(run_entry(e, options));
  return out;
}

std::vector<SuiteEntry> default_suite() {
  std::vector<FamilySpec> instances;
  std::vector<SuiteEntry> suite;
  auto closed = [&](FamilySpec spec, ElementClass cls) {
    suite.push_back({spec, cls, ExpectedSource::ClosedForm, *closed_form_for(spec, cls)});
    instances.push_back(spec);
  };
  for (int n = 2; n <= 5; ++n) closed(FamilySpec::complete(n), ElementClass::Ppf);
  for (int n = 2; n <= 8; ++n) closed(FamilySpec::complete(n), ElementClass::PpfInc);
  for (int n = 3; n <= 7; ++n) closed(FamilySpec::wheel(n), ElementClass::SrForAll);
  for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) closed(FamilySpec::tripartite(p, q), ElementClass::Ppf);
  for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) closed(FamilySpec::bipartite(p, q), ElementClass::PpfInc);
  for (auto [m, n] : {std::pair{2, 1}, {2, 2}, {3, 2}}) closed(FamilySpec::split(m, n), ElementClass::PpfInc);

  std::vector<FamilySpec> seen;
  for (const auto& spec : instances) {
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const FamilySpec& s) {
      return s.kind == spec.kind && s.a == spec.a && s.b == spec.b;
    });
    // K_8 has 8^8 stable configurations; recurrent counts stop at 7.
    if (dup || (spec.kind == FamilyKind::Complete && spec.a > 7)) continue;
    seen.push_back(spec);
    suite.push_back({spec, ElementClass::Recurrent, ExpectedSource::SpanningTrees});
  }
  return suite;
}

OracleReport cross_validate_oracles(const RootedMultigraph& graph, const SearchLimits& limits) {
  OracleReport report;
  report.graph = graph.describe();
  const OrientationOracle orientations(graph, limits.orientation_cap);
  const auto deg = degree_vector(graph);
  auto note = [&](const Configuration& c, const std::string& what) {
    if (report.discrepancies.size() < 20) {
      report.discrepancies.push_back(report.graph + " c=(" + format_values(c.values()) + "): " + what);
    }
  };

  ClassStream stream(graph, ElementClass::Stable);
  while (auto values = stream.next()) {
    const Configuration c(*values);
    ++report.stable_checked;
    std::vector<Grains> pv(c.size());
    for (VertexId v = 0; v < c.size(); ++v) pv[v] = deg[v] - c[v];
    const ParkingCandidate p(std::move(pv));

    const bool burning = is_recurrent_burning(graph, c).recurrent;
    const bool forbidden = max_forbidden_set(graph, c).empty();
    const bool oriented = orientations.is_recurrent(c);
    const bool naive = is_g_parking_naive(graph, p, limits.subset_cap);
    if (burning != forbidden || burning != oriented || burning != naive) {
      note(c, "burning=" + std::to_string(burning) + " forbidden=" + std::to_string(forbidden) +
                  " orientation=" + std::to_string(oriented) + " subset-parking=" + std::to_string(naive));
    }
    if (!burning) continue;
    ++report.recurrent_checked;
    ++report.pf_checked;
    const bool brute = is_prime_bruteforce(graph, p, limits);
    const bool fast = is_prime_fast(graph, p);
    const bool sr = is_strongly_recurrent(graph, c, Quantifier::ForAll);
    if (brute != fast || brute != sr) {
      note(c, "prime-bruteforce=" + std::to_string(brute) + " prime-fast=" + std::to_string(fast) +
                  " strongly-recurrent=" + std::to_string(sr));
    }
  }
  return report;
}

}  // namespace primepark
