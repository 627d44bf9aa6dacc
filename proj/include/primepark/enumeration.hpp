#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primepark/families.hpp"
#include "primepark/sandpile.hpp"

namespace primepark {

enum class ElementClass { Stable, Recurrent, SrForAll, SrExists, MinRecurrent, Pf, Ppf, PfInc, PpfInc };

/// "stable", "recurrent", "sr-forall", "sr-exists", "min-recurrent", "pf",
/// "ppf", "pf-inc", "ppf-inc".
std::string class_name(ElementClass cls);
ElementClass parse_class(const std::string& name);

/// Parking-side classes range over 1..deg(v), the others over 0..deg(v)-1.
bool is_parking_class(ElementClass cls);
bool is_increasing_class(ElementClass cls);

/// Membership of one value vector.
bool in_class(const RootedMultigraph& graph, ElementClass cls, std::span<const Grains> values);

struct EnumerationOptions {
  std::size_t jobs = 1;
  /// Upper bound on the product of per-vertex ranges.
  std::uint64_t space_cap = 100'000'000;
};

/// Lazy stream of a class in lexicographic declaration order. Increasing
/// classes step through part-wise non-decreasing vectors only.
class ClassStream {
 public:
  /// Throws LimitError when the search space exceeds the cap and
  /// DomainError for an increasing class on a graph without parts.
  ClassStream(const RootedMultigraph& graph, ElementClass cls, EnumerationOptions options = {});
  /// Restricts the first vertex to first_lo..first_hi (used to split work).
  ClassStream(const RootedMultigraph& graph, ElementClass cls, Grains first_lo, Grains first_hi,
              EnumerationOptions options = {});

  /// The next member, or nullopt at the end.
  std::optional<std::vector<Grains>> next();

  Grains range_lo(VertexId v) const { return lo_[v]; }
  Grains range_hi(VertexId v) const { return hi_[v]; }

 private:
  bool advance();
  bool fill_from(std::size_t k);
  Grains floor_at(std::size_t k) const;

  const RootedMultigraph& graph_;
  ElementClass cls_;
  std::vector<Grains> lo_;
  std::vector<Grains> hi_;
  std::vector<std::optional<std::size_t>> part_pred_;
  std::vector<Grains> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Every member, split over `jobs` workers by the first vertex's value and
/// merged in order.
std::vector<std::vector<Grains>> enumerate_class(const RootedMultigraph& graph, ElementClass cls,
                                                 EnumerationOptions options = {});

BigInt count_class(const RootedMultigraph& graph, ElementClass cls, EnumerationOptions options = {});

struct EnumerationReport {
  std::string family;
  std::string params;
  std::string class_label;
  BigInt count;
  std::optional<BigInt> expected;
  std::string source;  // "closed-form:ppf", "spanning-trees", ""
  bool match = true;
  double millis = 0;
};

enum class ExpectedSource { None, ClosedForm, SpanningTrees };

struct SuiteEntry {
  FamilySpec spec;
  ElementClass cls;
  ExpectedSource source = ExpectedSource::None;
  ClosedFormClass closed_form = ClosedFormClass::Ppf;
};

/// Closed form matching a class on a family, if one exists.
std::optional<ClosedFormClass> closed_form_for(const FamilySpec& spec, ElementClass cls);

EnumerationReport run_entry(const SuiteEntry& entry, EnumerationOptions options = {});
std::vector<EnumerationReport> verify_counts(const std::vector<SuiteEntry>& suite, EnumerationOptions options = {});

/// Every family count with a known closed form, plus recurrent counts
/// against spanning trees on each instance.
std::vector<SuiteEntry> default_suite();

struct OracleReport {
  std::string graph;
  std::uint64_t stable_checked = 0;
  std::uint64_t pf_checked = 0;
  std::uint64_t recurrent_checked = 0;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

/// Burning, forbidden-set and orientation recurrence on every stable
/// configuration; subset-search and V_M primeness on every parking
/// function; strong recurrence against primeness of deg - c on Rec.
OracleReport cross_validate_oracles(const RootedMultigraph& graph, const SearchLimits& limits = {});

}  // namespace primepark
