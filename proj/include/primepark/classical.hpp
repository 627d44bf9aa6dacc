#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace primepark {

/// Parking preference (p_1, ..., p_n), each entry in 1..n.
class PreferenceVector {
 public:
  /// Throws DomainError on an empty vector or an entry outside 1..n.
  explicit PreferenceVector(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }
  std::span<const int> values() const { return values_; }
  bool non_decreasing() const;
  std::string to_string() const;

  friend auto operator<=>(const PreferenceVector&, const PreferenceVector&) = default;
  friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;

 private:
  std::vector<int> values_;
};

/// Parses "3,1,3,1".
PreferenceVector parse_preferences(const std::string& text);

struct ParkOutcome {
  /// Spot taken by car i (1-based), or nullopt when the car drove off.
  std::vector<std::optional<int>> spots;
  bool success() const;
};

ParkOutcome simulate_park(const PreferenceVector& p);

/// 1: every car parks. 2: inc(p)_i <= i. 3: |{j : p_j <= i}| >= i.
/// 4: every non-empty S holds i with p_i <= n + 1 - |S| (n <= 20).
bool is_pf_by_condition(const PreferenceVector& p, int condition);

/// Indices j with exactly j preferences <= j. Throws DomainError unless p
/// is a parking function.
std::set<std::size_t> breakpoints(const PreferenceVector& p);

bool is_classical_prime(const PreferenceVector& p);

/// (values <= j in index order, remaining values minus j).
std::pair<PreferenceVector, PreferenceVector> split_at_breakpoint(const PreferenceVector& p, std::size_t j);

enum class PathKind { Dyck, Lukasiewicz };

/// Dyck steps are +1 (U) and -1 (D), each half a unit wide; a Lukasiewicz
/// step k is one unit wide and rises q_k - 1.
struct StepPath {
  PathKind kind;
  std::vector<int> steps;

  /// "UUDD" or "2,-1,-1".
  std::string to_string() const;
  /// Positive integer x-coordinates where the path sits on the x-axis.
  std::set<std::size_t> axis_touches() const;
  /// (x, y) vertices; Dyck coordinates are doubled so they stay integral.
  std::vector<std::pair<int, int>> points() const;
};

/// q_j = |{i : p_i = j}|.
std::vector<int> value_counts(const PreferenceVector& p);

StepPath to_path(const PreferenceVector& p, PathKind kind);
/// The non-decreasing parking function of a path. Throws DomainError on a
/// malformed path.
PreferenceVector from_path(const StepPath& path);

/// Non-decreasing prime of length n -> non-decreasing parking function of
/// length n - 1, by dropping the leading 1.
PreferenceVector prime_bijection_classical(const PreferenceVector& p);
/// Prepends a 1.
PreferenceVector prime_bijection_classical_inverse(const PreferenceVector& p);

}  // namespace primepark
