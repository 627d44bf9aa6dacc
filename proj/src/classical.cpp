#include "primepark/classical.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "primepark/errors.hpp"

namespace primepark {

PreferenceVector::PreferenceVector(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("a preference vector needs at least one car");
  const int n = static_cast<int>(values_.size());
  for (int x : values_) {
    if (x < 1 || x > n) {
      throw DomainError("preference " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
  }
}

bool PreferenceVector::non_decreasing() const { return std::is_sorted(values_.begin(), values_.end()); }

std::string PreferenceVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ')';
  return os.str();
}

PreferenceVector parse_preferences(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("not an integer: '" + item + "'");
    out.push_back(x);
  }
  return PreferenceVector(std::move(out));
}

bool ParkOutcome::success() const {
  return std::all_of(spots.begin(), spots.end(), [](const auto& s) { return s.has_value(); });
}

ParkOutcome simulate_park(const PreferenceVector& p) {
  const std::size_t n = p.size();
  std::vector<bool> taken(n + 1, false);
  ParkOutcome out;
  for (int want : p.values()) {
    std::optional<int> spot;
    for (std::size_t s = static_cast<std::size_t>(want); s <= n; ++s) {
      if (!taken[s]) {
        taken[s] = true;
        spot = static_cast<int>(s);
        break;
      }
    }
    out.spots.push_back(spot);
  }
  return out;
}

namespace {

std::vector<std::size_t> prefix_counts(const PreferenceVector& p) {
  // at_most[i] = |{j : p_j <= i}|
  std::vector<std::size_t> at_most(p.size() + 1, 0);
  for (int x : p.values()) ++at_most[static_cast<std::size_t>(x)];
  for (std::size_t i = 1; i < at_most.size(); ++i) at_most[i] += at_most[i - 1];
  return at_most;
}

}  // namespace

bool is_pf_by_condition(const PreferenceVector& p, int condition) {
  const std::size_t n = p.size();
  switch (condition) {
    case 1:
      return simulate_park(p).success();
    case 2: {
      std::vector<int> inc(p.values().begin(), p.values().end());
      std::sort(inc.begin(), inc.end());
      for (std::size_t i = 0; i < n; ++i) {
        if (inc[i] > static_cast<int>(i + 1)) return false;
      }
      return true;
    }
    case 3: {
      for (std::size_t i = 1; i <= n; ++i) {
        std::size_t count = 0;
        for (int x : p.values()) count += x <= static_cast<int>(i);
        if (count < i) return false;
      }
      return true;
    }
    case 4: {
      if (n > 20) throw LimitError("condition 4 enumerates subsets and is limited to n <= 20");
      for (std::uint32_t s = 1; s < (1U << n); ++s) {
        const int bound = static_cast<int>(n) + 1 - std::popcount(s);
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i) found = ((s >> i) & 1U) && p[i] <= bound;
        if (!found) return false;
      }
      return true;
    }
    default:
      throw DomainError("condition must be 1, 2, 3 or 4");
  }
}

std::set<std::size_t> breakpoints(const PreferenceVector& p) {
  if (!is_pf_by_condition(p, 3)) throw DomainError(p.to_string() + " is not a parking function");
  const auto at_most = prefix_counts(p);
  std::set<std::size_t> out;
  for (std::size_t j = 1; j <= p.size(); ++j) {
    if (at_most[j] == j) out.insert(j);
  }
  return out;
}

bool is_classical_prime(const PreferenceVector& p) { return breakpoints(p).size() == 1; }

std::pair<PreferenceVector, PreferenceVector> split_at_breakpoint(const PreferenceVector& p, std::size_t j) {
  const auto points = breakpoints(p);
  if (j >= p.size() || !points.contains(j)) {
    throw DomainError(std::to_string(j) + " is not a proper breakpoint of " + p.to_string());
  }
  std::vector<int> low;
  std::vector<int> high;
  for (int x : p.values()) {
    if (x <= static_cast<int>(j)) {
      low.push_back(x);
    } else {
      high.push_back(x - static_cast<int>(j));
    }
  }
  return {PreferenceVector(std::move(low)), PreferenceVector(std::move(high))};
}

std::string StepPath::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (kind == PathKind::Dyck) {
      os << (steps[i] > 0 ? 'U' : 'D');
    } else {
      os << (i ? "," : "") << steps[i];
    }
  }
  return os.str();
}

std::vector<std::pair<int, int>> StepPath::points() const {
  std::vector<std::pair<int, int>> out{{0, 0}};
  int x = 0;
  int y = 0;
  for (int s : steps) {
    ++x;
    y += s;
    out.emplace_back(x, y);
  }
  return out;
}

std::set<std::size_t> StepPath::axis_touches() const {
  std::set<std::size_t> out;
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i];
    if (height != 0) continue;
    // A Dyck step is half a unit wide, so only every second step lands on
    // an integer x.
    if (kind == PathKind::Dyck) {
      if ((i + 1) % 2 == 0) out.insert((i + 1) / 2);
    } else {
      out.insert(i + 1);
    }
  }
  return out;
}

std::vector<int> value_counts(const PreferenceVector& p) {
  std::vector<int> q(p.size(), 0);
  for (int x : p.values()) ++q[static_cast<std::size_t>(x - 1)];
  return q;
}

StepPath to_path(const PreferenceVector& p, PathKind kind) {
  if (!is_pf_by_condition(p, 3)) throw DomainError(p.to_string() + " is not a parking function");
  StepPath path{kind, {}};
  for (int qj : value_counts(p)) {
    if (kind == PathKind::Dyck) {
      path.steps.insert(path.steps.end(), static_cast<std::size_t>(qj), 1);
      path.steps.push_back(-1);
    } else {
      path.steps.push_back(qj - 1);
    }
  }
  return path;
}

PreferenceVector from_path(const StepPath& path) {
  std::vector<int> q;
  if (path.kind == PathKind::Dyck) {
    int run = 0;
    for (int s : path.steps) {
      if (s == 1) {
        ++run;
      } else if (s == -1) {
        q.push_back(run);
        run = 0;
      } else {
        throw DomainError("Dyck steps must be +1 or -1");
      }
    }
    if (run != 0) throw DomainError("a Dyck path must end with a D step");
  } else {
    for (int s : path.steps) {
      if (s < -1) throw DomainError("Lukasiewicz rises must be at least -1");
      q.push_back(s + 1);
    }
  }
  std::vector<int> values;
  for (std::size_t j = 0; j < q.size(); ++j) {
    values.insert(values.end(), static_cast<std::size_t>(q[j]), static_cast<int>(j + 1));
  }
  if (values.size() != q.size()) throw DomainError("path does not return to the x-axis");
  PreferenceVector p(std::move(values));
  if (!is_pf_by_condition(p, 3)) throw DomainError("path dips below the x-axis");
  return p;
}

PreferenceVector prime_bijection_classical(const PreferenceVector& p) {
  if (!p.non_decreasing()) throw DomainError(p.to_string() + " is not non-decreasing");
  if (!is_classical_prime(p)) throw DomainError(p.to_string() + " is not prime");
  if (p.size() < 2) throw DomainError("no parking function of length 0");
  return PreferenceVector(std::vector<int>(p.values().begin() + 1, p.values().end()));
}

PreferenceVector prime_bijection_classical_inverse(const PreferenceVector& p) {
  if (!p.non_decreasing()) throw DomainError(p.to_string() + " is not non-decreasing");
  if (!is_pf_by_condition(p, 3)) throw DomainError(p.to_string() + " is not a parking function");
  std::vector<int> out{1};
  out.insert(out.end(), p.values().begin(), p.values().end());
  return PreferenceVector(std::move(out));
}

}  // namespace primepark
