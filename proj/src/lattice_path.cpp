#include "primepark/lattice_path.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "primepark/errors.hpp"

namespace primepark {

std::vector<std::pair<int, int>> MonotonePath::points() const {
  std::vector<std::pair<int, int>> out{{0, 0}};
  int x = 0;
  int y = 0;
  for (char s : steps) {
    (s == 'E' ? x : y) += 1;
    out.emplace_back(x, y);
  }
  return out;
}

std::vector<int> MonotonePath::e_step_heights() const {
  std::vector<int> out;
  int y = 0;
  for (char s : steps) {
    if (s == 'E') {
      out.push_back(y);
    } else {
      ++y;
    }
  }
  return out;
}

namespace {

void check_monotone(std::span<const int> v, int top, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > top) {
      throw DomainError(std::string(what) + " entries must lie in 0.." + std::to_string(top));
    }
    if (i && v[i] < v[i - 1]) throw DomainError(std::string(what) + " must be non-decreasing");
  }
}

// `first` steps placed at the levels given by `levels`, filling with `second`.
MonotonePath interleave(std::span<const int> levels, int extent, char first, char second) {
  std::string steps;
  int level = 0;
  for (int target : levels) {
    steps.append(static_cast<std::size_t>(target - level), second);
    level = target;
    steps.push_back(first);
  }
  steps.append(static_cast<std::size_t>(extent - level), second);
  return {0, 0, steps};
}

std::vector<int> shifted_sorted(const std::vector<int>& values) {
  std::vector<int> out(values);
  std::sort(out.begin(), out.end());
  for (int& x : out) --x;
  return out;
}

void check_lengths(const PqVector& v, int p, int q) {
  if (p < 1 || q < 1) throw DomainError("p and q must be positive");
  if (v.on_p.size() != static_cast<std::size_t>(p) || v.on_q.size() != static_cast<std::size_t>(q)) {
    throw DomainError("expected " + std::to_string(p) + " + " + std::to_string(q) + " values, got " +
                      std::to_string(v.on_p.size()) + " + " + std::to_string(v.on_q.size()));
  }
}

bool in_range(const PqVector& v, int p, int q) {
  auto ok = [](const std::vector<int>& xs, int top) {
    return std::all_of(xs.begin(), xs.end(), [&](int x) { return x >= 1 && x <= top; });
  };
  return ok(v.on_p, q + 1) && ok(v.on_q, p + 1);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'");
    }
  }
  return out;
}

}  // namespace

MonotonePath path_from_a(std::span<const int> a, int q) {
  check_monotone(a, q, "a");
  MonotonePath out = interleave(a, q, 'E', 'N');
  out.width = static_cast<int>(a.size());
  out.height = q;
  return out;
}

MonotonePath path_from_b(std::span<const int> b, int p) {
  check_monotone(b, p, "b");
  MonotonePath out = interleave(b, p, 'N', 'E');
  out.width = p;
  out.height = static_cast<int>(b.size());
  return out;
}

PqVector parse_pq(const std::string& text) {
  const auto cut = text.find(';');
  if (cut == std::string::npos) throw ParseError("expected two comma-separated parts joined by ';'");
  return {parse_ints(text.substr(0, cut)), parse_ints(text.substr(cut + 1))};
}

std::pair<MonotonePath, MonotonePath> pq_paths(const PqVector& v, int p, int q) {
  check_lengths(v, p, q);
  if (!in_range(v, p, q)) throw DomainError("pair values out of range");
  const auto a = shifted_sorted(v.on_p);
  const auto b = shifted_sorted(v.on_q);
  return {path_from_a(a, q), path_from_b(b, p)};
}

bool weakly_above(const MonotonePath& upper, const MonotonePath& lower) {
  const auto hu = upper.e_step_heights();
  const auto hl = lower.e_step_heights();
  if (hu.size() != hl.size()) throw DomainError("paths have different widths");
  for (std::size_t i = 0; i < hu.size(); ++i) {
    if (hu[i] < hl[i]) return false;
  }
  return true;
}

bool is_pq_parking(const PqVector& v, int p, int q) {
  check_lengths(v, p, q);
  if (!in_range(v, p, q)) return false;
  const auto [la, lb] = pq_paths(v, p, q);
  return weakly_above(lb, la);
}

std::vector<std::pair<int, int>> common_points(const MonotonePath& a, const MonotonePath& b) {
  const auto pb = b.points();
  const std::set<std::pair<int, int>> in_b(pb.begin(), pb.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& pt : a.points()) {
    if (in_b.contains(pt)) out.push_back(pt);
  }
  return out;
}

bool is_prime_pq(const PqVector& v, int p, int q) {
  if (!is_pq_parking(v, p, q)) throw DomainError("pair is not (p,q)-parking");
  const auto [la, lb] = pq_paths(v, p, q);
  return common_points(la, lb).size() == 2;
}

}  // namespace primepark
