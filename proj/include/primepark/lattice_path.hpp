#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace primepark {

/// Monotone path of unit E and N steps from (0,0) to (width, height).
struct MonotonePath {
  int width = 0;
  int height = 0;
  std::string steps;  // over {E, N}

  std::vector<std::pair<int, int>> points() const;
  /// y-coordinate of each E step, in order.
  std::vector<int> e_step_heights() const;
};

/// i-th E step at height a_i. `a` non-decreasing with entries in 0..q.
MonotonePath path_from_a(std::span<const int> a, int q);
/// j-th N step at x-coordinate b_j. `b` non-decreasing with entries in 0..p.
MonotonePath path_from_b(std::span<const int> b, int p);

/// A (p,q)-pair: values on the P part then on the Q part.
struct PqVector {
  std::vector<int> on_p;
  std::vector<int> on_q;
};

/// Parses "3,4,1;1,3" (semicolon between the parts).
PqVector parse_pq(const std::string& text);

/// The two paths of a pair: inc(values) - 1 on each side.
std::pair<MonotonePath, MonotonePath> pq_paths(const PqVector& v, int p, int q);

/// Weakly-above test. Out-of-range values give false; a length mismatch
/// throws DomainError.
bool is_pq_parking(const PqVector& v, int p, int q);

/// The paths meet only at (0,0) and (p,q). Throws DomainError unless the
/// pair is (p,q)-parking.
bool is_prime_pq(const PqVector& v, int p, int q);

/// Points shared by both paths, in path order of the first.
std::vector<std::pair<int, int>> common_points(const MonotonePath& a, const MonotonePath& b);

/// Weakly-above test for two paths of equal size.
bool weakly_above(const MonotonePath& upper, const MonotonePath& lower);

}  // namespace primepark
