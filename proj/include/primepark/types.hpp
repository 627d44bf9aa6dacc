#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace primepark {

/// Index of a vertex inside a RootedMultigraph. Non-sink vertices occupy
/// 0..n-1 in declaration order and the sink is always n.
using VertexId = std::size_t;

using Multiplicity = std::int64_t;

/// Grain counts, parking values and their differences.
using Grains = std::int64_t;

using BigInt = boost::multiprecision::cpp_int;

/// Size limits for the exponential oracles. Exceeding one is an error,
/// never a silent truncation.
struct SearchLimits {
  std::size_t subset_cap = 20;        // |V~| for the subset parking test
  std::size_t partition_cap = 10;     // |V~| for partition enumeration
  std::size_t orientation_cap = 14;   // total edge multiplicity
};

}  // namespace primepark
