#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primepark/parking.hpp"

namespace primepark {

struct QuantifierGapWitness {
  RootedMultigraph graph;
  Configuration config;
  std::uint64_t attempt;
};

/// Seeded search over random multigraphs for a configuration that is
/// strongly recurrent for some v in V_M(c) but not for all of them.
std::optional<QuantifierGapWitness> search_quantifier_gap(std::uint64_t seed, std::size_t vertices = 5,
                                                          std::size_t attempts = 500, Multiplicity max_mult = 3);

struct DecompositionWitness {
  RootedMultigraph graph;
  ParkingCandidate pf;
  std::vector<OrderedPartition> decompositions;
  std::uint64_t attempt;
};

/// Seeded search for a parking function with two prime decompositions
/// whose block-size multisets differ.
std::optional<DecompositionWitness> search_decomposition_witness(std::uint64_t seed, std::size_t vertices = 5,
                                                                 std::size_t attempts = 500,
                                                                 Multiplicity max_mult = 1);

/// Sorted block sizes of a partition.
std::vector<std::size_t> block_sizes(const OrderedPartition& partition);

}  // namespace primepark
