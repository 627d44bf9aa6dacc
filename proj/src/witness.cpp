#include "primepark/witness.hpp"

#include <algorithm>
#include <random>

#include "primepark/enumeration.hpp"
#include "primepark/families.hpp"

namespace primepark {

std::optional<QuantifierGapWitness> search_quantifier_gap(std::uint64_t seed, std::size_t vertices,
                                                          std::size_t attempts, Multiplicity max_mult) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 0; attempt < attempts; ++attempt) {
    RootedMultigraph graph = random_connected_multigraph(rng, vertices, max_mult);
    ClassStream stream(graph, ElementClass::SrExists);
    while (auto values = stream.next()) {
      Configuration c(std::move(*values));
      if (!is_strongly_recurrent(graph, c, Quantifier::ForAll)) return QuantifierGapWitness{graph, c, attempt};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> block_sizes(const OrderedPartition& partition) {
  std::vector<std::size_t> out;
  for (const auto& b : partition.blocks) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DecompositionWitness> search_decomposition_witness(std::uint64_t seed, std::size_t vertices,
                                                                 std::size_t attempts, Multiplicity max_mult) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 0; attempt < attempts; ++attempt) {
    RootedMultigraph graph = random_connected_multigraph(rng, vertices, max_mult);
    ClassStream stream(graph, ElementClass::Pf);
    while (auto values = stream.next()) {
      ParkingCandidate p(std::move(*values));
      auto all = prime_decompositions(graph, p);
      for (std::size_t i = 1; i < all.size(); ++i) {
        if (block_sizes(all[i]) != block_sizes(all[0])) return DecompositionWitness{graph, p, all, attempt};
      }
    }
  }
  return std::nullopt;
}

}  // namespace primepark
