#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "primepark/graph.hpp"

namespace primepark {

enum class FamilyKind { Complete, Wheel, Tripartite, Bipartite, Split };

/// Complete(n), Wheel(n), Tripartite(p,q), Bipartite(p,q), Split(m,n).
/// Single-parameter families use `a` only. Bipartite and Split accept
/// a = 0, which is the star with b leaves.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  int a = 1;
  int b = 0;

  static FamilySpec complete(int n) { return {FamilyKind::Complete, n, 0}; }
  static FamilySpec wheel(int n) { return {FamilyKind::Wheel, n, 0}; }
  static FamilySpec tripartite(int p, int q) { return {FamilyKind::Tripartite, p, q}; }
  static FamilySpec bipartite(int p, int q) { return {FamilyKind::Bipartite, p, q}; }
  static FamilySpec split(int m, int n) { return {FamilyKind::Split, m, n}; }

  /// Throws DomainError on bad parameters.
  void validate() const;
  /// "complete", "wheel", ...
  std::string family_name() const;
  /// "n=4" or "p=2,q=3".
  std::string params() const;
  std::string describe() const { return family_name() + "(" + params() + ")"; }
};

FamilyKind parse_family_kind(const std::string& name);

/// Builds the family graph with its declared parts. Vertex names:
///   complete  sink "0", "v1".."vn"; one part
///   wheel     hub sink "0", rim "v1".."vn"; no parts
///   tripartite sink "s", parts "p1".. and "q1"..
///   bipartite sink "p0", parts "p1".. and "q1"..
///   split     sink "c0", parts "c1".. and "i1"..
RootedMultigraph make_family(const FamilySpec& spec);

/// Recurrence on the wheel W_n by the cyclic-interval rule. Entries must
/// lie in {0,1,2}.
bool wheel_recurrent_char(int n, std::span<const Grains> c);
/// Strong recurrence on W_n: c in {1,2}^n with at most one 1.
bool wheel_sr_char(int n, std::span<const Grains> c);

enum class ClosedFormClass { Ppf, PpfInc, SrWheel, Catalan };

std::string to_string(ClosedFormClass cls);

/// Exact closed-form count; throws DomainError on a class/family mismatch.
BigInt closed_form_count(const FamilySpec& spec, ClosedFormClass cls);

BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned n);

/// Values non-decreasing within every declared part. Throws DomainError on
/// a graph without parts.
bool is_part_increasing(const RootedMultigraph& graph, std::span<const Grains> values);

/// Increasing prime parking function on Bipartite(p,q) -> increasing
/// parking function on Bipartite(p-1,q), dropping the first P-vertex.
std::vector<Grains> bipartite_prime_bijection(const FamilySpec& spec, std::span<const Grains> values);
/// Inserts that vertex back with value 1; `spec` names the target family.
std::vector<Grains> bipartite_prime_bijection_inverse(const FamilySpec& spec, std::span<const Grains> values);

/// Same pair of maps on Split(m,n), through the first clique vertex.
std::vector<Grains> split_prime_bijection(const FamilySpec& spec, std::span<const Grains> values);
std::vector<Grains> split_prime_bijection_inverse(const FamilySpec& spec, std::span<const Grains> values);

/// Random connected multigraph on `vertices` vertices (sink "0", others
/// "v1".."vk"): a random spanning tree plus extra edges with probability
/// 1/2, multiplicities uniform in 1..max_mult.
RootedMultigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t vertices, Multiplicity max_mult);

}  // namespace primepark
