#pragma once

#include <compare>
#include <map>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "albanese/decomposition.hpp"

namespace albanese {

enum class Variant { Full, Outer };

std::string to_string(Variant v);
/// Parses "full" or "outer".
Variant parse_variant(std::string_view text);

/// One generator species of U_*: the corolla of degree l (V_{1^{l+1},1}) or
/// the wheel of degree l (V_{1^l,0}).
struct GeneratorType {
  enum class Kind { Corolla, Wheel };
  Kind kind;
  int degree;

  Bipartition shape() const;
  std::string to_string() const;

  friend auto operator<=>(const GeneratorType&, const GeneratorType&) = default;
  friend bool operator==(const GeneratorType&, const GeneratorType&) = default;
};

/// A multiset of generator types, i.e. one monomial of S^*(U_*).
class GeneratorMultiset {
 public:
  void add(GeneratorType type, int count = 1);
  const std::map<GeneratorType, int>& counts() const { return counts_; }

  int total_degree() const;
  int covariant_size() const;
  int contravariant_size() const;
  int cardinality() const;
  std::string to_string() const;

  friend bool operator==(const GeneratorMultiset&, const GeneratorMultiset&) = default;

 private:
  std::map<GeneratorType, int> counts_;
};

/// All generator multisets of total degree i, in a fixed order. The outer
/// variant never uses the degree-1 wheel.
std::vector<GeneratorMultiset> generator_multisets(int degree, Variant variant);

/// Traceless product over the types of a multiset of their graded-symmetric
/// powers.
Decomposition multiset_contribution(const GeneratorMultiset& multiset, std::stop_token stop = {});

/// U_i = Hom(H, ∧^{i+1} H) = V_{1^{i+1},1} ⊕ V_{1^i,0}, tagged with degree i.
Decomposition generator_u(int i);
/// U^O_1 = V_{1^2,1}; U^O_i = U_i for i ≥ 2.
Decomposition generator_u_out(int i);

/// W_i (full) or W^O_i (outer): the stable Albanese homology in degree i,
/// valid for n ≥ 3i. Memoized.
Decomposition albanese_w(int i, Variant variant = Variant::Full, std::stop_token stop = {});

/// The (|λ|, |μ|) pairs occurring in W_i, sorted.
std::vector<std::pair<int, int>> constituent_support(int i);

/// W_i == W^O_i ⊕ (W^O_{i-1} ⊗ H).
bool verify_io_splitting(int i);

/// Dimension polynomial of W_i or W^O_i; always of degree 3i and recorded as
/// valid from n = 3i. Throws ConsistencyError if the degree is not 3i.
DimensionPolynomial albanese_dim_polynomial(int i, Variant variant = Variant::Full);

/// Dimension formula for H^i(IA_n) that is only known under the hypothesis
/// that the stable cohomology is algebraic.
struct ConjecturalDimension {
  DimensionPolynomial polynomial;
  bool conjectural = true;
  std::string hypothesis = "H^i(IA_n,Q) is algebraic as a GL(n,Q)-module for n >> i";
};

/// Number of monomials of degree l in z_1, z_2, … with deg z_j = 4j.
BigInt tautological_monomials(int l);

/// Σ_{k+l=i} dim W_k · #monomials of degree l.
ConjecturalDimension conjectural_cohomology_dim(int i);

/// The part of W_i contributed by single-generator multisets.
Decomposition primitive_part(int i);

}  // namespace albanese
