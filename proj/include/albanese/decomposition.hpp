#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "albanese/partition.hpp"
#include "albanese/types.hpp"

namespace albanese {

/// A finite direct sum ⊕ V_{λ,μ}^{⊕m} of irreducible algebraic GL(n)
/// representations, stored with strictly positive multiplicities in canonical
/// (decreasing lexicographic) order.
///
/// The optional grade and validity threshold are metadata: equality compares
/// the terms only.
class Decomposition {
 public:
  using Terms = std::map<Bipartition, BigInt, std::greater<>>;

  Decomposition() = default;
  static Decomposition irreducible(const Bipartition& b, const BigInt& multiplicity = 1);
  static Decomposition unit() { return irreducible({}); }

  /// Adds `multiplicity` copies of V_b. Throws ConsistencyError if the result
  /// would be negative; entries that reach zero are removed.
  void add(const Bipartition& b, const BigInt& multiplicity);
  BigInt multiplicity(const Bipartition& b) const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Σ m·dim V_{λ,μ}(n), with the vanishing rule l(λ)+l(μ) > n.
  BigInt total_dim_at(int n) const;
  /// Largest l(λ)+l(μ) over the terms (0 if empty).
  int max_length() const;
  /// Largest |λ|+|μ| over the terms (0 if empty).
  int max_size() const;

  std::optional<int> grade;
  /// Smallest rank n at which this decomposition is asserted to be valid.
  std::optional<int> valid_from;

  Decomposition& operator+=(const Decomposition& other);
  friend Decomposition operator+(Decomposition a, const Decomposition& b) { return a += b; }
  Decomposition scaled(const BigInt& factor) const;

  /// Human-readable form, e.g. "V[1,1|1] + 2 V[1|0]"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Univariate polynomial in T with exact rational coefficients, together with
/// the rank from which it equals the dimension it describes.
class DimensionPolynomial {
 public:
  DimensionPolynomial() = default;
  /// Coefficients from the constant term upwards; trailing zeros are trimmed.
  explicit DimensionPolynomial(std::vector<Rational> coefficients, int valid_from = 0);

  /// Exact Lagrange interpolation through (nodes[k], values[k]).
  static DimensionPolynomial interpolate(const std::vector<int>& nodes, const std::vector<BigInt>& values,
                                         int valid_from);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational leading_coefficient() const;
  Rational evaluate(const Rational& t) const;
  /// Evaluates at an integer and insists on an integer result.
  BigInt evaluate_integer(int n) const;

  int valid_from = 0;

  DimensionPolynomial& operator+=(const DimensionPolynomial& other);
  DimensionPolynomial scaled(const Rational& factor) const;

  /// Expanded form in T, e.g. "1/2*T^3 - 1/2*T^2"; "0" for zero.
  std::string to_string() const;

  /// Compares coefficients only.
  friend bool operator==(const DimensionPolynomial& a, const DimensionPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Build a polynomial from a product of linear factors (T - root) times scale.
DimensionPolynomial polynomial_from_roots(const std::vector<int>& roots, const Rational& scale);

}  // namespace albanese
