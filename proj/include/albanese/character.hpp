#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "albanese/decomposition.hpp"
#include "albanese/partition.hpp"
#include "albanese/types.hpp"

namespace albanese {

/// Exponent vector of a torus monomial x_1^{w_1}⋯x_n^{w_n}.
using Weight = std::vector<int>;
/// Laurent polynomial in the torus variables with no zero coefficients.
using LaurentPolynomial = std::map<Weight, BigInt>;

/// A representation built from H and H* by sums, tensor products, Schur
/// functors and duals. Immutable; copies share structure.
class CharExpr {
 public:
  static CharExpr standard();
  static CharExpr dual_standard();
  static CharExpr trivial();
  /// V_{λ,μ} itself, through its Weyl character.
  static CharExpr irreducible(const Bipartition& b);

  CharExpr wedge(int k) const;
  CharExpr sym(int k) const;
  /// Schur functor S_ν applied to this representation.
  CharExpr schur(const Partition& nu) const;
  CharExpr dual() const;

  friend CharExpr operator+(const CharExpr& a, const CharExpr& b);
  /// Tensor product.
  friend CharExpr operator*(const CharExpr& a, const CharExpr& b);

  std::string to_string() const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit CharExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Largest rank accepted by the character routines.
constexpr int kMaxCharacterRank = 5;

/// Character restricted to the diagonal torus of GL(n). CapacityError for
/// n > 5.
LaurentPolynomial character_of(const CharExpr& expr, int n);

/// Weyl character of V_{λ,μ} at rank n; InputError when l(λ)+l(μ) > n.
LaurentPolynomial weyl_character(const Bipartition& b, int n);

/// Peels off Weyl characters by lexicographically largest weight. Throws
/// ConsistencyError if the remainder is not a character.
Decomposition decompose_character(LaurentPolynomial chi, int n);

Decomposition character_decompose(const CharExpr& expr, int n);

}  // namespace albanese
