#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "albanese/types.hpp"

namespace albanese {

/// A freely reduced word in x_1..x_n; letter +a is x_a, −a is x_a^{-1}.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces `letters`; InputError when a letter is 0 or exceeds the rank.
  FreeWord(std::vector<int> letters, int rank);

  static FreeWord generator(int a, int rank) { return FreeWord({a}, rank); }
  /// Parses "x1 x2^-1 x1" (exponents may be any nonzero integer); "1" or ""
  /// is the identity.
  static FreeWord parse(std::string_view text, int rank);

  const std::vector<int>& letters() const { return letters_; }
  int rank() const { return rank_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  /// Caret notation, one letter per token; "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
  int rank_ = 0;
};

/// Free reduction of a raw letter sequence.
FreeWord reduce_word(const std::vector<int>& raw, int rank);

/// Endomorphism of F_n given by the images of x_1..x_n.
class FreeEndomorphism {
 public:
  /// When `automorphism` is set the abelianization must be invertible over Z
  /// (InputError otherwise).
  FreeEndomorphism(std::vector<FreeWord> images, bool automorphism);

  static FreeEndomorphism identity(int rank);
  /// {"x1": "x2 x1 x2^-1", ...}; unspecified generators are fixed.
  static FreeEndomorphism from_json(std::string_view json, int rank, bool automorphism = true);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int a) const { return images_.at(static_cast<std::size_t>(a - 1)); }
  bool is_automorphism() const { return automorphism_; }
  /// Entry [i][a] is the exponent sum of x_{i+1} in the image of x_{a+1}.
  std::vector<std::vector<int>> abelianization() const;

  std::string to_string() const;

  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
  bool automorphism_;
};

FreeWord apply_endo(const FreeEndomorphism& f, const FreeWord& w);
/// f∘g: x ↦ f(g(x)).
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g);

/// True iff the abelianization is the identity. InputError unless f is
/// flagged as an automorphism.
bool is_ia(const FreeEndomorphism& f);

/// K_{a,b}: x_a ↦ x_b x_a x_b^{-1}, then K_{a,b,c}: x_a ↦ x_a [x_b, x_c] with
/// b < c, where [x, y] = x y x^{-1} y^{-1}. InputError for n < 3.
std::vector<FreeEndomorphism> magnus_generators(int n);

/// An element of Hom(H, ∧²H): for each a, integer coefficients of e_b∧e_c
/// with b < c (1-based).
class JohnsonValue {
 public:
  explicit JohnsonValue(int rank = 0) : images_(static_cast<std::size_t>(rank)) {}

  int rank() const { return static_cast<int>(images_.size()); }
  /// Coefficient of e_b∧e_c in the image of e_a, for any b, c (antisymmetric).
  BigInt coefficient(int a, int b, int c) const;
  void add(int a, int b, int c, const BigInt& value);
  bool is_zero() const;
  const std::map<std::pair<int, int>, BigInt>& image(int a) const {
    return images_.at(static_cast<std::size_t>(a - 1));
  }

  JohnsonValue& operator+=(const JohnsonValue& other);
  friend JohnsonValue operator+(JohnsonValue a, const JohnsonValue& b) { return a += b; }

  /// "e1 -> -e1^e2; e2 -> 0; ..."
  std::string to_string() const;

  friend bool operator==(const JohnsonValue&, const JohnsonValue&) = default;

 private:
  std::vector<std::map<std::pair<int, int>, BigInt>> images_;
};

/// Class in ∧²H of a word in the commutator subgroup, by signed pair
/// counting: e_b∧e_c (b < c) gets Σ ε_i ε_j over occurrences x_b^{ε_i} before
/// x_c^{ε_j}. Returned as coefficients indexed by (b, c).
std::map<std::pair<int, int>, BigInt> wedge_class(const FreeWord& w);

/// τ(f): e_a ↦ class of f(x_a) x_a^{-1}. InputError unless is_ia(f).
JohnsonValue johnson_tau(const FreeEndomorphism& f);

/// Rank of {τ(g) : g ∈ magnus_generators(n)} inside Hom(H, ∧²H).
std::size_t tau_span_dim(int n);

/// A Hom(H, ∧²H)-valued function on a finite list of endomorphisms.
class Cochain {
 public:
  void set(const FreeEndomorphism& g, JohnsonValue value);
  /// InputError when g is not in the domain.
  const JohnsonValue& at(const FreeEndomorphism& g) const;
  std::size_t size() const { return values_.size(); }

  /// τ on the given list.
  static Cochain johnson(const std::vector<FreeEndomorphism>& domain);

 private:
  std::vector<std::pair<FreeEndomorphism, JohnsonValue>> values_;
};

/// Basis element e_u ⊗ e_v^* ⊗ e_w^* of H^{1,2}, indices 1-based.
using DualIndex = std::array<int, 3>;

/// ⟨c(g), e_u ⊗ e_v^* ⊗ e_w^*⟩: the coefficient of e_w ⊗ e_v in c(g)(e_u),
/// with e_b∧e_c = e_b⊗e_c − e_c⊗e_b.
Rational pairing_eval(const Cochain& c, const FreeEndomorphism& g, const DualIndex& x);
/// Linear extension in x.
Rational pairing_eval(const Cochain& c, const FreeEndomorphism& g, const std::map<DualIndex, Rational>& x);

}  // namespace albanese
