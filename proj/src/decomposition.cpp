#include "albanese/decomposition.hpp"

#include <algorithm>

#include "albanese/schur_calculus.hpp"

namespace albanese {

Decomposition Decomposition::irreducible(const Bipartition& b, const BigInt& multiplicity) {
  Decomposition d;
  d.add(b, multiplicity);
  return d;
}

void Decomposition::add(const Bipartition& b, const BigInt& multiplicity) {
  if (multiplicity == 0) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    if (multiplicity < 0) throw ConsistencyError("negative multiplicity for V[" + b.to_string() + "]");
    terms_.emplace(b, multiplicity);
    return;
  }
  it->second += multiplicity;
  if (it->second < 0) throw ConsistencyError("negative multiplicity for V[" + b.to_string() + "]");
  if (it->second == 0) terms_.erase(it);
}

BigInt Decomposition::multiplicity(const Bipartition& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Decomposition::total_dim_at(int n) const {
  BigInt total = 0;
  for (const auto& [b, m] : terms_) total += m * dim_irrep(b, n);
  return total;
}

int Decomposition::max_length() const {
  int out = 0;
  for (const auto& [b, m] : terms_) out = std::max(out, b.length());
  return out;
}

int Decomposition::max_size() const {
  int out = 0;
  for (const auto& [b, m] : terms_) out = std::max(out, b.covariant.size() + b.contravariant.size());
  return out;
}

Decomposition& Decomposition::operator+=(const Decomposition& other) {
  for (const auto& [b, m] : other.terms_) add(b, m);
  return *this;
}

Decomposition Decomposition::scaled(const BigInt& factor) const {
  if (factor < 0) throw ConsistencyError("decompositions cannot be scaled by a negative factor");
  Decomposition out;
  out.grade = grade;
  out.valid_from = valid_from;
  if (factor == 0) return out;
  for (const auto& [b, m] : terms_) out.terms_.emplace(b, m * factor);
  return out;
}

std::string Decomposition::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, m] : terms_) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.get_str() + " ";
    out += "V[" + b.to_string() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------

DimensionPolynomial::DimensionPolynomial(std::vector<Rational> coefficients, int valid_from_rank)
    : valid_from(valid_from_rank), coefficients_(std::move(coefficients)) {
  trim();
}

void DimensionPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

DimensionPolynomial DimensionPolynomial::interpolate(const std::vector<int>& nodes, const std::vector<BigInt>& values,
                                                     int valid_from_rank) {
  if (nodes.size() != values.size()) throw InputError("interpolate: node/value count mismatch");
  std::vector<Rational> result(nodes.size(), Rational(0));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    // Basis polynomial Π_{j≠k} (T - x_j) / (x_k - x_j), built up coefficient-wise.
    std::vector<Rational> basis{Rational(1)};
    Rational denominator = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        next[c + 1] += basis[c];
        next[c] -= basis[c] * nodes[j];
      }
      basis = std::move(next);
      denominator *= nodes[k] - nodes[j];
      if (nodes[k] == nodes[j]) throw InputError("interpolate: repeated node");
    }
    Rational scale = Rational(values[k]) / denominator;
    for (std::size_t c = 0; c < basis.size(); ++c) result[c] += basis[c] * scale;
  }
  for (auto& c : result) c.canonicalize();
  return DimensionPolynomial(std::move(result), valid_from_rank);
}

Rational DimensionPolynomial::leading_coefficient() const {
  return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational DimensionPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BigInt DimensionPolynomial::evaluate_integer(int n) const {
  Rational value = evaluate(Rational(n));
  if (value.get_den() != 1) throw ConsistencyError("dimension polynomial is not integral at " + std::to_string(n));
  return value.get_num();
}

DimensionPolynomial& DimensionPolynomial::operator+=(const DimensionPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  valid_from = std::max(valid_from, other.valid_from);
  trim();
  return *this;
}

DimensionPolynomial DimensionPolynomial::scaled(const Rational& factor) const {
  std::vector<Rational> out = coefficients_;
  for (auto& c : out) c *= factor;
  return DimensionPolynomial(std::move(out), valid_from);
}

std::string DimensionPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const Rational& c = coefficients_[static_cast<std::size_t>(power)];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (!unit || power == 0) out += magnitude.get_str();
    if (power > 0) {
      if (!unit) out += "*";
      out += "T";
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

DimensionPolynomial polynomial_from_roots(const std::vector<int>& roots, const Rational& scale) {
  std::vector<Rational> coeffs{scale};
  for (int root : roots) {
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      next[c + 1] += coeffs[c];
      next[c] -= coeffs[c] * root;
    }
    coeffs = std::move(next);
  }
  return DimensionPolynomial(std::move(coeffs));
}

}  // namespace albanese
