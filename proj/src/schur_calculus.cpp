#include "albanese/schur_calculus.hpp"

#include <algorithm>

#include "albanese/combinatorics.hpp"
#include "albanese/memo.hpp"

namespace albanese {

namespace {

using PowerSumPoly = std::map<Partition, Rational>;

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

Partition scale_parts(const Partition& a, int factor) {
  std::vector<int> parts = a.parts();
  for (int& p : parts) p *= factor;
  return Partition(std::move(parts));
}

PowerSumPoly multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
  PowerSumPoly out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[merge_parts(pa, pb)] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ.
PowerSumPoly schur_to_power_sums(const Partition& lambda) {
  PowerSumPoly out;
  for (const Partition& rho : partitions_of(lambda.size())) {
    BigInt chi = symmetric_group_character(lambda, rho);
    if (chi != 0) out[rho] = Rational(chi, centralizer_size(rho));
  }
  for (auto& [rho, c] : out) c.canonicalize();
  return out;
}

void check_stop(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Cancelled();
}

SchurExpansion plethysm_uncached(const Partition& outer, const Partition& inner, const std::stop_token& stop) {
  const PowerSumPoly inner_p = schur_to_power_sums(inner);
  const int k = outer.size();
  // p_r ∘ s_inner, for every part size r that can occur in ρ ⊢ |outer|.
  std::vector<PowerSumPoly> composed(static_cast<std::size_t>(k) + 1);
  for (int r = 1; r <= k; ++r) {
    for (const auto& [sigma, c] : inner_p) composed[static_cast<std::size_t>(r)][scale_parts(sigma, r)] += c;
  }

  PowerSumPoly total;
  for (const Partition& rho : partitions_of(k)) {
    check_stop(stop);
    BigInt chi = symmetric_group_character(outer, rho);
    if (chi == 0) continue;
    PowerSumPoly term{{Partition(), Rational(chi, centralizer_size(rho))}};
    term.begin()->second.canonicalize();
    for (int r : rho.parts()) term = multiply(term, composed[static_cast<std::size_t>(r)]);
    for (const auto& [tau, c] : term) total[tau] += c;
  }

  SchurExpansion out;
  const int n = k * inner.size();
  for (const Partition& kappa : partitions_of(n)) {
    check_stop(stop);
    Rational coefficient = 0;
    for (const auto& [tau, c] : total) {
      if (c == 0) continue;
      coefficient += c * symmetric_group_character(kappa, tau);
    }
    coefficient.canonicalize();
    if (coefficient == 0) continue;
    if (coefficient.get_den() != 1 || coefficient < 0) {
      throw ConsistencyError("plethysm s_" + outer.to_string() + "[s_" + inner.to_string() +
                             "] produced a non-integral or negative Schur coefficient");
    }
    out.emplace(kappa, coefficient.get_num());
  }
  return out;
}

MemoTable<std::pair<Partition, Partition>, SchurExpansion>& plethysm_memo() {
  static MemoTable<std::pair<Partition, Partition>, SchurExpansion> table;
  return table;
}

using LrExpansion = std::map<Partition, BigInt, std::greater<>>;

MemoTable<std::pair<Partition, Partition>, LrExpansion>& lr_product_memo() {
  static MemoTable<std::pair<Partition, Partition>, LrExpansion> table;
  return table;
}

/// s_λ · s_ξ in the Schur basis.
LrExpansion lr_product(const Partition& lambda, const Partition& xi) {
  return lr_product_memo().get_or_compute({lambda, xi}, [&] {
    LrExpansion out;
    const int n = lambda.size() + xi.size();
    for (const Partition& nu : partitions_of(n, lambda.length() + xi.length())) {
      if (!nu.contains(lambda) || !nu.contains(xi)) continue;
      BigInt c = lr_coefficient(lambda, xi, nu);
      if (c != 0) out.emplace(nu, c);
    }
    return out;
  });
}

}  // namespace

Decomposition traceless_product(const Decomposition& a, const Decomposition& b) {
  Decomposition out;
  for (const auto& [left, m1] : a.terms()) {
    for (const auto& [right, m2] : b.terms()) {
      const BigInt weight = m1 * m2;
      const LrExpansion cov = lr_product(left.covariant, right.covariant);
      const LrExpansion contra = lr_product(left.contravariant, right.contravariant);
      for (const auto& [nu, c1] : cov)
        for (const auto& [kappa, c2] : contra) out.add({nu, kappa}, weight * c1 * c2);
    }
  }
  if (a.grade && b.grade) out.grade = *a.grade + *b.grade;
  return out;
}

SchurExpansion plethysm_schur(const Partition& outer, const Partition& inner, const PlethysmOptions& options) {
  if (outer.size() * inner.size() > options.size_cap) {
    throw CapacityError("plethysm size " + std::to_string(outer.size() * inner.size()) + " exceeds cap " +
                        std::to_string(options.size_cap));
  }
  if (auto hit = plethysm_memo().find({outer, inner})) return *hit;
  return plethysm_memo().insert({outer, inner}, plethysm_uncached(outer, inner, options.stop));
}

Decomposition graded_symmetric_power(const Bipartition& generator, int degree, int k, const PlethysmOptions& options) {
  if (k < 0) throw InputError("graded_symmetric_power: k must be nonnegative");
  if (generator.contravariant.size() > 1) {
    throw InputError("graded_symmetric_power: generator V[" + generator.to_string() +
                     "] has more than one contravariant box");
  }
  Decomposition out;
  out.grade = degree * k;
  if (k == 0) {
    out.add({}, 1);
    return out;
  }
  // h_k[f g] = Σ_ν s_ν[f] s_ν[g] and e_k[f g] = Σ_ν s_ν[f] s_ν'[g].
  const bool odd = degree % 2 != 0;
  for (const Partition& nu : partitions_of(k)) {
    if (options.stop.stop_requested()) throw Cancelled();
    const SchurExpansion cov = plethysm_schur(nu, generator.covariant, options);
    if (cov.empty()) continue;
    const SchurExpansion contra = plethysm_schur(odd ? nu.conjugate() : nu, generator.contravariant, options);
    for (const auto& [alpha, c1] : cov)
      for (const auto& [beta, c2] : contra) out.add({alpha, beta}, c1 * c2);
  }
  return out;
}

Decomposition decompose_traceless(int p, int q) {
  if (p < 0 || q < 0) throw InputError("decompose_traceless: p and q must be nonnegative");
  Decomposition out;
  for (const Partition& lambda : partitions_of(p)) {
    const BigInt dl = specht_dim(lambda);
    for (const Partition& mu : partitions_of(q)) out.add({lambda, mu}, dl * specht_dim(mu));
  }
  return out;
}

Decomposition decompose_mixed_tensor(int p, int q) {
  if (p < 0 || q < 0) throw InputError("decompose_mixed_tensor: p and q must be nonnegative");
  Decomposition out;
  for (int c = 0; c <= std::min(p, q); ++c) {
    const BigInt outer = binomial(p, c) * binomial(q, c) * factorial(c);
    out += decompose_traceless(p - c, q - c).scaled(outer);
  }
  return out;
}

Decomposition tensor_by_standard(const Decomposition& d) {
  Decomposition out;
  for (const auto& [b, m] : d.terms()) {
    for (const Partition& grown : b.covariant.add_box()) out.add({grown, b.contravariant}, m);
    for (const Partition& shrunk : b.contravariant.remove_box()) out.add({b.covariant, shrunk}, m);
  }
  return out;
}

BigInt dim_irrep(const Bipartition& b, int n) {
  if (n < 0) throw InputError("dim_irrep: n must be nonnegative");
  if (b.length() > n) return 0;
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < b.covariant.length(); ++i) weight[static_cast<std::size_t>(i)] = b.covariant[static_cast<std::size_t>(i)];
  for (int i = 0; i < b.contravariant.length(); ++i)
    weight[static_cast<std::size_t>(n - 1 - i)] = -b.contravariant[static_cast<std::size_t>(i)];
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      numerator *= weight[static_cast<std::size_t>(i)] - weight[static_cast<std::size_t>(j)] + j - i;
      denominator *= j - i;
    }
  }
  BigInt out = numerator / denominator;
  if (out * denominator != numerator) throw ConsistencyError("Weyl dimension is not integral");
  return out;
}

DimensionPolynomial dim_polynomial(const Decomposition& d) {
  const int threshold = d.max_length();
  const int degree = d.max_size();
  std::vector<int> nodes;
  std::vector<BigInt> values;
  for (int n = threshold; n <= threshold + degree; ++n) {
    nodes.push_back(n);
    values.push_back(d.total_dim_at(n));
  }
  return DimensionPolynomial::interpolate(nodes, values, threshold);
}

Decomposition evaluate_at_rank(const Decomposition& d, int n) {
  Decomposition out;
  out.grade = d.grade;
  out.valid_from = d.valid_from;
  for (const auto& [b, m] : d.terms())
    if (b.length() <= n) out.add(b, m);
  return out;
}

BigInt multiplicity_pairing(const Decomposition& a, const Decomposition& b) {
  BigInt total = 0;
  for (const auto& [bp, m] : a.terms()) total += m * b.multiplicity(bp);
  return total;
}

}  // namespace albanese
