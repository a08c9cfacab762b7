#pragma once

#include <map>
#include <stop_token>

#include "albanese/decomposition.hpp"
#include "albanese/partition.hpp"
#include "albanese/types.hpp"

namespace albanese {

/// Schur expansion of a symmetric function: partition -> coefficient.
using SchurExpansion = std::map<Partition, BigInt, std::greater<>>;

struct PlethysmOptions {
  /// Largest allowed |outer|·|inner|.
  int size_cap = 20;
  /// Checked between partitions; a stop request raises Cancelled.
  std::stop_token stop;
};

/// Traceless tensor product, extended bilinearly:
/// V_{λ,μ} ⊗̃ V_{ξ,η} = ⊕ V_{ν,κ}^{c^ν_{λξ} c^κ_{μη}}.
Decomposition traceless_product(const Decomposition& a, const Decomposition& b);

/// Exact s_outer[s_inner] through the power-sum basis. Throws CapacityError
/// when |outer|·|inner| exceeds the cap.
SchurExpansion plethysm_schur(const Partition& outer, const Partition& inner, const PlethysmOptions& options = {});

/// k-th graded-symmetric power of one generator V_{λ,μ} sitting in the given
/// homological degree: symmetric power for even degree, exterior power for odd.
/// Only generators with |μ| ≤ 1 are supported (InputError otherwise).
Decomposition graded_symmetric_power(const Bipartition& generator, int degree, int k,
                                     const PlethysmOptions& options = {});

/// T_{p,q} ≅ ⊕_{λ⊢p, μ⊢q} V_{λ,μ}^{dim S^λ · dim S^μ}.
Decomposition decompose_traceless(int p, int q);

/// H^{p,q} ≅ ⊕_c T_{p-c,q-c}^{C(p,c) C(q,c) c!}.
Decomposition decompose_mixed_tensor(int p, int q);

/// Full (contracting) tensor product with the standard representation H.
Decomposition tensor_by_standard(const Decomposition& d);

/// Weyl dimension of V_{λ,μ} at rank n; 0 when l(λ)+l(μ) > n.
BigInt dim_irrep(const Bipartition& b, int n);

/// The polynomial P with P(n) = total_dim_at(n) for n ≥ max l(λ)+l(μ),
/// interpolated at nodes threshold, …, threshold + max(|λ|+|μ|).
DimensionPolynomial dim_polynomial(const Decomposition& d);

/// Drops every term with l(λ)+l(μ) > n.
Decomposition evaluate_at_rank(const Decomposition& d, int n);

/// Σ_b mult_a(b)·mult_b(b): dimension of the stable invariants of a^* ⊗ b.
BigInt multiplicity_pairing(const Decomposition& a, const Decomposition& b);

}  // namespace albanese
