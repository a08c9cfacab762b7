#pragma once

#include "albanese/partition.hpp"
#include "albanese/types.hpp"

namespace albanese {

/// Number of standard Young tableaux of shape λ (hook length formula).
BigInt specht_dim(const Partition& lambda);

/// Littlewood–Richardson coefficient c^ν_{λξ}, counted by LR tableaux of
/// shape ν/λ and content ξ. Memoized.
BigInt lr_coefficient(const Partition& lambda, const Partition& xi, const Partition& nu);

/// Irreducible character χ^λ at cycle type ρ (Murnaghan–Nakayama).
/// Throws InputError when |λ| != |ρ|. Memoized.
BigInt symmetric_group_character(const Partition& lambda, const Partition& rho);

/// Size of the centralizer of a permutation of cycle type ρ: Π i^{m_i} m_i!.
BigInt centralizer_size(const Partition& rho);

BigInt factorial(int k);
BigInt binomial(int n, int k);

}  // namespace albanese
