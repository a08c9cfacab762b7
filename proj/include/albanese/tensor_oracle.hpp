#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "albanese/exact_linalg.hpp"
#include "albanese/types.hpp"

namespace albanese {

enum class Variance : std::uint8_t { Covariant, Contravariant };

/// Variance of each tensor slot, left to right.
using Signature = std::vector<Variance>;

/// p covariant slots followed by q contravariant slots (H^{p,q}).
Signature mixed_signature(int p, int q);
/// Concatenation, for tensor products of mixed tensor spaces.
Signature operator+(Signature a, const Signature& b);

/// Basis index words: one letter in 0..n-1 per slot, encoded base n with the
/// first slot most significant.
using IndexWord = std::vector<int>;

std::uint64_t encode_word(const IndexWord& w, int n);
IndexWord decode_word(std::uint64_t code, int n, std::size_t length);

/// An integer n×n matrix g together with g^{-T}; covariant slots transform by
/// the first and contravariant slots by the second.
struct LinearGenerator {
  std::string name;
  std::vector<std::vector<int>> matrix;
  std::vector<std::vector<int>> inverse_transpose;
};

/// {n-cycle, transposition (1 2), transvection I+E12, diag(-1,1,…,1)}; only
/// the sign change when n = 1.
std::vector<LinearGenerator> gl_generators(int n);

/// ρ(g)e_w as (word code, coefficient) pairs.
std::vector<std::pair<std::uint64_t, std::int64_t>> apply_generator(const LinearGenerator& g, const IndexWord& w,
                                                                    const Signature& signature, int n);

struct ExactTensorRep {
  int n = 0;
  int p = 0;
  int q = 0;
  std::size_t dimension = 0;
  std::vector<std::string> generator_names;
  /// One dimension×dimension action matrix per generator, column j = ρ(g)e_j.
  std::vector<SparseIntegerMatrix> actions;
};

constexpr std::size_t kDefaultCapacity = 20000;
/// Cap on n^{slots} for the orbit-sum and Ω routes, which never store a
/// dense operator on the full space.
constexpr std::size_t kStructuredCapacity = 1000000;

/// H^{p,q} with the GL(n,Z) generator actions. CapacityError when n^{p+q}
/// exceeds the cap.
ExactTensorRep build_rep(int n, int p, int q, std::size_t capacity = kDefaultCapacity);

/// Dimension of the GL(n,Z)-invariants of H^{p,q}, from orbit sums under
/// signed permutations cut down by the transvection.
std::size_t invariant_dim(const ExactTensorRep& rep);
/// Same quantity from the stacked matrices ρ(g) − 1 (small spaces only).
std::size_t invariant_dim_naive(const ExactTensorRep& rep, std::size_t limit = 400);

/// Invariants of a tensor space whose elements are also killed by the given
/// contractions (pairs of a covariant and a contravariant slot).
struct InvariantSolution {
  int n = 0;
  Signature signature;
  /// Orbit representatives: first-occurrence canonical words in which every
  /// letter occurs an even number of times.
  std::vector<IndexWord> orbits;
  /// Kernel in orbit-sum coordinates.
  CertifiedKernel kernel;

  std::size_t dimension() const { return kernel.dimension(); }
};

InvariantSolution solve_invariants(int n, const Signature& signature,
                                   const std::vector<std::pair<int, int>>& contractions,
                                   std::size_t capacity = kStructuredCapacity);

/// Joint kernel of the pq contractions H^{p,q} → H^{p-1,q-1}.
struct TracelessSubspace {
  int n = 0;
  int p = 0;
  int q = 0;
  /// Integer basis vectors as sparse (word code, coefficient) lists.
  std::vector<std::vector<std::pair<std::uint64_t, BigInt>>> basis;

  std::size_t dimension() const { return basis.size(); }
};

TracelessSubspace traceless_subspace(int n, int p, int q, std::size_t capacity = kDefaultCapacity);

/// GL(n,Z)-invariants of T_{p,q} itself.
std::size_t invariant_dim(const TracelessSubspace& t);

/// Ω: Q[S_{p+q}] → H^{p,q} ⊗ H^{q,p}; columns follow std::next_permutation
/// order of σ, rows are word codes of the layout [p cov][q contra][q cov][p contra].
ExactLinearMap omega_matrix(int n, int p, int q);

/// The permutations σ ∈ S_{p+q} (0-based images) whose Ω(σ) pairs the
/// contravariant slots of each factor with covariant slots of the other;
/// they form the S_p×S_q family that survives the traceless projection.
std::vector<std::vector<int>> omega_prime_domain(int p, int q);

struct OmegaReport {
  int n = 0;
  int p = 0;
  int q = 0;
  std::size_t expected = 0;
  std::size_t invariant_dimension = 0;
  std::size_t omega_rank = 0;
  std::size_t omega_prime_rank = 0;
  bool image_invariant = false;

  bool passed() const {
    return image_invariant && invariant_dimension == expected && omega_prime_rank == expected;
  }
};

/// Full check of the Ω′ isomorphism at (n, p, q). InputError when n < p+q.
OmegaReport omega_prime_report(int n, int p, int q);
bool omega_prime_verify(int n, int p, int q);

/// dim [T_{p,q} ⊗ T_{r,s}]^{GL(n,Z)}. InputError when n < max(p+q, r+s).
std::size_t cross_traceless_invariant_dim(int n, int p, int q, int r, int s);

}  // namespace albanese
