#include <doctest.h>

#include "albanese/combinatorics.hpp"
#include "albanese/schur_calculus.hpp"
#include "albanese/tensor_oracle.hpp"
#include "albanese/types.hpp"

using namespace albanese;

namespace {

// Σ (dim S^λ)² over λ ⊢ p with at most n rows.
BigInt commutant_dim(int p, int n) {
  BigInt total = 0;
  for (const Partition& l : partitions_of(p, n)) total += specht_dim(l) * specht_dim(l);
  return total;
}

}  // namespace

TEST_CASE("word encoding round trip") {
  const IndexWord w{2, 0, 1, 2};
  CHECK(decode_word(encode_word(w, 3), 3, 4) == w);
  CHECK(encode_word({1, 0}, 2) == 2);
}

TEST_CASE("generators are unimodular and act consistently") {
  for (int n = 1; n <= 4; ++n)
    for (const LinearGenerator& g : gl_generators(n)) {
      // matrix · inverse_transposeᵀ = identity
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int v = 0;
          for (int k = 0; k < n; ++k) v += g.matrix[i][k] * g.inverse_transpose[j][k];
          CHECK(v == (i == j ? 1 : 0));
        }
    }
  CHECK(gl_generators(1).size() == 1);
  // The trace tensor Σ e_i ⊗ e_i^* is fixed by every generator.
  for (int n = 2; n <= 3; ++n) {
    const Signature sig = mixed_signature(1, 1);
    for (const LinearGenerator& g : gl_generators(n)) {
      std::map<std::uint64_t, std::int64_t> image;
      for (int i = 0; i < n; ++i)
        for (const auto& [code, c] : apply_generator(g, {i, i}, sig, n)) image[code] += c;
      std::erase_if(image, [](const auto& kv) { return kv.second == 0; });
      std::map<std::uint64_t, std::int64_t> trace;
      for (int i = 0; i < n; ++i) trace[encode_word({i, i}, n)] = 1;
      CHECK(image == trace);
    }
  }
}

TEST_CASE("build_rep") {
  CHECK(build_rep(2, 1, 0).dimension == 2);
  CHECK(build_rep(3, 2, 1).dimension == 27);
  CHECK_THROWS_AS(build_rep(4, 4, 4, 1000), CapacityError);
}

TEST_CASE("invariant dimensions") {
  CHECK(invariant_dim(build_rep(2, 1, 1)) == 1);
  CHECK(invariant_dim(build_rep(2, 1, 0)) == 0);
  CHECK(invariant_dim(build_rep(2, 2, 2)) == 2);
  CHECK(invariant_dim(build_rep(3, 2, 0)) == 0);
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 3; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(invariant_dim(build_rep(n, p, p)) == commutant_dim(p, n));
    }
}

TEST_CASE("structured and naive invariant routes agree") {
  for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 1}, {1, 2, 0}, {2, 1, 1}, {2, 2, 0}, {2, 2, 2}, {2, 3, 1}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {2, 2, 1}}) {
    const ExactTensorRep rep = build_rep(n, p, q);
    CAPTURE(n);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(invariant_dim(rep) == invariant_dim_naive(rep, 100));
  }
}

TEST_CASE("traceless subspace") {
  CHECK(traceless_subspace(3, 1, 1).dimension() == 8);
  CHECK(traceless_subspace(3, 2, 1).dimension() == 21);
  CHECK(traceless_subspace(3, 2, 0).dimension() == 9);
  for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {3, 2, 1}, {3, 1, 2}, {4, 2, 2}, {2, 2, 2}, {3, 3, 1}}) {
    CAPTURE(n);
    CAPTURE(p);
    CAPTURE(q);
    const TracelessSubspace t = traceless_subspace(n, p, q);
    if (n >= p + q) CHECK(BigInt(t.dimension()) == decompose_traceless(p, q).total_dim_at(n));
    if (p != q) CHECK(invariant_dim(t) == 0);
  }
  CHECK(invariant_dim(traceless_subspace(3, 1, 1)) == 0);
  CHECK(invariant_dim(traceless_subspace(4, 2, 2)) == 0);
}

TEST_CASE("omega map") {
  CHECK(omega_matrix(2, 1, 1).rank() == 2);
  CHECK(omega_prime_domain(2, 1).size() == 2);
  CHECK(omega_prime_domain(2, 2).size() == 4);
  for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {3, 2, 1}, {4, 2, 2}}) {
    const OmegaReport r = omega_prime_report(n, p, q);
    const std::size_t expected = factorial(p).get_ui() * factorial(q).get_ui();
    CHECK(r.expected == expected);
    CHECK(r.invariant_dimension == expected);
    CHECK(r.omega_prime_rank == expected);
    CHECK(r.image_invariant);
    CHECK(omega_prime_verify(n, p, q));
  }
  CHECK_THROWS_AS(omega_prime_verify(2, 2, 1), InputError);
}

TEST_CASE("cross traceless invariants") {
  CHECK(cross_traceless_invariant_dim(3, 1, 0, 0, 1) == 1);
  CHECK(cross_traceless_invariant_dim(3, 1, 0, 1, 0) == 0);
  CHECK(cross_traceless_invariant_dim(4, 2, 1, 1, 2) == 2);
  CHECK(cross_traceless_invariant_dim(3, 1, 1, 1, 1) == 1);
  CHECK(cross_traceless_invariant_dim(3, 2, 1, 0, 1) == 0);
  CHECK(cross_traceless_invariant_dim(4, 2, 2, 0, 0) == 0);
  CHECK_THROWS_AS(cross_traceless_invariant_dim(2, 2, 1, 0, 0), InputError);
}
