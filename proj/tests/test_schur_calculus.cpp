#include <doctest.h>

#include "albanese/combinatorics.hpp"
#include "albanese/schur_calculus.hpp"
#include "albanese/types.hpp"
#include "oracles.hpp"

using namespace albanese;

namespace {

Bipartition bp(const char* text) { return Bipartition::parse(text); }

Decomposition sum(std::initializer_list<std::pair<const char*, int>> terms) {
  Decomposition d;
  for (const auto& [text, m] : terms) d.add(bp(text), m);
  return d;
}

SchurExpansion expansion(std::initializer_list<std::pair<Partition, int>> terms) {
  SchurExpansion out;
  for (const auto& [p, c] : terms) out[p] = c;
  return out;
}

}  // namespace

TEST_CASE("traceless_product follows Littlewood-Richardson on each side") {
  CHECK(traceless_product(sum({{"1|0", 1}}), sum({{"0|1", 1}})) == sum({{"1|1", 1}}));
  CHECK(traceless_product(sum({{"1,1|1", 1}}), sum({{"1|0", 1}})) == sum({{"2,1|1", 1}, {"1,1,1|1", 1}}));
  const Decomposition w = sum({{"1,1|1", 1}, {"1|0", 1}});
  CHECK(traceless_product(w, Decomposition::unit()) == w);
  CHECK(traceless_product(w, Decomposition{}).empty());
  CHECK(traceless_product(sum({{"1|1", 1}}), sum({{"1|1", 1}})) ==
        sum({{"2|2", 1}, {"2|1,1", 1}, {"1,1|2", 1}, {"1,1|1,1", 1}}));
}

TEST_CASE("plethysm_schur frozen values from brute-force monomial expansion") {
  CHECK(plethysm_schur({2}, {1}) == expansion({{{2}, 1}}));
  CHECK(plethysm_schur({1, 1}, {1}) == expansion({{{1, 1}, 1}}));
  CHECK(plethysm_schur({2}, {1, 1}) == expansion({{{2, 2}, 1}, {{1, 1, 1, 1}, 1}}));
  CHECK(plethysm_schur({1, 1}, {1, 1}) == expansion({{{2, 1, 1}, 1}}));
  CHECK(plethysm_schur({2}, {2}) == expansion({{{4}, 1}, {{2, 2}, 1}}));
  CHECK(plethysm_schur({1, 1}, {2}) == expansion({{{3, 1}, 1}}));
  CHECK(plethysm_schur({3}, {2}) == expansion({{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 1}}));
  CHECK(plethysm_schur({2, 1}, {2}) == expansion({{{5, 1}, 1}, {{4, 2}, 1}, {{3, 2, 1}, 1}}));
  CHECK(plethysm_schur({1, 1, 1}, {2}) == expansion({{{4, 1, 1}, 1}, {{3, 3}, 1}}));
  CHECK(plethysm_schur({3}, {1, 1}) == expansion({{{3, 3}, 1}, {{2, 2, 1, 1}, 1}, {{1, 1, 1, 1, 1, 1}, 1}}));
  CHECK(plethysm_schur({2, 1}, {1, 1}) == expansion({{{3, 2, 1}, 1}, {{2, 2, 1, 1}, 1}, {{2, 1, 1, 1, 1}, 1}}));
  CHECK(plethysm_schur({1, 1, 1}, {1, 1}) == expansion({{{3, 1, 1, 1}, 1}, {{2, 2, 2}, 1}}));
  CHECK(plethysm_schur({2}, {3}) == expansion({{{6}, 1}, {{4, 2}, 1}}));
  CHECK(plethysm_schur({1, 1}, {2, 1}) ==
        expansion({{{4, 1, 1}, 1}, {{3, 3}, 1}, {{3, 2, 1}, 1}, {{2, 2, 1, 1}, 1}}));
  CHECK(plethysm_schur({2}, {1, 1, 1}) == expansion({{{2, 2, 2}, 1}, {{2, 1, 1, 1, 1}, 1}}));
}

TEST_CASE("plethysm_schur agrees with explicit polynomial plethysm in few variables") {
  constexpr int vars = 3;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b)
      for (const Partition& outer : partitions_of(a))
        for (const Partition& inner : partitions_of(b)) {
          const auto brute = oracle::schur_expand(oracle::plethysm_poly(outer.parts(), inner.parts(), vars), vars);
          SchurExpansion truncated;
          for (const auto& [nu, c] : plethysm_schur(outer, inner))
            if (nu.length() <= vars) truncated[nu] = c;
          SchurExpansion expected;
          for (const auto& [shape, c] : brute) expected[Partition(shape)] = c;
          CAPTURE(outer.to_string());
          CAPTURE(inner.to_string());
          CHECK(truncated == expected);
        }
}

TEST_CASE("plethysm sizes add up to the inner dimension count") {
  // dim of s_outer[s_inner] at rank n equals dim S_outer(S_inner(C^n)).
  constexpr int n = 6;
  for (const auto& [outer, inner] : std::vector<std::pair<Partition, Partition>>{
           {{2}, {2, 1}}, {{3}, {1, 1}}, {{2, 2}, {2}}, {{4}, {2}}, {{1, 1, 1, 1}, {1, 1}}}) {
    const long inner_dim = oracle::count_ssyt(inner.parts(), n);
    const long expected = oracle::count_ssyt(outer.parts(), static_cast<int>(inner_dim));
    BigInt total = 0;
    for (const auto& [nu, c] : plethysm_schur(outer, inner)) total += c * dim_irrep({nu, {}}, n);
    CHECK(total == expected);
  }
  CHECK_THROWS_AS(plethysm_schur({3, 2}, {3, 2}, PlethysmOptions{.size_cap = 20, .stop = {}}), CapacityError);
}

TEST_CASE("graded_symmetric_power") {
  CHECK(graded_symmetric_power(bp("1|0"), 1, 2) == sum({{"1,1|0", 1}}));
  CHECK(graded_symmetric_power(bp("1,1|1"), 1, 2) == sum({{"2,2|1,1", 1}, {"1,1,1,1|1,1", 1}, {"2,1,1|2", 1}}));
  CHECK(graded_symmetric_power(bp("1,1|0"), 2, 2) == sum({{"2,2|0", 1}, {"1,1,1,1|0", 1}}));
  CHECK(graded_symmetric_power(bp("1,1|1"), 1, 0) == Decomposition::unit());
  CHECK(graded_symmetric_power(bp("1|0"), 1, 3) == sum({{"1,1,1|0", 1}}));
  CHECK(graded_symmetric_power(bp("1|0"), 2, 3) == sum({{"3|0", 1}}));
  CHECK_THROWS_AS(graded_symmetric_power(bp("1|2"), 1, 2), InputError);
}

TEST_CASE("decompose_traceless and decompose_mixed_tensor") {
  CHECK(decompose_traceless(1, 1) == sum({{"1|1", 1}}));
  CHECK(decompose_traceless(2, 1) == sum({{"2|1", 1}, {"1,1|1", 1}}));
  CHECK(decompose_traceless(0, 0) == Decomposition::unit());
  CHECK(decompose_mixed_tensor(1, 1) == sum({{"1|1", 1}, {"0|0", 1}}));
  CHECK(decompose_mixed_tensor(2, 1) == sum({{"2|1", 1}, {"1,1|1", 1}, {"1|0", 2}}));
  CHECK(decompose_mixed_tensor(3, 0) == decompose_traceless(3, 0));
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int n = std::max(p + q, 1); n <= 6; ++n) {
        BigInt expected = 1;
        for (int k = 0; k < p + q; ++k) expected *= n;
        CHECK(decompose_mixed_tensor(p, q).total_dim_at(n) == expected);
      }
}

TEST_CASE("tensor_by_standard") {
  CHECK(tensor_by_standard(sum({{"0|1", 1}})) == sum({{"1|1", 1}, {"0|0", 1}}));
  CHECK(tensor_by_standard(sum({{"1,1|1", 1}})) == sum({{"2,1|1", 1}, {"1,1,1|1", 1}, {"1,1|0", 1}}));
  CHECK(tensor_by_standard(Decomposition::unit()) == sum({{"1|0", 1}}));
  for (const char* text : {"2,1|1", "1,1|2", "2|1,1", "1|1"}) {
    const Decomposition d = sum({{text, 1}});
    for (int n = 5; n <= 6; ++n) CHECK(tensor_by_standard(d).total_dim_at(n) == d.total_dim_at(n) * n);
  }
}

TEST_CASE("dim_irrep agrees with semistandard tableau counts") {
  CHECK(dim_irrep(bp("1|1"), 3) == 8);
  CHECK(dim_irrep(bp("1,1|1"), 3) == 6);
  CHECK(dim_irrep(bp("1,1|1"), 4) == 20);
  CHECK(dim_irrep(bp("1,1,1|1"), 3) == 0);
  CHECK(dim_irrep(bp("0|0"), 0) == 1);
  for (int n = 1; n <= 5; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (const Partition& l : partitions_of(a))
          for (const Partition& m : partitions_of(b))
            CHECK(dim_irrep({l, m}, n) == oracle::mixed_dim(l.parts(), m.parts(), n));
}

TEST_CASE("dim_polynomial and evaluate_at_rank") {
  CHECK(dim_polynomial(sum({{"1|0", 1}})) == DimensionPolynomial({0, 1}));
  CHECK(dim_polynomial(sum({{"1,1|1", 1}, {"1|0", 1}})) == polynomial_from_roots({0, 0, 1}, Rational(1, 2)));
  CHECK(dim_polynomial(Decomposition::unit()) == DimensionPolynomial({1}));
  const Decomposition w1 = sum({{"1,1|1", 1}, {"1|0", 1}});
  CHECK(evaluate_at_rank(w1, 2) == sum({{"1|0", 1}}));
  CHECK(evaluate_at_rank(w1, 3) == w1);
  CHECK(evaluate_at_rank(Decomposition{}, 4).empty());
  const Decomposition t = decompose_mixed_tensor(3, 2);
  const DimensionPolynomial poly = dim_polynomial(t);
  for (int n = t.max_length(); n <= t.max_length() + 4; ++n) CHECK(poly.evaluate_integer(n) == t.total_dim_at(n));
}

TEST_CASE("multiplicity_pairing") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      CHECK(multiplicity_pairing(decompose_traceless(p, q), decompose_traceless(p, q)) == factorial(p) * factorial(q));
  CHECK(multiplicity_pairing(sum({{"1,1|1", 1}, {"1|0", 1}}), decompose_mixed_tensor(2, 1)) == 3);
  CHECK(multiplicity_pairing(decompose_traceless(2, 1), Decomposition{}) == 0);
}
