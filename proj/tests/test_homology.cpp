#include <doctest.h>

#include "albanese/combinatorics.hpp"
#include "albanese/homology.hpp"
#include "albanese/schur_calculus.hpp"
#include "albanese/types.hpp"
#include "oracles.hpp"

using namespace albanese;

namespace {

Decomposition sum(std::initializer_list<std::pair<const char*, int>> terms) {
  Decomposition d;
  for (const auto& [text, m] : terms) d.add(Bipartition::parse(text), m);
  return d;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(generator_u(1) == sum({{"1,1|1", 1}, {"1|0", 1}}));
  CHECK(generator_u(2) == sum({{"1,1,1|1", 1}, {"1,1|0", 1}}));
  CHECK(generator_u_out(1) == sum({{"1,1|1", 1}}));
  CHECK(generator_u_out(2) == generator_u(2));
  CHECK(generator_u_out(1).total_dim_at(3) == 6);
  CHECK_THROWS_AS(generator_u(0), InputError);
  CHECK_THROWS_AS(generator_u_out(0), InputError);
  for (int i = 1; i <= 4; ++i)
    for (int n = i + 2; n <= 8; ++n) CHECK(generator_u(i).total_dim_at(n) == n * binomial(n, i + 1));
}

TEST_CASE("generator multisets") {
  CHECK(generator_multisets(1, Variant::Full).size() == 2);
  CHECK(generator_multisets(1, Variant::Outer).size() == 1);
  CHECK(generator_multisets(2, Variant::Full).size() == 5);
  for (const auto& m : generator_multisets(3, Variant::Full)) CHECK(m.total_degree() == 3);
  CHECK(parse_variant("outer") == Variant::Outer);
  CHECK_THROWS_AS(parse_variant("inner"), InputError);
}

TEST_CASE("albanese_w low degrees") {
  CHECK(albanese_w(0) == Decomposition::unit());
  CHECK(albanese_w(1) == sum({{"1,1|1", 1}, {"1|0", 1}}));
  CHECK(albanese_w(1, Variant::Outer) == sum({{"1,1|1", 1}}));
  CHECK(albanese_w(2) == sum({{"1,1,1|1", 2},
                              {"1,1|0", 2},
                              {"2,1|1", 1},
                              {"2,2|1,1", 1},
                              {"1,1,1,1|1,1", 1},
                              {"2,1,1|2", 1}}));
}

TEST_CASE("constituent support stays within the bounds") {
  using Pairs = std::vector<std::pair<int, int>>;
  auto sorted = [](Pairs v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(constituent_support(1)) == Pairs{{1, 0}, {2, 1}});
  CHECK(sorted(constituent_support(2)) == Pairs{{2, 0}, {3, 1}, {4, 2}});
  for (int i = 1; i <= 4; ++i)
    for (const auto& [a, b] : constituent_support(i)) {
      CHECK(a - b == i);
      CHECK(i <= a);
      CHECK(a <= 2 * i);
      CHECK(b <= i);
    }
}

TEST_CASE("structure-count identity against brute-force forests") {
  for (int i = 1; i <= 4; ++i) {
    std::map<std::pair<int, int>, BigInt> totals;
    const Decomposition w = albanese_w(i);
    for (const auto& [b, m] : w.terms())
      totals[{b.covariant.size(), b.contravariant.size()}] += m * specht_dim(b.covariant) * specht_dim(b.contravariant);
    for (int b = 0; b <= i; ++b) {
      const int a = b + i;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(totals[{a, b}] == oracle::count_forests(a, b));
    }
  }
}

TEST_CASE("IO splitting") {
  for (int i = 1; i <= 4; ++i) CHECK(verify_io_splitting(i));
  CHECK(albanese_w(1) == albanese_w(1, Variant::Outer) + tensor_by_standard(albanese_w(0, Variant::Outer)));
}

TEST_CASE("dimension polynomials") {
  CHECK(albanese_dim_polynomial(1) == polynomial_from_roots({0, 0, 1}, Rational(1, 2)));
  CHECK(albanese_dim_polynomial(1, Variant::Outer) == polynomial_from_roots({0, -1, 2}, Rational(1, 2)));
  for (int i = 1; i <= 3; ++i) {
    const DimensionPolynomial full = albanese_dim_polynomial(i);
    const DimensionPolynomial outer = albanese_dim_polynomial(i, Variant::Outer);
    CHECK(full.degree() == 3 * i);
    CHECK(outer.degree() == 3 * i);
    CHECK(full.valid_from == 3 * i);
    for (int n = 3 * i; n <= 3 * i + 3; ++n) {
      CHECK(full.evaluate_integer(n) == albanese_w(i).total_dim_at(n));
      CHECK(outer.evaluate_integer(n) == albanese_w(i, Variant::Outer).total_dim_at(n));
    }
  }
  for (int n = 3; n <= 8; ++n) CHECK(albanese_dim_polynomial(1).evaluate_integer(n) == n * n * (n - 1) / 2);
}

TEST_CASE("conjectural cohomology dimension") {
  CHECK(tautological_monomials(0) == 1);
  CHECK(tautological_monomials(3) == 0);
  CHECK(tautological_monomials(4) == 1);
  CHECK(tautological_monomials(8) == 2);
  CHECK(tautological_monomials(12) == 3);
  CHECK(conjectural_cohomology_dim(0).polynomial == DimensionPolynomial({1}));
  for (int i = 1; i <= 3; ++i) CHECK(conjectural_cohomology_dim(i).polynomial == albanese_dim_polynomial(i));
  DimensionPolynomial expected = albanese_dim_polynomial(4);
  expected += DimensionPolynomial({1});
  const ConjecturalDimension c4 = conjectural_cohomology_dim(4);
  CHECK(c4.polynomial == expected);
  CHECK(c4.conjectural);
  CHECK_FALSE(c4.hypothesis.empty());
}

TEST_CASE("primitive part") {
  CHECK(primitive_part(1) == generator_u(1));
  CHECK(primitive_part(2) == sum({{"1,1,1|1", 1}, {"1,1|0", 1}}));
  CHECK(primitive_part(3) == generator_u(3));
}
