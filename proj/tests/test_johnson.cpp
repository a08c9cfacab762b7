#include <doctest.h>

#include <random>

#include "albanese/johnson.hpp"
#include "albanese/types.hpp"

using namespace albanese;

namespace {

// Degree ≤ 2 truncation of the Magnus expansion x_i ↦ 1 + X_i.
struct Magnus {
  std::vector<long> linear;
  std::vector<std::vector<long>> quadratic;
  explicit Magnus(int n) : linear(n + 1, 0), quadratic(n + 1, std::vector<long>(n + 1, 0)) {}
};

Magnus magnus(const FreeWord& w) {
  const int n = w.rank();
  Magnus acc(n);
  for (int letter : w.letters()) {
    const int i = std::abs(letter);
    Magnus factor(n);
    factor.linear[i] = letter > 0 ? 1 : -1;
    factor.quadratic[i][i] = letter > 0 ? 0 : 1;
    Magnus next(n);
    for (int a = 1; a <= n; ++a) {
      next.linear[a] = acc.linear[a] + factor.linear[a];
      for (int b = 1; b <= n; ++b)
        next.quadratic[a][b] = acc.quadratic[a][b] + factor.quadratic[a][b] + acc.linear[a] * factor.linear[b];
    }
    acc = next;
  }
  return acc;
}

FreeEndomorphism k2(int a, int b, int n) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k) {
    const FreeWord x = FreeWord::generator(k, n);
    images.push_back(k == a ? FreeWord::generator(b, n) * x * FreeWord::generator(b, n).inverse() : x);
  }
  return FreeEndomorphism(images, true);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce_word({1, -1}, 3).empty());
  CHECK(reduce_word({2, 1, -1, 2}, 3).letters() == std::vector<int>{2, 2});
  CHECK(reduce_word({1, 2, -3}, 3).letters() == std::vector<int>{1, 2, -3});
  CHECK_THROWS_AS(reduce_word({4}, 3), InputError);
  CHECK(FreeWord::parse("x1 x2^-1 x2 x3^2", 3).to_string() == "x1 x3 x3");
  CHECK(FreeWord::parse("1", 3).empty());
  CHECK(FreeWord{}.to_string() == "1");
  const FreeWord w = FreeWord::parse("x1 x2 x3^-1", 3);
  CHECK((w * w.inverse()).empty());
}

TEST_CASE("endomorphisms") {
  const FreeWord x1 = FreeWord::generator(1, 3);
  CHECK(apply_endo(FreeEndomorphism::identity(3), FreeWord::parse("x1 x2^-1", 3)) == FreeWord::parse("x1 x2^-1", 3));
  CHECK(apply_endo(k2(1, 2, 3), x1) == FreeWord::parse("x2 x1 x2^-1", 3));
  CHECK(is_ia(k2(1, 2, 3)));
  CHECK(is_ia(FreeEndomorphism::identity(3)));
  const FreeEndomorphism transvection = FreeEndomorphism::from_json(R"({"x1": "x1 x2"})", 3);
  CHECK_FALSE(is_ia(transvection));
  CHECK(transvection.abelianization()[1][0] == 1);
  CHECK_THROWS_AS(FreeEndomorphism::from_json(R"({"x1": "x1 x1"})", 3), InputError);
  CHECK_THROWS_AS(FreeEndomorphism::from_json("{not json", 3), InputError);
  CHECK_THROWS_AS(apply_endo(k2(1, 2, 3), FreeWord::generator(1, 4)), InputError);
  const FreeEndomorphism f = k2(1, 2, 3), g = k2(2, 3, 3);
  for (int a = 1; a <= 3; ++a)
    CHECK(apply_endo(compose(f, g), FreeWord::generator(a, 3)) == apply_endo(f, apply_endo(g, FreeWord::generator(a, 3))));
}

TEST_CASE("magnus generators") {
  CHECK(magnus_generators(3).size() == 9);
  CHECK(magnus_generators(4).size() == 24);
  CHECK_THROWS_AS(magnus_generators(2), InputError);
  for (const auto& g : magnus_generators(4)) CHECK(is_ia(g));
}

TEST_CASE("wedge class agrees with the Magnus expansion") {
  std::mt19937 rng(11);
  constexpr int n = 4;
  std::uniform_int_distribution<int> pick(1, n), sign(0, 1), len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    // A product of random commutators of random words.
    FreeWord w({}, n);
    for (int k = 0; k < 3; ++k) {
      std::vector<int> u, v;
      for (int i = len(rng); i > 0; --i) u.push_back(sign(rng) ? pick(rng) : -pick(rng));
      for (int i = len(rng); i > 0; --i) v.push_back(sign(rng) ? pick(rng) : -pick(rng));
      const FreeWord a(u, n), b(v, n);
      w = w * a * b * a.inverse() * b.inverse();
    }
    const Magnus m = magnus(w);
    const auto cls = wedge_class(w);
    for (int b = 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const auto it = cls.find({b, c});
        const long got = it == cls.end() ? 0 : it->second.get_si();
        CHECK(got == m.quadratic[b][c]);
        CHECK(m.quadratic[b][c] == -m.quadratic[c][b]);
      }
  }
  CHECK_THROWS_AS(wedge_class(FreeWord::generator(1, 3)), InputError);
}

TEST_CASE("johnson homomorphism") {
  const JohnsonValue t = johnson_tau(k2(1, 2, 3));
  CHECK(t.coefficient(1, 1, 2) == -1);
  CHECK(t.coefficient(1, 2, 1) == 1);
  CHECK(t.to_string() == "e1 -> -e1^e2; e2 -> 0; e3 -> 0");
  CHECK(johnson_tau(FreeEndomorphism::identity(3)).is_zero());
  CHECK_THROWS_AS(johnson_tau(FreeEndomorphism::from_json(R"({"x1": "x1 x2"})", 3)), InputError);
  const auto gens = magnus_generators(3);
  for (const auto& f : gens)
    for (const auto& g : gens) CHECK(johnson_tau(compose(f, g)) == johnson_tau(f) + johnson_tau(g));
  CHECK(tau_span_dim(3) == 9);
  CHECK(tau_span_dim(4) == 24);
}

TEST_CASE("pairing evaluation") {
  const FreeEndomorphism g = k2(1, 2, 3);
  const FreeEndomorphism id = FreeEndomorphism::identity(3);
  const Cochain c = Cochain::johnson({g, id});
  CHECK(c.size() == 2);
  CHECK(pairing_eval(c, g, DualIndex{1, 2, 1}) == -1);
  CHECK(pairing_eval(c, g, DualIndex{1, 1, 2}) == 1);
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v)
      for (int w = 1; w <= 3; ++w) CHECK(pairing_eval(c, id, DualIndex{u, v, w}) == 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-9, 9), idx(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<DualIndex, Rational> x, y;
    for (int k = 0; k < 4; ++k) {
      x[{idx(rng), idx(rng), idx(rng)}] += Rational(coeff(rng), 1 + trial % 4);
      y[{idx(rng), idx(rng), idx(rng)}] += coeff(rng);
    }
    std::map<DualIndex, Rational> combined = x;
    for (const auto& [k, v] : y) combined[k] += 3 * v;
    CHECK(pairing_eval(c, g, combined) == pairing_eval(c, g, x) + 3 * pairing_eval(c, g, y));
  }
  CHECK_THROWS_AS(pairing_eval(c, k2(2, 1, 3), DualIndex{1, 2, 1}), InputError);
  CHECK_THROWS_AS(pairing_eval(c, g, DualIndex{4, 1, 1}), InputError);
}
