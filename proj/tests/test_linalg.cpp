#include <doctest.h>

#include <random>
#include <sstream>

#include "albanese/exact_linalg.hpp"
#include "albanese/modular.hpp"
#include "albanese/types.hpp"

using namespace albanese;

namespace {

// Rank by fraction-exact Gaussian elimination on dense rationals.
std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct RandomCase {
  std::vector<std::vector<Rational>> dense;
  SparseIntegerMatrix sparse;
  ExactLinearMap map{0, 0};
};

// Low-rank integer matrix built as a product of two thin random factors.
RandomCase random_case(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<std::vector<long>> left(rows, std::vector<long>(inner)), right(inner, std::vector<long>(cols));
  for (auto& row : left)
    for (auto& v : row) v = entry(rng);
  for (auto& row : right)
    for (auto& v : row) v = entry(rng);
  RandomCase out;
  out.dense.assign(rows, std::vector<Rational>(cols, 0));
  out.sparse.rows = rows;
  out.sparse.columns.resize(cols);
  out.map = ExactLinearMap(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) {
      long v = 0;
      for (std::size_t k = 0; k < inner; ++k) v += left[r][k] * right[k][c];
      if (v == 0) continue;
      out.dense[r][c] = v;
      out.sparse.columns[c].emplace_back(r, v);
      out.map.add(r, c, v);
    }
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const std::uint64_t p = large_prime(0);
  CHECK(p < (std::uint64_t{1} << 62));
  CHECK(p > (std::uint64_t{1} << 61));
  CHECK(large_prime(1) < p);
  const PrimeField f(p);
  CHECK(f.reduce(std::int64_t{-1}) == p - 1);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.pow(3, p - 1) == 1);
  CHECK(f.reduce(BigInt("-100000000000000000000000")) == f.neg(f.reduce(BigInt("100000000000000000000000"))));
}

TEST_CASE("CRT and rational reconstruction") {
  const Rational target(-355, 113);
  BigInt residue = 0, modulus = 1;
  for (std::size_t k = 0; k < 2; ++k) {
    const std::uint64_t p = large_prime(k);
    const PrimeField f(p);
    const std::uint64_t r = f.mul(f.reduce(target.get_num()), f.inv(f.reduce(target.get_den())));
    residue = crt_combine(residue, modulus, r, p);
    modulus *= p;
  }
  const auto back = rational_reconstruct(residue, modulus);
  REQUIRE(back.has_value());
  CHECK(*back == target);
}

TEST_CASE("bareiss_rank") {
  CHECK(bareiss_rank({}) == 0);
  CHECK(bareiss_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(bareiss_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == 3);
}

TEST_CASE("ranks and kernels agree with dense rational elimination") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 5 + trial % 7, cols = 4 + (trial * 3) % 9, inner = 1 + trial % 5;
    RandomCase c = random_case(rng, rows, cols, inner);
    const std::size_t expected = rational_rank(c.dense);
    CHECK(c.map.rank() == expected);
    CHECK(modular_rank(c.sparse) == expected);
    const CertifiedKernel k = certified_kernel(c.sparse);
    CHECK(k.rank == expected);
    CHECK(k.dimension() == cols - expected);
    for (const auto& v : k.basis)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational dot = 0;
        for (std::size_t col = 0; col < cols; ++col) dot += c.dense[r][col] * v[col];
        CHECK(dot == 0);
      }
    CHECK(c.map.kernel().size() == cols - expected);
  }
}

TEST_CASE("tall sketched kernels") {
  std::mt19937_64 rng(7);
  RandomCase c = random_case(rng, 300, 12, 5);
  const CertifiedKernel k = certified_kernel(c.sparse);
  CHECK(k.rank == rational_rank(c.dense));
  CHECK(k.dimension() == 12 - k.rank);
  CHECK(c.map.rank() == k.rank);
}

TEST_CASE("rational entries and dump") {
  ExactLinearMap m(2, 2);
  m.add(0, 0, Rational(1, 2));
  m.add(1, 1, Rational(1, 3));
  m.add(0, 1, Rational(1, 6));
  CHECK(m.at(0, 1) == Rational(1, 6));
  CHECK(m.rank() == 2);
  m.add(1, 1, Rational(-1, 3));
  CHECK(m.at(1, 1) == 0);
  CHECK(m.rank() == 1);
  CHECK(m.kernel_dimension() == 1);
  std::ostringstream out;
  m.dump(out);
  CHECK(out.str().find("0 1 1/6") != std::string::npos);
}
