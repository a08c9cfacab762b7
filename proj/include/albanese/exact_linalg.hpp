#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "albanese/types.hpp"

namespace albanese {

/// Column-major sparse integer matrix; each column is sorted by row and holds
/// no explicit zeros.
struct SparseIntegerMatrix {
  using Column = std::vector<std::pair<std::size_t, std::int64_t>>;

  std::size_t rows = 0;
  std::vector<Column> columns;

  std::size_t cols() const { return columns.size(); }
  std::size_t nonzeros() const;
  /// Builds a column from an unsorted accumulator, dropping zeros.
  static Column make_column(const std::map<std::size_t, std::int64_t>& entries);
};

/// Kernel of an integer matrix, certified by exact multiplication: every
/// basis vector satisfies M·x = 0 over Z, and the count equals cols − rank.
struct CertifiedKernel {
  std::size_t rank = 0;
  /// Primitive integer vectors in echelon form (identity on the free columns).
  std::vector<std::vector<BigInt>> basis;
  int primes_used = 0;
  int attempts = 0;

  std::size_t dimension() const { return basis.size(); }
};

/// Kernel by random sparse sketching modulo 62-bit primes, CRT and rational
/// reconstruction, then an exact check. Throws ConsistencyError if no
/// certificate is found.
CertifiedKernel certified_kernel(const SparseIntegerMatrix& m);

/// Fraction-free Gaussian elimination.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> rows);

/// Rank modulo independent primes; two must agree on the maximum, a third is
/// consulted on disagreement, otherwise ConsistencyError.
std::size_t modular_rank(const SparseIntegerMatrix& m);

/// Exact rational matrix with sparse storage.
class ExactLinearMap {
 public:
  /// Matrices whose larger side is at most this use Bareiss; larger ones use
  /// modular rank.
  static constexpr std::size_t kBareissLimit = 200;

  ExactLinearMap(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, Rational>& column(std::size_t col) const { return columns_.at(col); }

  std::size_t rank() const;
  std::size_t kernel_dimension() const { return cols() - rank(); }
  /// Certified kernel basis as integer vectors.
  std::vector<std::vector<BigInt>> kernel() const;

  /// One "row col numerator/denominator" line per nonzero entry, column-major.
  void dump(std::ostream& out) const;

 private:
  /// Clears denominators row by row, which preserves rank and kernel.
  std::vector<std::vector<BigInt>> dense_integer_rows() const;
  SparseIntegerMatrix integer_rows_scaled() const;

  std::size_t rows_;
  std::vector<std::map<std::size_t, Rational>> columns_;
};

}  // namespace albanese
