#include "albanese/exact_linalg.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "albanese/modular.hpp"

namespace albanese {

std::size_t SparseIntegerMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const Column& c : columns) total += c.size();
  return total;
}

SparseIntegerMatrix::Column SparseIntegerMatrix::make_column(const std::map<std::size_t, std::int64_t>& entries) {
  Column out;
  out.reserve(entries.size());
  for (const auto& [row, v] : entries)
    if (v != 0) out.emplace_back(row, v);
  return out;
}

namespace {

struct Sketch {
  /// For each source row, the (target row, coefficient) pairs it feeds.
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> targets;
  std::size_t height = 0;
};

/// Identity when the matrix is already short; otherwise each row is added,
/// with a random coefficient, into `fan_out` random rows of a (cols+8)-row
/// sketch. The coefficients are integers, so the sketch is the same integer
/// matrix modulo every prime.
Sketch make_sketch(const SparseIntegerMatrix& m, int fan_out, std::uint64_t seed) {
  Sketch s;
  s.targets.resize(m.rows);
  const std::size_t width = m.cols() + 8;
  if (m.rows <= width) {
    s.height = m.rows;
    for (std::size_t r = 0; r < m.rows; ++r) s.targets[r] = {{r, 1}};
    return s;
  }
  s.height = width;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> bucket(0, width - 1);
  std::uniform_int_distribution<std::uint64_t> coefficient(1, 1U << 20);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (int k = 0; k < fan_out; ++k) s.targets[r].emplace_back(bucket(rng), coefficient(rng));
  return s;
}

struct DenseModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> data;
  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

DenseModMatrix apply_sketch(const SparseIntegerMatrix& m, const Sketch& s, const PrimeField& f) {
  DenseModMatrix y{s.height, m.cols(), std::vector<std::uint64_t>(s.height * m.cols(), 0)};
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.columns[c]) {
      const std::uint64_t vm = f.reduce(v);
      for (const auto& [target, coefficient] : s.targets[r]) {
        std::uint64_t& cell = y.at(target, c);
        cell = f.add(cell, f.mul(vm, coefficient % f.modulus()));
      }
    }
  }
  return y;
}

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseModMatrix& a, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row)
      for (std::size_t j = col; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
    const std::uint64_t inv = f.inv(a.at(row, col));
    for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = f.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      const std::uint64_t factor = a.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) {
        if (a.at(row, j) != 0) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::size_t> free_columns(std::size_t cols, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

bool annihilates(const SparseIntegerMatrix& m, const std::vector<BigInt>& x) {
  std::vector<BigInt> product(m.rows);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (x[c] == 0) continue;
    for (const auto& [r, v] : m.columns[c]) {
      if (product[r] == 0) touched.push_back(r);
      product[r] += x[c] * BigInt(static_cast<long>(v));
    }
  }
  return std::all_of(touched.begin(), touched.end(), [&](std::size_t r) { return product[r] == 0; });
}

/// Clears denominators and removes the content of a rational vector.
std::vector<BigInt> primitive(const std::vector<Rational>& v) {
  BigInt lcm = 1;
  for (const Rational& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const Rational& x : v) {
    BigInt scaled = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(scaled);
  }
  if (g > 1)
    for (BigInt& x : out) x /= g;
  return out;
}

}  // namespace

CertifiedKernel certified_kernel(const SparseIntegerMatrix& m) {
  const std::size_t cols = m.cols();
  CertifiedKernel out;
  if (cols == 0) return out;
  constexpr int kAttempts = 4;
  constexpr int kPrimesPerAttempt = 10;
  std::size_t prime_index = 0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Sketch sketch = make_sketch(m, 3 + 2 * attempt, 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(attempt));
    std::vector<std::size_t> pivots;
    bool have_state = false;
    std::vector<std::size_t> frees;
    // residues[f][i]: entry of kernel vector f at pivot column pivots[i].
    std::vector<std::vector<BigInt>> residues;
    BigInt modulus = 1;
    for (int k = 0; k < kPrimesPerAttempt; ++k) {
      const std::uint64_t p = large_prime(prime_index++);
      ++out.primes_used;
      const PrimeField field(p);
      DenseModMatrix y = apply_sketch(m, sketch, field);
      std::vector<std::size_t> pv = rref(y, field);
      if (have_state) {
        if (pv.size() < pivots.size()) continue;
        if (pv.size() == pivots.size() && pv != pivots) {
          if (!std::lexicographical_compare(pv.begin(), pv.end(), pivots.begin(), pivots.end())) continue;
          have_state = false;
        } else if (pv.size() > pivots.size()) {
          have_state = false;
        }
      }
      if (!have_state) {
        pivots = pv;
        frees = free_columns(cols, pivots);
        residues.assign(frees.size(), std::vector<BigInt>(pivots.size(), 0));
        modulus = 1;
        have_state = true;
      }
      for (std::size_t fi = 0; fi < frees.size(); ++fi) {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          const std::uint64_t r = field.neg(y.at(i, frees[fi]));
          residues[fi][i] = crt_combine(residues[fi][i], modulus, r, p);
        }
      }
      modulus *= static_cast<unsigned long>(p);

      std::vector<std::vector<BigInt>> basis;
      bool reconstructed = true;
      for (std::size_t fi = 0; fi < frees.size() && reconstructed; ++fi) {
        std::vector<Rational> x(cols, 0);
        x[frees[fi]] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          auto q = rational_reconstruct(residues[fi][i], modulus);
          if (!q) {
            reconstructed = false;
            break;
          }
          x[pivots[i]] = *q;
        }
        if (reconstructed) basis.push_back(primitive(x));
      }
      if (!reconstructed) continue;
      if (std::all_of(basis.begin(), basis.end(), [&](const auto& x) { return annihilates(m, x); })) {
        out.rank = pivots.size();
        out.basis = std::move(basis);
        out.attempts = attempt + 1;
        return out;
      }
    }
  }
  throw ConsistencyError("certified_kernel: no exact certificate after repeated sketches");
}

std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  BigInt previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / previous;
      }
      a[i][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t modular_rank(const SparseIntegerMatrix& m) {
  if (m.cols() == 0 || m.rows == 0) return 0;
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < 3; ++k) {
    const PrimeField field(large_prime(k));
    const Sketch sketch = make_sketch(m, 3, 0x243f6a8885a308d3ULL + k);
    DenseModMatrix y = apply_sketch(m, sketch, field);
    ranks.push_back(rref(y, field).size());
    if (ranks.size() == 2 && ranks[0] == ranks[1]) return ranks[0];
  }
  const std::size_t best = *std::max_element(ranks.begin(), ranks.end());
  if (std::count(ranks.begin(), ranks.end(), best) >= 2) return best;
  throw ConsistencyError("modular_rank: independent primes disagree");
}

ExactLinearMap::ExactLinearMap(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

std::size_t ExactLinearMap::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void ExactLinearMap::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= columns_.size()) throw InputError("ExactLinearMap: index out of range");
  Rational& cell = columns_[col][row];
  cell += value;
  cell.canonicalize();
  if (cell == 0) columns_[col].erase(row);
}

Rational ExactLinearMap::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = c.find(row);
  return it == c.end() ? Rational(0) : it->second;
}

std::vector<std::vector<BigInt>> ExactLinearMap::dense_integer_rows() const {
  std::vector<BigInt> lcm(rows_, 1);
  for (const auto& c : columns_)
    for (const auto& [r, v] : c) mpz_lcm(lcm[r].get_mpz_t(), lcm[r].get_mpz_t(), v.get_den_mpz_t());
  std::vector<std::vector<BigInt>> out(rows_, std::vector<BigInt>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) out[r][c] = v.get_num() * (lcm[r] / v.get_den());
  return out;
}

SparseIntegerMatrix ExactLinearMap::integer_rows_scaled() const {
  std::vector<BigInt> lcm(rows_, 1);
  for (const auto& c : columns_)
    for (const auto& [r, v] : c) mpz_lcm(lcm[r].get_mpz_t(), lcm[r].get_mpz_t(), v.get_den_mpz_t());
  SparseIntegerMatrix out;
  out.rows = rows_;
  out.columns.resize(cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) {
      const BigInt x = v.get_num() * (lcm[r] / v.get_den());
      if (!x.fits_slong_p()) throw CapacityError("ExactLinearMap: entry exceeds 64-bit range after scaling");
      out.columns[c].emplace_back(r, x.get_si());
    }
  }
  return out;
}

std::size_t ExactLinearMap::rank() const {
  if (std::max(rows_, cols()) <= kBareissLimit) return bareiss_rank(dense_integer_rows());
  return modular_rank(integer_rows_scaled());
}

std::vector<std::vector<BigInt>> ExactLinearMap::kernel() const { return certified_kernel(integer_rows_scaled()).basis; }

void ExactLinearMap::dump(std::ostream& out) const {
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) out << r << ' ' << c << ' ' << v.get_num() << '/' << v.get_den() << '\n';
}

}  // namespace albanese
