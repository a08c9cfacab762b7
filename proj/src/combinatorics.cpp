#include "albanese/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "albanese/memo.hpp"

namespace albanese {

BigInt factorial(int k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt specht_dim(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  BigInt out = factorial(lambda.size());
  out /= hooks;
  return out;
}

BigInt centralizer_size(const Partition& rho) {
  std::map<int, int> multiplicity;
  for (int part : rho.parts()) ++multiplicity[part];
  BigInt out = 1;
  for (auto [part, count] : multiplicity) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(count));
    out *= power * factorial(count);
  }
  return out;
}

namespace {

// ---- Littlewood–Richardson tableaux -------------------------------------

struct LrSearch {
  const Partition& inner;
  const Partition& content;
  const Partition& outer;
  // filling[r][c] for cells of outer/inner, 0 for cells of inner.
  std::vector<std::vector<int>> filling;
  std::vector<int> used;  // letters used so far, indexed 1..l(content)
  BigInt count = 0;

  void fill_row(std::size_t row) {
    if (row == static_cast<std::size_t>(outer.length())) {
      ++count;
      return;
    }
    const int start = inner[row];
    const int stop = outer[row];
    std::vector<int> row_counts(used.size(), 0);
    fill_cell(row, start, start, stop, row_counts);
  }

  void fill_cell(std::size_t row, int col, int start, int stop, std::vector<int>& row_counts) {
    if (col == stop) {
      // Lattice check for this row read right to left: letter j+1 of this
      // row is read before any letter j of this row.
      for (std::size_t j = 1; j + 1 < used.size(); ++j) {
        if (used[j + 1] + row_counts[j + 1] > used[j]) return;
      }
      for (std::size_t j = 1; j < used.size(); ++j) used[j] += row_counts[j];
      fill_row(row + 1);
      for (std::size_t j = 1; j < used.size(); ++j) used[j] -= row_counts[j];
      return;
    }
    int low = 1;
    if (col > start) low = filling[row][static_cast<std::size_t>(col - 1)];
    if (row > 0 && col < outer[row - 1] && col >= inner[row - 1]) {
      low = std::max(low, filling[row - 1][static_cast<std::size_t>(col)] + 1);
    }
    // Letter j may only appear in rows >= j (0-based: letter <= row+1).
    const int high = std::min<int>(static_cast<int>(row) + 1, content.length());
    for (int letter = low; letter <= high; ++letter) {
      auto l = static_cast<std::size_t>(letter);
      if (used[l] + row_counts[l] >= content[l - 1]) continue;
      filling[row][static_cast<std::size_t>(col)] = letter;
      ++row_counts[l];
      fill_cell(row, col + 1, start, stop, row_counts);
      --row_counts[l];
    }
    filling[row][static_cast<std::size_t>(col)] = 0;
  }
};

BigInt count_lr_tableaux(const Partition& lambda, const Partition& xi, const Partition& nu) {
  LrSearch search{lambda, xi, nu, {}, std::vector<int>(static_cast<std::size_t>(xi.length()) + 1, 0)};
  search.filling.resize(static_cast<std::size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r) search.filling[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
  search.fill_row(0);
  return search.count;
}

MemoTable<std::tuple<Partition, Partition, Partition>, BigInt>& lr_memo() {
  static MemoTable<std::tuple<Partition, Partition, Partition>, BigInt> table;
  return table;
}

// ---- Murnaghan–Nakayama -------------------------------------------------

MemoTable<std::pair<Partition, Partition>, BigInt>& character_memo() {
  static MemoTable<std::pair<Partition, Partition>, BigInt> table;
  return table;
}

BigInt mn_character(const Partition& lambda, const Partition& rho);

BigInt mn_uncached(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  const int hook = rho.parts().front();
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));

  // Beta-set of λ with l(λ) beads: β_i = λ_i + (l - 1 - i).
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - hook;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > to && b < from) ++height;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) parts[static_cast<std::size_t>(k)] = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
    BigInt term = mn_character(Partition::from_padded(std::move(parts)), rest);
    if (height % 2) total -= term;
    else total += term;
  }
  return total;
}

BigInt mn_character(const Partition& lambda, const Partition& rho) {
  return character_memo().get_or_compute({lambda, rho}, [&] { return mn_uncached(lambda, rho); });
}

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& xi, const Partition& nu) {
  if (nu.size() != lambda.size() + xi.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(xi)) return 0;
  // c^ν_{λξ} = c^ν_{ξλ}; fill with the smaller content.
  const bool swap = xi.size() > lambda.size() || (xi.size() == lambda.size() && xi > lambda);
  const Partition& inner = swap ? xi : lambda;
  const Partition& content = swap ? lambda : xi;
  return lr_memo().get_or_compute({inner, content, nu}, [&] { return count_lr_tableaux(inner, content, nu); });
}

BigInt symmetric_group_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw InputError("symmetric_group_character: |λ| = " + std::to_string(lambda.size()) +
                     " but |ρ| = " + std::to_string(rho.size()));
  }
  return mn_character(lambda, rho);
}

}  // namespace albanese
