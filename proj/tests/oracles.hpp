#pragma once

// Brute-force reference computations shared by the tests. Everything here is
// written from first principles (tableau enumeration, explicit polynomials)
// and deliberately avoids the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, long>;
using Shape = std::vector<int>;

inline std::vector<std::pair<int, int>> cells_of(const Shape& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  return cells;
}

/// Calls visit(filling) for every semistandard tableau of the shape with
/// entries in [0, alphabet). Fillings are indexed like cells_of.
inline void for_each_ssyt(const Shape& shape, int alphabet, const std::function<void(const std::vector<int>&)>& visit) {
  const auto cells = cells_of(shape);
  std::map<std::pair<int, int>, int> at;
  std::vector<int> filling(cells.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      visit(filling);
      return;
    }
    auto [r, c] = cells[i];
    int lo = 0;
    if (c > 0) lo = std::max(lo, at[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, at[{r - 1, c}] + 1);
    for (int v = lo; v < alphabet; ++v) {
      at[{r, c}] = v;
      filling[i] = v;
      rec(i + 1);
    }
    at.erase({r, c});
  };
  rec(0);
}

inline long count_syt(const Shape& shape) {
  const int total = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> rows(shape.size(), 0);
  std::function<long(int)> rec = [&](int placed) -> long {
    if (placed == total) return 1;
    long count = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (rows[r] == shape[r]) continue;
      if (r > 0 && rows[r - 1] <= rows[r]) continue;
      ++rows[r];
      count += rec(placed + 1);
      --rows[r];
    }
    return count;
  };
  return rec(0);
}

inline Poly schur_poly(const Shape& shape, int vars) {
  Poly out;
  for_each_ssyt(shape, vars, [&](const std::vector<int>& f) {
    Exponent e(vars, 0);
    for (int v : f) ++e[v];
    ++out[e];
  });
  return out;
}

inline Poly power_sum(int k, int vars) {
  Poly out;
  for (int i = 0; i < vars; ++i) {
    Exponent e(vars, 0);
    e[i] = k;
    out[e] = 1;
  }
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// s_outer[s_inner] in `vars` variables: s_outer evaluated on the multiset of
/// monomials of s_inner.
inline Poly plethysm_poly(const Shape& outer, const Shape& inner, int vars) {
  std::vector<Exponent> monomials;
  for (const auto& [e, c] : schur_poly(inner, vars))
    for (long k = 0; k < c; ++k) monomials.push_back(e);
  Poly out;
  for_each_ssyt(outer, static_cast<int>(monomials.size()), [&](const std::vector<int>& f) {
    Exponent e(vars, 0);
    for (int v : f)
      for (int i = 0; i < vars; ++i) e[i] += monomials[v][i];
    ++out[e];
  });
  return out;
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly peeling
/// off the lexicographically largest monomial.
inline std::map<Shape, long, std::greater<>> schur_expand(Poly p, int vars) {
  std::map<Shape, long, std::greater<>> out;
  while (!p.empty()) {
    auto top = std::prev(p.end());
    Shape shape;
    for (int x : top->first)
      if (x > 0) shape.push_back(x);
    const long c = top->second;
    out[shape] = c;
    for (const auto& [e, k] : schur_poly(shape, vars)) {
      p[e] -= c * k;
      if (p[e] == 0) p.erase(e);
    }
  }
  return out;
}

/// Number of semistandard tableaux of the polynomial shape with entries ≤ n.
inline long count_ssyt(const Shape& shape, int n) {
  long count = 0;
  for_each_ssyt(shape, n, [&](const std::vector<int>&) { ++count; });
  return count;
}

/// dim V_{λ,μ}(n) as the polynomial representation λ + (μ_1)^n − reverse(μ).
inline long mixed_dim(const Shape& lambda, const Shape& mu, int n) {
  if (static_cast<int>(lambda.size() + mu.size()) > n) return 0;
  const int shift = mu.empty() ? 0 : mu[0];
  Shape weight(n, shift);
  for (std::size_t i = 0; i < lambda.size(); ++i) weight[i] += lambda[i];
  for (std::size_t j = 0; j < mu.size(); ++j) weight[n - 1 - j] -= mu[j];
  std::erase(weight, 0);
  return count_ssyt(weight, n);
}

inline long set_partition_count(int k) {
  // Bell triangle.
  std::vector<long> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

}  // namespace oracle

namespace oracle {

/// Forest structures on a inputs and b outputs counted by brute force: every
/// input is sent to one of b tree blocks (each of size ≥ 2) or to the wheel
/// pool, and the pool is set-partitioned into wheels.
inline long count_forests(int a, int b) {
  long total = 0;
  std::vector<int> label(a, 0);
  long assignments = 1;
  for (int i = 0; i < a; ++i) assignments *= b + 1;
  for (long code = 0; code < assignments; ++code) {
    long c = code;
    std::vector<int> sizes(b + 1, 0);
    for (int i = 0; i < a; ++i) {
      ++sizes[c % (b + 1)];
      c /= b + 1;
    }
    bool ok = true;
    for (int k = 1; k <= b; ++k) ok = ok && sizes[k] >= 2;
    if (ok) total += set_partition_count(sizes[0]);
  }
  return total;
}

}  // namespace oracle
