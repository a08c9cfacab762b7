#include "albanese/character.hpp"

#include <algorithm>
#include <numeric>

#include "albanese/memo.hpp"

namespace albanese {

struct CharExpr::Node {
  enum class Kind { Standard, DualStandard, Trivial, Irreducible, Sum, Tensor, Wedge, Sym, Schur, Dual };
  explicit Node(Kind kind, int k = 0) : kind(kind), k(k) {}

  Kind kind;
  int k;
  Partition shape;
  Bipartition irrep;
  std::vector<CharExpr> children;
};

namespace {

using Node = CharExpr::Node;

void add_term(LaurentPolynomial& poly, const Weight& w, const BigInt& c) {
  if (c == 0) return;
  BigInt& cell = poly[w];
  cell += c;
  if (cell == 0) poly.erase(w);
}

LaurentPolynomial add(LaurentPolynomial a, const LaurentPolynomial& b, const BigInt& scale = 1) {
  for (const auto& [w, c] : b) add_term(a, w, scale * c);
  return a;
}

LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Weight w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      add_term(out, w, ca * cb);
    }
  }
  return out;
}

LaurentPolynomial constant(int n, const BigInt& c = 1) {
  LaurentPolynomial out;
  add_term(out, Weight(static_cast<std::size_t>(n), 0), c);
  return out;
}

LaurentPolynomial adams(const LaurentPolynomial& chi, int r) {
  LaurentPolynomial out;
  for (const auto& [w, c] : chi) {
    Weight scaled = w;
    for (int& e : scaled) e *= r;
    add_term(out, scaled, c);
  }
  return out;
}

LaurentPolynomial dual_of(const LaurentPolynomial& chi) {
  LaurentPolynomial out;
  for (const auto& [w, c] : chi) {
    Weight negated = w;
    for (int& e : negated) e = -e;
    out.emplace(std::move(negated), c);
  }
  return out;
}

/// h_0..h_k (sign = +1) or e_0..e_k (sign = -1) of a character, by Newton's
/// identities against its Adams operations.
std::vector<LaurentPolynomial> elementary_or_complete(const LaurentPolynomial& chi, int k, int n, int sign) {
  std::vector<LaurentPolynomial> out{constant(n)};
  std::vector<LaurentPolynomial> psi{LaurentPolynomial()};
  for (int r = 1; r <= k; ++r) psi.push_back(adams(chi, r));
  for (int m = 1; m <= k; ++m) {
    LaurentPolynomial sum;
    for (int r = 1; r <= m; ++r) {
      const BigInt s = (sign < 0 && r % 2 == 0) ? -1 : 1;
      sum = add(std::move(sum), multiply(psi[static_cast<std::size_t>(r)], out[static_cast<std::size_t>(m - r)]), s);
    }
    for (auto& [w, c] : sum) {
      if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(m)))
        throw ConsistencyError("Newton identity produced a non-integral character");
      c /= m;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

LaurentPolynomial determinant(const std::vector<std::vector<const LaurentPolynomial*>>& m, int n) {
  const std::size_t size = m.size();
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial out;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPolynomial term = constant(n);
    bool zero = false;
    for (std::size_t i = 0; i < size && !zero; ++i) {
      const LaurentPolynomial* entry = m[i][perm[i]];
      if (!entry || entry->empty()) {
        zero = true;
      } else {
        term = multiply(term, *entry);
      }
    }
    if (!zero) out = add(std::move(out), term, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// S_ν applied to a character: Jacobi–Trudi in h, or its dual form in e for
/// tall shapes.
LaurentPolynomial schur_functor(const LaurentPolynomial& chi, const Partition& nu, int n) {
  if (nu.empty()) return constant(n);
  const bool tall = nu.length() > nu[0];
  const Partition shape = tall ? nu.conjugate() : nu;
  const std::vector<LaurentPolynomial> basis = elementary_or_complete(chi, shape.size(), n, tall ? -1 : 1);
  const std::size_t l = static_cast<std::size_t>(shape.length());
  std::vector<std::vector<const LaurentPolynomial*>> m(l, std::vector<const LaurentPolynomial*>(l, nullptr));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const int index = shape[i] - static_cast<int>(i) + static_cast<int>(j);
      if (index >= 0 && index < static_cast<int>(basis.size())) m[i][j] = &basis[static_cast<std::size_t>(index)];
    }
  }
  return determinant(m, n);
}

void horizontal_strips(const std::vector<int>& lambda, std::size_t i, std::vector<int>& mu,
                       std::vector<std::vector<int>>& out) {
  if (i == lambda.size()) {
    out.push_back(mu);
    return;
  }
  const int low = i + 1 < lambda.size() ? lambda[i + 1] : 0;
  for (int v = low; v <= lambda[i]; ++v) {
    mu[i] = v;
    horizontal_strips(lambda, i + 1, mu, out);
  }
}

MemoTable<std::pair<std::vector<int>, int>, LaurentPolynomial>& schur_polynomial_memo() {
  static MemoTable<std::pair<std::vector<int>, int>, LaurentPolynomial> table;
  return table;
}

/// s_λ(x_1..x_m) by the branching rule; weights have length m.
LaurentPolynomial schur_polynomial(std::vector<int> lambda, int m) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (static_cast<int>(lambda.size()) > m) return {};
  if (m == 0) return lambda.empty() ? constant(0) : LaurentPolynomial();
  return schur_polynomial_memo().get_or_compute({lambda, m}, [&] {
    LaurentPolynomial out;
    std::vector<std::vector<int>> strips;
    std::vector<int> mu(lambda.size(), 0);
    horizontal_strips(lambda, 0, mu, strips);
    const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    for (const auto& strip : strips) {
      const int removed = total - std::accumulate(strip.begin(), strip.end(), 0);
      for (const auto& [w, c] : schur_polynomial(strip, m - 1)) {
        Weight extended = w;
        extended.push_back(removed);
        add_term(out, extended, c);
      }
    }
    return out;
  });
}

void check_rank(int n) {
  if (n < 1) throw InputError("character rank n must be at least 1");
  if (n > kMaxCharacterRank) {
    throw CapacityError("character computations are capped at n = " + std::to_string(kMaxCharacterRank));
  }
}

LaurentPolynomial evaluate(const CharExpr& expr, int n) {
  const Node& node = expr.node();
  switch (node.kind) {
    case Node::Kind::Standard:
    case Node::Kind::DualStandard: {
      LaurentPolynomial out;
      for (int i = 0; i < n; ++i) {
        Weight w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(i)] = node.kind == Node::Kind::Standard ? 1 : -1;
        add_term(out, w, 1);
      }
      return out;
    }
    case Node::Kind::Trivial:
      return constant(n);
    case Node::Kind::Irreducible:
      return weyl_character(node.irrep, n);
    case Node::Kind::Sum:
      return add(evaluate(node.children[0], n), evaluate(node.children[1], n));
    case Node::Kind::Tensor:
      return multiply(evaluate(node.children[0], n), evaluate(node.children[1], n));
    case Node::Kind::Wedge:
      return schur_functor(evaluate(node.children[0], n), Partition::column(node.k), n);
    case Node::Kind::Sym:
      return schur_functor(evaluate(node.children[0], n), Partition::row(node.k), n);
    case Node::Kind::Schur:
      return schur_functor(evaluate(node.children[0], n), node.shape, n);
    case Node::Kind::Dual:
      return dual_of(evaluate(node.children[0], n));
  }
  throw ConsistencyError("unknown character expression node");
}

}  // namespace

CharExpr CharExpr::standard() { return CharExpr(std::make_shared<const Node>(Node{Node::Kind::Standard})); }
CharExpr CharExpr::dual_standard() { return CharExpr(std::make_shared<const Node>(Node{Node::Kind::DualStandard})); }
CharExpr CharExpr::trivial() { return CharExpr(std::make_shared<const Node>(Node{Node::Kind::Trivial})); }

CharExpr CharExpr::irreducible(const Bipartition& b) {
  Node node{Node::Kind::Irreducible};
  node.irrep = b;
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

CharExpr CharExpr::wedge(int k) const {
  if (k < 0) throw InputError("wedge power must be nonnegative");
  Node node{Node::Kind::Wedge, k};
  node.children = {*this};
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

CharExpr CharExpr::sym(int k) const {
  if (k < 0) throw InputError("symmetric power must be nonnegative");
  Node node{Node::Kind::Sym, k};
  node.children = {*this};
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

CharExpr CharExpr::schur(const Partition& nu) const {
  Node node{Node::Kind::Schur};
  node.shape = nu;
  node.children = {*this};
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

CharExpr CharExpr::dual() const {
  Node node{Node::Kind::Dual};
  node.children = {*this};
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

CharExpr operator+(const CharExpr& a, const CharExpr& b) {
  Node node{Node::Kind::Sum};
  node.children = {a, b};
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

CharExpr operator*(const CharExpr& a, const CharExpr& b) {
  Node node{Node::Kind::Tensor};
  node.children = {a, b};
  return CharExpr(std::make_shared<const Node>(std::move(node)));
}

std::string CharExpr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Standard: return "H";
    case Node::Kind::DualStandard: return "H*";
    case Node::Kind::Trivial: return "1";
    case Node::Kind::Irreducible: return "V[" + n.irrep.to_string() + "]";
    case Node::Kind::Sum: return "(" + n.children[0].to_string() + " + " + n.children[1].to_string() + ")";
    case Node::Kind::Tensor: return "(" + n.children[0].to_string() + " x " + n.children[1].to_string() + ")";
    case Node::Kind::Wedge: return "Wedge^" + std::to_string(n.k) + "(" + n.children[0].to_string() + ")";
    case Node::Kind::Sym: return "Sym^" + std::to_string(n.k) + "(" + n.children[0].to_string() + ")";
    case Node::Kind::Schur: return "S[" + n.shape.to_string() + "](" + n.children[0].to_string() + ")";
    case Node::Kind::Dual: return "(" + n.children[0].to_string() + ")*";
  }
  return "?";
}

LaurentPolynomial weyl_character(const Bipartition& b, int n) {
  check_rank(n);
  if (b.length() > n) throw InputError("weyl_character: V[" + b.to_string() + "] does not exist at n = " + std::to_string(n));
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < b.covariant.length(); ++i) weight[static_cast<std::size_t>(i)] = b.covariant[static_cast<std::size_t>(i)];
  for (int i = 0; i < b.contravariant.length(); ++i)
    weight[static_cast<std::size_t>(n - 1 - i)] = -b.contravariant[static_cast<std::size_t>(i)];
  const int shift = weight.back();
  std::vector<int> shifted = weight;
  for (int& w : shifted) w -= shift;
  LaurentPolynomial out;
  for (const auto& [w, c] : schur_polynomial(shifted, n)) {
    Weight moved = w;
    for (int& e : moved) e += shift;
    out.emplace(std::move(moved), c);
  }
  return out;
}

LaurentPolynomial character_of(const CharExpr& expr, int n) {
  check_rank(n);
  return evaluate(expr, n);
}

Decomposition decompose_character(LaurentPolynomial chi, int n) {
  check_rank(n);
  Decomposition out;
  while (!chi.empty()) {
    const auto top = std::prev(chi.end());
    const Weight w = top->first;
    const BigInt c = top->second;
    if (c < 0 || !std::is_sorted(w.begin(), w.end(), std::greater<>())) {
      throw ConsistencyError("character remainder is not a nonnegative sum of Weyl characters");
    }
    std::vector<int> positive, negative;
    for (int e : w)
      if (e > 0) positive.push_back(e);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (*it < 0) negative.push_back(-*it);
    const Bipartition b{Partition(positive), Partition(negative)};
    out.add(b, c);
    chi = add(std::move(chi), weyl_character(b, n), -c);
  }
  return out;
}

Decomposition character_decompose(const CharExpr& expr, int n) { return decompose_character(character_of(expr, n), n); }

}  // namespace albanese
