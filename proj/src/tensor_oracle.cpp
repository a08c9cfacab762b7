#include "albanese/tensor_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "albanese/combinatorics.hpp"

namespace albanese {

Signature mixed_signature(int p, int q) {
  if (p < 0 || q < 0) throw InputError("mixed_signature: p and q must be nonnegative");
  Signature out(static_cast<std::size_t>(p), Variance::Covariant);
  out.insert(out.end(), static_cast<std::size_t>(q), Variance::Contravariant);
  return out;
}

Signature operator+(Signature a, const Signature& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::uint64_t encode_word(const IndexWord& w, int n) {
  std::uint64_t code = 0;
  for (int letter : w) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(letter);
  return code;
}

IndexWord decode_word(std::uint64_t code, int n, std::size_t length) {
  IndexWord w(length);
  for (std::size_t k = length; k-- > 0;) {
    w[k] = static_cast<int>(code % static_cast<std::uint64_t>(n));
    code /= static_cast<std::uint64_t>(n);
  }
  return w;
}

namespace {

/// Large tensor computations run one at a time per process.
std::unique_lock<std::recursive_mutex> single_flight() {
  static std::recursive_mutex mutex;
  return std::unique_lock(mutex);
}

std::vector<std::vector<int>> identity_matrix(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

/// n^slots, or CapacityError once it passes the cap.
std::uint64_t space_size(int n, std::size_t slots, std::size_t capacity) {
  if (n < 1) throw InputError("rank n must be at least 1");
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < slots; ++k) {
    size *= static_cast<std::uint64_t>(n);
    if (size > capacity) {
      throw CapacityError("tensor space of dimension " + std::to_string(n) + "^" + std::to_string(slots) +
                          " exceeds capacity " + std::to_string(capacity));
    }
  }
  return size;
}

IndexWord canonical_form(const IndexWord& w) {
  std::unordered_map<int, int> seen;
  IndexWord out(w.size());
  int next = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto [it, inserted] = seen.emplace(w[k], next);
    if (inserted) ++next;
    out[k] = it->second;
  }
  return out;
}

void collect_even_orbits(int n, std::size_t length, IndexWord& current, std::vector<int>& counts,
                         std::vector<IndexWord>& out) {
  const std::size_t remaining = length - current.size();
  const auto odd = static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](int c) { return c % 2; }));
  if (odd > remaining || (remaining - odd) % 2 != 0) return;
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  const int labels = static_cast<int>(counts.size());
  for (int letter = 0; letter <= std::min(labels, n - 1); ++letter) {
    if (letter == labels) counts.push_back(0);
    ++counts[static_cast<std::size_t>(letter)];
    current.push_back(letter);
    collect_even_orbits(n, length, current, counts, out);
    current.pop_back();
    --counts[static_cast<std::size_t>(letter)];
    if (letter == labels) counts.pop_back();
  }
}

/// Canonical words of length `length` over at most n labels in which every
/// label occurs an even number of times.
std::vector<IndexWord> even_orbits(int n, std::size_t length) {
  std::vector<IndexWord> out;
  IndexWord current;
  std::vector<int> counts;
  collect_even_orbits(n, length, current, counts, out);
  return out;
}

/// Every word in the S_n-orbit of a canonical word.
std::vector<IndexWord> orbit_words(const IndexWord& canonical, int n) {
  const int labels = canonical.empty() ? 0 : *std::max_element(canonical.begin(), canonical.end()) + 1;
  std::vector<IndexWord> out;
  std::vector<int> image(static_cast<std::size_t>(labels));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto recurse = [&](auto&& self, int label) -> void {
    if (label == labels) {
      IndexWord w(canonical.size());
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = image[static_cast<std::size_t>(canonical[k])];
      out.push_back(std::move(w));
      return;
    }
    for (int letter = 0; letter < n; ++letter) {
      if (used[static_cast<std::size_t>(letter)]) continue;
      used[static_cast<std::size_t>(letter)] = true;
      image[static_cast<std::size_t>(label)] = letter;
      self(self, label + 1);
      used[static_cast<std::size_t>(letter)] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<std::pair<int, int>> contraction_pairs(int offset, int p, int q) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) out.emplace_back(offset + a, offset + p + b);
  return out;
}

IndexWord remove_slots(const IndexWord& w, int a, int b) {
  IndexWord out;
  out.reserve(w.size() - 2);
  for (std::size_t k = 0; k < w.size(); ++k)
    if (static_cast<int>(k) != a && static_cast<int>(k) != b) out.push_back(w[k]);
  return out;
}

/// Dense renumbering of sparse row keys.
class RowIndexer {
 public:
  std::size_t operator()(std::uint64_t key) {
    auto [it, inserted] = index_.emplace(key, index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

const LinearGenerator* find_transvection(const std::vector<LinearGenerator>& gens) {
  for (const auto& g : gens)
    if (g.name == "transvection") return &g;
  return nullptr;
}

std::vector<int> invert_permutation(const std::vector<int>& sigma) {
  std::vector<int> inverse(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) inverse[static_cast<std::size_t>(sigma[k])] = static_cast<int>(k);
  return inverse;
}

/// The words of Ω(σ), one per assignment i ∈ [n]^{p+q}.
std::vector<std::uint64_t> omega_words(int n, int p, int q, const std::vector<int>& sigma) {
  const int m = p + q;
  const std::vector<int> inv = invert_permutation(sigma);
  std::vector<std::uint64_t> out;
  IndexWord assignment(static_cast<std::size_t>(m), 0);
  IndexWord word(static_cast<std::size_t>(2 * m));
  while (true) {
    std::size_t slot = 0;
    for (int j = 0; j < p; ++j) word[slot++] = assignment[static_cast<std::size_t>(j)];
    for (int j = 0; j < q; ++j) word[slot++] = assignment[static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])];
    for (int j = p; j < m; ++j) word[slot++] = assignment[static_cast<std::size_t>(j)];
    for (int j = q; j < m; ++j) word[slot++] = assignment[static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])];
    out.push_back(encode_word(word, n));
    int k = m - 1;
    while (k >= 0 && assignment[static_cast<std::size_t>(k)] == n - 1) assignment[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++assignment[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Signature omega_signature(int p, int q) { return mixed_signature(p, q) + mixed_signature(q, p); }

}  // namespace

std::vector<LinearGenerator> gl_generators(int n) {
  if (n < 1) throw InputError("gl_generators: n must be at least 1");
  std::vector<LinearGenerator> out;
  if (n >= 2) {
    auto cycle = identity_matrix(n);
    for (auto& row : cycle) std::fill(row.begin(), row.end(), 0);
    for (int j = 0; j < n; ++j) cycle[static_cast<std::size_t>((j + 1) % n)][static_cast<std::size_t>(j)] = 1;
    out.push_back({"cycle", cycle, cycle});

    auto swap = identity_matrix(n);
    std::swap(swap[0], swap[1]);
    out.push_back({"transposition", swap, swap});

    auto transvection = identity_matrix(n);
    transvection[0][1] = 1;
    auto inverse_transpose = identity_matrix(n);
    inverse_transpose[1][0] = -1;
    out.push_back({"transvection", transvection, inverse_transpose});
  }
  auto sign = identity_matrix(n);
  sign[0][0] = -1;
  out.push_back({"sign", sign, sign});
  return out;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> apply_generator(const LinearGenerator& g, const IndexWord& w,
                                                                    const Signature& signature, int n) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms{{0, 1}};
  for (std::size_t s = 0; s < w.size(); ++s) {
    const auto& m = signature[s] == Variance::Covariant ? g.matrix : g.inverse_transpose;
    std::vector<std::pair<std::uint64_t, std::int64_t>> next;
    for (const auto& [code, c] : terms) {
      for (int i = 0; i < n; ++i) {
        const int entry = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(w[s])];
        if (entry != 0) next.emplace_back(code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(i), c * entry);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

ExactTensorRep build_rep(int n, int p, int q, std::size_t capacity) {
  const auto guard = single_flight();
  if (p < 0 || q < 0) throw InputError("build_rep: p and q must be nonnegative");
  const Signature signature = mixed_signature(p, q);
  const std::uint64_t dim = space_size(n, signature.size(), capacity);
  ExactTensorRep rep;
  rep.n = n;
  rep.p = p;
  rep.q = q;
  rep.dimension = dim;
  for (const LinearGenerator& g : gl_generators(n)) {
    SparseIntegerMatrix action;
    action.rows = dim;
    action.columns.reserve(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
      std::map<std::size_t, std::int64_t> column;
      for (const auto& [code, c] : apply_generator(g, decode_word(j, n, signature.size()), signature, n))
        column[code] += c;
      action.columns.push_back(SparseIntegerMatrix::make_column(column));
    }
    rep.generator_names.push_back(g.name);
    rep.actions.push_back(std::move(action));
  }
  return rep;
}

InvariantSolution solve_invariants(int n, const Signature& signature,
                                   const std::vector<std::pair<int, int>>& contractions, std::size_t capacity) {
  const auto guard = single_flight();
  const std::uint64_t size = space_size(n, signature.size(), capacity);
  for (const auto& [a, b] : contractions) {
    if (a < 0 || b < 0 || a >= static_cast<int>(signature.size()) || b >= static_cast<int>(signature.size()) ||
        signature[static_cast<std::size_t>(a)] != Variance::Covariant ||
        signature[static_cast<std::size_t>(b)] != Variance::Contravariant) {
      throw InputError("solve_invariants: contraction must pair a covariant with a contravariant slot");
    }
  }
  InvariantSolution out;
  out.n = n;
  out.signature = signature;
  out.orbits = even_orbits(n, signature.size());

  const std::vector<LinearGenerator> gens = gl_generators(n);
  const LinearGenerator* transvection = find_transvection(gens);
  RowIndexer rows;
  SparseIntegerMatrix m;
  for (const IndexWord& orbit : out.orbits) {
    std::map<std::size_t, std::int64_t> column;
    for (const IndexWord& u : orbit_words(orbit, n)) {
      if (transvection) {
        for (const auto& [code, c] : apply_generator(*transvection, u, signature, n)) column[rows(code)] += c;
        column[rows(encode_word(u, n))] -= 1;
      }
      for (std::size_t k = 0; k < contractions.size(); ++k) {
        const auto [a, b] = contractions[k];
        if (u[static_cast<std::size_t>(a)] != u[static_cast<std::size_t>(b)]) continue;
        column[rows(size * (k + 1) + encode_word(remove_slots(u, a, b), n))] += 1;
      }
    }
    m.columns.push_back(SparseIntegerMatrix::make_column(column));
  }
  m.rows = rows.size();
  out.kernel = certified_kernel(m);
  return out;
}

std::size_t invariant_dim(const ExactTensorRep& rep) {
  return solve_invariants(rep.n, mixed_signature(rep.p, rep.q), {}, kStructuredCapacity).dimension();
}

std::size_t invariant_dim_naive(const ExactTensorRep& rep, std::size_t limit) {
  if (rep.dimension > limit) {
    throw CapacityError("invariant_dim_naive: dimension " + std::to_string(rep.dimension) + " exceeds " +
                        std::to_string(limit));
  }
  SparseIntegerMatrix stacked;
  stacked.rows = rep.dimension * rep.actions.size();
  stacked.columns.resize(rep.dimension);
  for (std::size_t g = 0; g < rep.actions.size(); ++g) {
    const std::size_t offset = g * rep.dimension;
    for (std::size_t j = 0; j < rep.dimension; ++j) {
      std::map<std::size_t, std::int64_t> column;
      for (const auto& [r, v] : rep.actions[g].columns[j]) column[offset + r] += v;
      column[offset + j] -= 1;
      for (const auto& entry : SparseIntegerMatrix::make_column(column)) stacked.columns[j].push_back(entry);
    }
  }
  return certified_kernel(stacked).dimension();
}

TracelessSubspace traceless_subspace(int n, int p, int q, std::size_t capacity) {
  const auto guard = single_flight();
  if (p < 0 || q < 0) throw InputError("traceless_subspace: p and q must be nonnegative");
  const std::size_t length = static_cast<std::size_t>(p + q);
  const std::uint64_t size = space_size(n, length, capacity);
  TracelessSubspace out;
  out.n = n;
  out.p = p;
  out.q = q;
  const auto pairs = contraction_pairs(0, p, q);
  if (pairs.empty()) {
    for (std::uint64_t code = 0; code < size; ++code) out.basis.push_back({{code, BigInt(1)}});
    return out;
  }
  // Contractions preserve the weight (covariant minus contravariant letter
  // counts), so the kernel splits into weight blocks.
  std::map<std::vector<int>, std::vector<std::uint64_t>> blocks;
  for (std::uint64_t code = 0; code < size; ++code) {
    const IndexWord w = decode_word(code, n, length);
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < length; ++k) weight[static_cast<std::size_t>(w[k])] += k < static_cast<std::size_t>(p) ? 1 : -1;
    blocks[weight].push_back(code);
  }
  for (const auto& [weight, codes] : blocks) {
    RowIndexer rows;
    SparseIntegerMatrix m;
    for (std::uint64_t code : codes) {
      const IndexWord w = decode_word(code, n, length);
      std::map<std::size_t, std::int64_t> column;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [a, b] = pairs[k];
        if (w[static_cast<std::size_t>(a)] != w[static_cast<std::size_t>(b)]) continue;
        column[rows(size * k + encode_word(remove_slots(w, a, b), n))] += 1;
      }
      m.columns.push_back(SparseIntegerMatrix::make_column(column));
    }
    m.rows = rows.size();
    for (const auto& x : certified_kernel(m).basis) {
      std::vector<std::pair<std::uint64_t, BigInt>> v;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) v.emplace_back(codes[j], x[j]);
      out.basis.push_back(std::move(v));
    }
  }
  return out;
}

std::size_t invariant_dim(const TracelessSubspace& t) {
  return solve_invariants(t.n, mixed_signature(t.p, t.q), contraction_pairs(0, t.p, t.q)).dimension();
}

ExactLinearMap omega_matrix(int n, int p, int q) {
  const auto guard = single_flight();
  if (p < 0 || q < 0) throw InputError("omega_matrix: p and q must be nonnegative");
  const std::uint64_t rows = space_size(n, static_cast<std::size_t>(2 * (p + q)), kStructuredCapacity);
  const auto perms = all_permutations(p + q);
  ExactLinearMap out(rows, perms.size());
  for (std::size_t c = 0; c < perms.size(); ++c)
    for (std::uint64_t code : omega_words(n, p, q, perms[c])) out.add(code, c, 1);
  return out;
}

std::vector<std::vector<int>> omega_prime_domain(int p, int q) {
  std::vector<std::vector<int>> out;
  for (const auto& alpha : all_permutations(p)) {
    for (const auto& beta : all_permutations(q)) {
      std::vector<int> inverse(static_cast<std::size_t>(p + q));
      for (int j = 0; j < q; ++j) inverse[static_cast<std::size_t>(j)] = p + beta[static_cast<std::size_t>(j)];
      for (int k = 0; k < p; ++k) inverse[static_cast<std::size_t>(q + k)] = alpha[static_cast<std::size_t>(k)];
      out.push_back(invert_permutation(inverse));
    }
  }
  return out;
}

OmegaReport omega_prime_report(int n, int p, int q) {
  const auto guard = single_flight();
  if (p < 0 || q < 0) throw InputError("omega_prime_verify: p and q must be nonnegative");
  if (n < p + q) throw InputError("omega_prime_verify: requires n >= p+q");
  OmegaReport report;
  report.n = n;
  report.p = p;
  report.q = q;
  report.expected = factorial(p).get_ui() * factorial(q).get_ui();

  const Signature signature = omega_signature(p, q);
  const std::size_t length = signature.size();
  space_size(n, length, kStructuredCapacity);

  // Ω(σ) for every σ, the image check, and the Gram matrix of Ω.
  const auto perms = all_permutations(p + q);
  std::vector<std::vector<std::uint64_t>> columns;
  columns.reserve(perms.size());
  for (const auto& sigma : perms) columns.push_back(omega_words(n, p, q, sigma));
  report.image_invariant = true;
  const auto gens = gl_generators(n);
  for (const auto& column : columns) {
    for (const LinearGenerator& g : gens) {
      std::unordered_map<std::uint64_t, std::int64_t> image;
      for (std::uint64_t code : column) {
        for (const auto& [target, c] : apply_generator(g, decode_word(code, n, length), signature, n)) image[target] += c;
        image[code] -= 1;
      }
      if (std::any_of(image.begin(), image.end(), [](const auto& kv) { return kv.second != 0; }))
        report.image_invariant = false;
    }
  }
  ExactLinearMap gram(perms.size(), perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::uint64_t> common;
      std::set_intersection(columns[a].begin(), columns[a].end(), columns[b].begin(), columns[b].end(),
                            std::back_inserter(common));
      if (!common.empty()) gram.add(a, b, static_cast<long>(common.size()));
    }
  }
  report.omega_rank = gram.rank();

  // pr is the orthogonal projection onto T⊗T, so the rank of pr∘Ω′ is the
  // rank of the pairing between a basis of [T⊗T]^GL and the Ω′(σ).
  auto pairs = contraction_pairs(0, p, q);
  for (const auto& pair : contraction_pairs(p + q, q, p)) pairs.push_back(pair);
  const InvariantSolution invariants = solve_invariants(n, signature, pairs);
  report.invariant_dimension = invariants.dimension();

  std::map<IndexWord, std::size_t> orbit_index;
  for (std::size_t j = 0; j < invariants.orbits.size(); ++j) orbit_index.emplace(invariants.orbits[j], j);
  const auto domain = omega_prime_domain(p, q);
  ExactLinearMap pairing(invariants.dimension(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    std::vector<long> hits(invariants.orbits.size(), 0);
    for (std::uint64_t code : omega_words(n, p, q, domain[c])) {
      auto it = orbit_index.find(canonical_form(decode_word(code, n, length)));
      if (it != orbit_index.end()) ++hits[it->second];
    }
    for (std::size_t k = 0; k < invariants.dimension(); ++k) {
      BigInt value = 0;
      for (std::size_t j = 0; j < hits.size(); ++j)
        if (hits[j]) value += invariants.kernel.basis[k][j] * hits[j];
      if (value != 0) pairing.add(k, c, Rational(value));
    }
  }
  report.omega_prime_rank = pairing.rank();
  return report;
}

bool omega_prime_verify(int n, int p, int q) { return omega_prime_report(n, p, q).passed(); }

std::size_t cross_traceless_invariant_dim(int n, int p, int q, int r, int s) {
  const auto guard = single_flight();
  if (p < 0 || q < 0 || r < 0 || s < 0) throw InputError("cross_traceless_invariant_dim: negative signature");
  if (n < std::max(p + q, r + s)) throw InputError("cross_traceless_invariant_dim: requires n >= max(p+q, r+s)");
  auto pairs = contraction_pairs(0, p, q);
  for (const auto& pair : contraction_pairs(p + q, r, s)) pairs.push_back(pair);
  return solve_invariants(n, mixed_signature(p, q) + mixed_signature(r, s), pairs).dimension();
}

}  // namespace albanese
