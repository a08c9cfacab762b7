#include "albanese/prop.hpp"

#include <algorithm>
#include <numeric>

#include "albanese/combinatorics.hpp"
#include "albanese/homology.hpp"
#include "albanese/schur_calculus.hpp"

namespace albanese {

int ForestStructure::degree() const {
  int total = 0;
  for (const auto& block : tree_blocks) total += static_cast<int>(block.size()) - 1;
  for (const auto& block : wheel_blocks) total += static_cast<int>(block.size());
  return total;
}

bool ForestStructure::is_valid() const {
  std::vector<int> seen;
  for (const auto& block : tree_blocks) {
    if (block.size() < 2) return false;
    seen.insert(seen.end(), block.begin(), block.end());
  }
  for (const auto& block : wheel_blocks) {
    if (block.empty()) return false;
    seen.insert(seen.end(), block.begin(), block.end());
  }
  std::sort(seen.begin(), seen.end());
  std::vector<int> expected(static_cast<std::size_t>(inputs));
  std::iota(expected.begin(), expected.end(), 1);
  return seen == expected;
}

std::string ForestStructure::to_string() const {
  auto block_text = [](const std::vector<int>& block) {
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + std::to_string(block[i]);
    return out + "}";
  };
  std::string out = "trees[";
  for (std::size_t i = 0; i < tree_blocks.size(); ++i) out += (i ? " " : "") + block_text(tree_blocks[i]);
  out += "] wheels[";
  for (std::size_t i = 0; i < wheel_blocks.size(); ++i) out += (i ? " " : "") + block_text(wheel_blocks[i]);
  return out + "]";
}

namespace {

// Calls emit(subset, rest) for every subset of `pool` of size >= min_size.
template <class Emit>
void for_each_subset(const std::vector<int>& pool, std::size_t min_size, Emit&& emit) {
  const std::size_t n = pool.size();
  for (std::size_t size = min_size; size <= n; ++size) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<int> subset, rest;
      for (std::size_t i = 0; i < n; ++i) (mask[i] ? subset : rest).push_back(pool[i]);
      emit(subset, rest);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

void set_partitions(const std::vector<int>& pool, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (pool.empty()) {
    out.push_back(current);
    return;
  }
  const int first = pool.front();
  const std::vector<int> others(pool.begin() + 1, pool.end());
  for_each_subset(others, 0, [&](const std::vector<int>& companions, const std::vector<int>& rest) {
    std::vector<int> block{first};
    block.insert(block.end(), companions.begin(), companions.end());
    current.push_back(block);
    set_partitions(rest, current, out);
    current.pop_back();
  });
}

void choose_trees(int outputs_left, const std::vector<int>& pool, ForestStructure& current,
                  std::vector<ForestStructure>& out) {
  if (outputs_left == 0) {
    std::vector<std::vector<std::vector<int>>> wheelings;
    std::vector<std::vector<int>> scratch;
    set_partitions(pool, scratch, wheelings);
    for (auto& wheels : wheelings) {
      ForestStructure s = current;
      s.wheel_blocks = std::move(wheels);
      out.push_back(std::move(s));
    }
    return;
  }
  if (pool.size() < 2 * static_cast<std::size_t>(outputs_left)) return;
  for_each_subset(pool, 2, [&](const std::vector<int>& block, const std::vector<int>& rest) {
    current.tree_blocks.push_back(block);
    choose_trees(outputs_left - 1, rest, current, out);
    current.tree_blocks.pop_back();
  });
}

BigInt ordered_tree_blocks(int outputs, int inputs) {
  if (outputs == 0) return bell_number(inputs);
  BigInt total = 0;
  for (int size = 2; size <= inputs - 2 * (outputs - 1); ++size)
    total += binomial(inputs, size) * ordered_tree_blocks(outputs - 1, inputs - size);
  return total;
}

}  // namespace

BigInt bell_number(int k) {
  if (k < 0) throw InputError("bell_number: k must be nonnegative");
  // Bell triangle.
  std::vector<BigInt> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<ForestStructure> enumerate_structures(int a, int b) {
  if (a < 0 || b < 0) throw InputError("enumerate_structures: a and b must be nonnegative");
  std::vector<int> pool(static_cast<std::size_t>(a));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<ForestStructure> out;
  ForestStructure current;
  current.inputs = a;
  choose_trees(b, pool, current, out);
  return out;
}

GradedDimension count_nonunital_prop(int a, int b) {
  if (a < 0 || b < 0) throw InputError("count_nonunital_prop: a and b must be nonnegative");
  GradedDimension out;
  out.degree = a - b;
  out.dimension = a < 2 * b ? BigInt(0) : ordered_tree_blocks(b, a);
  return out;
}

GradedDimension count_wheeled_prop(int p, int q) {
  if (p < 0 || q < 0) throw InputError("count_wheeled_prop: p and q must be nonnegative");
  GradedDimension out;
  out.degree = p - q;
  for (int c = 0; c <= std::min(p, q); ++c) {
    out.dimension += binomial(p, c) * binomial(q, c) * factorial(c) * count_nonunital_prop(p - c, q - c).dimension;
  }
  return out;
}

AutCohomology stable_aut_cohomology_dim(int p, int q) {
  AutCohomology out;
  out.p = p;
  out.q = q;
  const GradedDimension dim = count_wheeled_prop(p, q);
  out.degree = dim.degree;
  out.dimension = dim.dimension;
  if (p >= q) {
    const int i = p - q;
    out.stable_range = std::min(std::max(3 * i + 4, p + q), 2 * i + p + q + 3);
  }
  return out;
}

bool cross_check_invariants(int p, int q) {
  if (p < 0 || q < 0 || p < q) throw InputError("cross_check_invariants: need p >= q >= 0");
  const BigInt representation_route = multiplicity_pairing(albanese_w(p - q), decompose_mixed_tensor(p, q));
  return representation_route == count_wheeled_prop(p, q).dimension;
}

}  // namespace albanese
