#pragma once

#include <optional>
#include <string>
#include <vector>

#include "albanese/types.hpp"

namespace albanese {

/// A basis element of the non-unital wheeled PROP on a inputs and b outputs:
/// inputs 1..a are split into b tree blocks (one per output, each of size at
/// least 2) and an unordered family of nonempty wheel blocks.
struct ForestStructure {
  int inputs = 0;
  /// tree_blocks[k] feeds output k+1; each block is sorted.
  std::vector<std::vector<int>> tree_blocks;
  /// Sorted blocks, ordered by smallest element.
  std::vector<std::vector<int>> wheel_blocks;

  int outputs() const { return static_cast<int>(tree_blocks.size()); }
  /// Σ(|tree block| - 1) + Σ|wheel block|.
  int degree() const;
  /// True when the blocks partition 1..inputs and tree blocks have size ≥ 2.
  bool is_valid() const;
  std::string to_string() const;

  friend bool operator==(const ForestStructure&, const ForestStructure&) = default;
};

/// Dimension of a graded hom-space together with the degree it sits in.
struct GradedDimension {
  int degree = 0;
  BigInt dimension = 0;
};

/// Every forest structure with a inputs and b outputs, deterministic order.
std::vector<ForestStructure> enumerate_structures(int a, int b);

/// dim C_{O↻}(a, b), concentrated in degree a − b. Counted in closed form
/// (ordered tree-block sizes times Bell numbers), not by enumeration.
GradedDimension count_nonunital_prop(int a, int b);

/// dim C_{P0↻}(p, q) = Σ_c C(p,c) C(q,c) c! · dim C_{O↻}(p−c, q−c), degree p − q.
GradedDimension count_wheeled_prop(int p, int q);

struct AutCohomology {
  int p = 0;
  int q = 0;
  /// The only degree that can be nonzero: p − q.
  int degree = 0;
  BigInt dimension = 0;
  /// min(max(3i+4, p+q), 2i+p+q+3) with i = p − q; empty when p < q.
  std::optional<int> stable_range;

  /// Dimension in an arbitrary degree (zero away from p − q).
  BigInt dimension_in_degree(int j) const { return j == degree ? dimension : BigInt(0); }
};

/// Stable dim H^*(Aut(F_n), H^{p,q}).
AutCohomology stable_aut_cohomology_dim(int p, int q);

/// multiplicity_pairing(W_{p−q}, H^{p,q}) == count_wheeled_prop(p, q).
/// Throws InputError when p < q.
bool cross_check_invariants(int p, int q);

BigInt bell_number(int k);

}  // namespace albanese
