#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace albanese {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0 and prints as "0".
///
/// Comparison operators are plain lexicographic on the parts; the canonical
/// output order used throughout the library is the reverse of that
/// (`std::greater<>`), i.e. decreasing lexicographic.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops trailing zeros before validating; convenient for highest weights.
  static Partition from_padded(std::vector<int> parts);
  /// Parses "2,1" or "0" (empty).
  static Partition parse(std::string_view text);
  /// The one-column partition (1^k).
  static Partition column(int k);
  /// The one-row partition (k).
  static Partition row(int k);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// Young-diagram containment: this ⊇ other.
  bool contains(const Partition& other) const;

  /// Partitions obtained by adding one box (in decreasing lex order).
  std::vector<Partition> add_box() const;
  /// Partitions obtained by removing one box (in decreasing lex order).
  std::vector<Partition> remove_box() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Pair (λ, μ) indexing the irreducible V_{λ,μ}: λ covariant, μ contravariant.
struct Bipartition {
  Partition covariant;
  Partition contravariant;

  /// Parses "1,1|1"; either side may be "0".
  static Bipartition parse(std::string_view text);
  std::string to_string() const;
  int length() const { return covariant.length() + contravariant.length(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// All partitions of k, optionally with at most max_length parts, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(int k, std::optional<int> max_length = std::nullopt);

}  // namespace albanese
