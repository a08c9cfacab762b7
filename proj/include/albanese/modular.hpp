#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "albanese/types.hpp"

namespace albanese {

/// Arithmetic in Z/pZ for a prime p < 2^63, products via 128-bit integers.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t reduce(const BigInt& v) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  /// Throws ConsistencyError on zero.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

/// The k-th prime below 2^62 (k = 0, 1, …), in decreasing order.
std::uint64_t large_prime(std::size_t k);

/// Combines x ≡ residue (mod modulus) with x ≡ r (mod p); returns the
/// residue modulo modulus·p in [0, modulus·p).
BigInt crt_combine(const BigInt& residue, const BigInt& modulus, std::uint64_t r, std::uint64_t p);

/// The unique a/b with |a|, b ≤ sqrt(m/2) and a ≡ b·x (mod m), if any.
std::optional<Rational> rational_reconstruct(const BigInt& x, const BigInt& m);

}  // namespace albanese
