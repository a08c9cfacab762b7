#include "albanese/modular.hpp"

#include <mutex>

namespace albanese {

std::uint64_t PrimeField::reduce(const BigInt& v) const {
  BigInt r = v % BigInt(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return static_cast<std::uint64_t>(r.get_ui());
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t result = 1;
  base %= p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ConsistencyError("inverse of zero modulo a prime");
  return pow(a, p_ - 2);
}

std::uint64_t large_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mutex);
  BigInt candidate = primes.empty() ? BigInt(1UL << 62) : BigInt(static_cast<unsigned long>(primes.back()));
  while (primes.size() <= k) {
    do {
      candidate -= 1;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 40) == 0);
    primes.push_back(static_cast<std::uint64_t>(candidate.get_ui()));
  }
  return primes[k];
}

BigInt crt_combine(const BigInt& residue, const BigInt& modulus, std::uint64_t r, std::uint64_t p) {
  const PrimeField field(p);
  // x = residue + modulus·t with t ≡ (r − residue)/modulus (mod p).
  const std::uint64_t t = field.mul(field.sub(r, field.reduce(residue)), field.inv(field.reduce(modulus)));
  BigInt x = residue + modulus * BigInt(static_cast<unsigned long>(t));
  const BigInt m = modulus * BigInt(static_cast<unsigned long>(p));
  x %= m;
  if (x < 0) x += m;
  return x;
}

std::optional<Rational> rational_reconstruct(const BigInt& x, const BigInt& m) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
  BigInt r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace albanese
