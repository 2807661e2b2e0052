#ifndef TERRACINI_FP_HPP
#define TERRACINI_FP_HPP

#include <cstdint>
#include <string>

#include "terracini/error.hpp"
#include "terracini/rng.hpp"

namespace terracini {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp,
                            std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1)
      acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin; the witness set below is proven complete for
// all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

} // namespace detail

// Draws a random prime p with 2^61 < p < 2^63.
inline std::uint64_t random_prime62(Rng &rng) {
  const std::uint64_t lo = 1ULL << 61, span = (1ULL << 63) - (1ULL << 61);
  for (;;) {
    std::uint64_t candidate = lo + rng.below(span);
    candidate |= 1;
    if (detail::is_prime_u64(candidate))
      return candidate;
  }
}

// Element of F_p for a runtime prime p. Every value carries its modulus so
// that mixing residues from different primes is detected, not absorbed.
class Fp {
public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  static Fp from_int(long long x, std::uint64_t p) {
    if (x >= 0)
      return Fp(static_cast<std::uint64_t>(x) % p, p);
    std::uint64_t m = static_cast<std::uint64_t>(-(x + 1)) + 1;
    std::uint64_t r = m % p;
    return Fp(r == 0 ? 0 : p - r, p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp &o) const {
    check(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_ || s < v_)
      s -= p_;
    return raw(s, p_);
  }
  Fp operator-(const Fp &o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator*(const Fp &o) const {
    check(o);
    return raw(detail::mulmod(v_, o.v_, p_), p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp inverse() const {
    if (v_ == 0)
      throw Error("Fp: inverse of zero");
    return raw(detail::powmod(v_, p_ - 2, p_), p_);
  }
  Fp operator/(const Fp &o) const { return *this * o.inverse(); }

  Fp &operator+=(const Fp &o) { return *this = *this + o; }
  Fp &operator-=(const Fp &o) { return *this = *this - o; }
  Fp &operator*=(const Fp &o) { return *this = *this * o; }

  bool operator==(const Fp &o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Fp &o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  void check(const Fp &o) const {
    if (p_ != o.p_)
      throw FieldMismatch("Fp: mixed moduli " + std::to_string(p_) + " and " +
                          std::to_string(o.p_));
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

inline Fp zero_like(const Fp &x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp &x) { return Fp(1, x.modulus()); }

// Field handle used by generic code to mint scalars of the right field.
struct FpField {
  using Scalar = Fp;
  std::uint64_t p;

  explicit FpField(std::uint64_t prime) : p(prime) {}

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(long long x) const { return Fp::from_int(x, p); }
  Fp from_fraction(long long num, long long den) const {
    return from_int(num) / from_int(den);
  }
  // "General point" coordinate: uniform residue.
  Fp random(Rng &rng) const { return Fp(rng.below(p), p); }
  std::string name() const { return "modp:" + std::to_string(p); }
};

} // namespace terracini

#endif // TERRACINI_FP_HPP
