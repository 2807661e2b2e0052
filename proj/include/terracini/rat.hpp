#ifndef TERRACINI_RAT_HPP
#define TERRACINI_RAT_HPP

#include <gmpxx.h>

#include <string>

#include "terracini/error.hpp"
#include "terracini/rng.hpp"

namespace terracini {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). A hard height cap turns runaway coefficient growth into an
// explicit error instead of a silent slowdown.
class Rat {
public:
  static constexpr std::size_t kDefaultHeightBits = 1u << 16;

  Rat() : q_(0) {}
  Rat(long long num) : q_(static_cast<long>(num)) {}
  Rat(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0)
      throw Error("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpq_class &q) : q_(q) { q_.canonicalize(); }
  explicit Rat(const std::string &s) : q_(s) { q_.canonicalize(); }

  const mpq_class &raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }

  Rat operator+(const Rat &o) const { return capped(q_ + o.q_); }
  Rat operator-(const Rat &o) const { return capped(q_ - o.q_); }
  Rat operator*(const Rat &o) const { return capped(q_ * o.q_); }
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator/(const Rat &o) const {
    if (o.is_zero())
      throw Error("Rat: division by zero");
    return capped(q_ / o.q_);
  }
  Rat inverse() const { return Rat(1) / *this; }

  Rat &operator+=(const Rat &o) { return *this = *this + o; }
  Rat &operator-=(const Rat &o) { return *this = *this - o; }
  Rat &operator*=(const Rat &o) { return *this = *this * o; }

  bool operator==(const Rat &o) const { return q_ == o.q_; }
  bool operator!=(const Rat &o) const { return q_ != o.q_; }
  bool operator<(const Rat &o) const { return q_ < o.q_; }

  std::string str() const { return q_.get_str(); }

  static std::size_t height_cap_bits;

private:
  static Rat capped(mpq_class q) {
    q.canonicalize();
    if (mpz_sizeinbase(q.get_num().get_mpz_t(), 2) > height_cap_bits ||
        mpz_sizeinbase(q.get_den().get_mpz_t(), 2) > height_cap_bits)
      throw HeightOverflow("Rat: height cap exceeded (" +
                           std::to_string(height_cap_bits) + " bits)");
    return Rat(q);
  }
  mpq_class q_;
};

inline std::size_t Rat::height_cap_bits = Rat::kDefaultHeightBits;

inline Rat zero_like(const Rat &) { return Rat(0); }
inline Rat one_like(const Rat &) { return Rat(1); }

struct RatField {
  using Scalar = Rat;

  // Symmetric window for random integer coordinates (spec of a "general
  // point" over Q).
  long long window = 10000;

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(long long x) const { return Rat(x); }
  Rat from_fraction(long long num, long long den) const {
    return Rat(num, den);
  }
  Rat random(Rng &rng) const {
    std::uint64_t span = static_cast<std::uint64_t>(2 * window + 1);
    long long x = static_cast<long long>(rng.below(span)) - window;
    return Rat(x);
  }
  std::string name() const { return "rational"; }
};

} // namespace terracini

#endif // TERRACINI_RAT_HPP
