#ifndef TERRACINI_UPOLY_HPP
#define TERRACINI_UPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "terracini/error.hpp"
#include "terracini/fp.hpp"
#include "terracini/rat.hpp"
#include "terracini/rng.hpp"

namespace terracini {

// Dense univariate polynomial; coeffs_[i] is the coefficient of t^i and the
// leading coefficient is nonzero unless the polynomial is zero (empty list).
template <class K> class UPoly {
public:
  explicit UPoly(const K &rep) : rep_(zero_like(rep)) {}
  UPoly(std::vector<K> coeffs, const K &rep)
      : rep_(zero_like(rep)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static UPoly zero(const K &rep) { return UPoly(rep); }
  static UPoly constant(const K &c) { return UPoly({c}, c); }
  static UPoly monomial(unsigned deg, const K &c) {
    std::vector<K> v(deg + 1, zero_like(c));
    v[deg] = c;
    return UPoly(std::move(v), c);
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  K rep() const { return rep_; }
  const std::vector<K> &coeffs() const { return coeffs_; }

  K coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : rep_;
  }
  K leading() const {
    if (is_zero())
      throw Error("UPoly: leading coefficient of zero");
    return coeffs_.back();
  }

  UPoly operator+(const UPoly &o) const {
    std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), rep_);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = coeff(i) + o.coeff(i);
    return UPoly(std::move(v), rep_);
  }
  UPoly operator-(const UPoly &o) const {
    std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), rep_);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = coeff(i) - o.coeff(i);
    return UPoly(std::move(v), rep_);
  }
  UPoly operator*(const UPoly &o) const {
    if (is_zero() || o.is_zero())
      return UPoly(rep_);
    std::vector<K> v(coeffs_.size() + o.coeffs_.size() - 1, rep_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero())
        continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UPoly(std::move(v), rep_);
  }
  UPoly operator-() const {
    std::vector<K> v = coeffs_;
    for (K &c : v)
      c = -c;
    return UPoly(std::move(v), rep_);
  }
  UPoly scaled(const K &c) const {
    std::vector<K> v = coeffs_;
    for (K &x : v)
      x *= c;
    return UPoly(std::move(v), rep_);
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1)
      return UPoly(rep_);
    std::vector<K> v(coeffs_.size() - 1, rep_);
    K n = one_like(rep_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      v[i - 1] = coeffs_[i] * n;
      n += one_like(rep_);
    }
    return UPoly(std::move(v), rep_);
  }

  K eval(const K &x) const {
    K acc = rep_;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc * x + coeffs_[i];
    return acc;
  }

  // Quotient and remainder; requires an invertible leading coefficient.
  std::pair<UPoly, UPoly> divmod(const UPoly &d) const {
    if (d.is_zero())
      throw Error("UPoly: division by zero polynomial");
    UPoly r = *this;
    std::vector<K> q(
        std::max<int>(0, degree() - d.degree() + 1), rep_);
    K lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      K c = r.leading() * lead_inv;
      q[shift] = c;
      std::vector<K> nv = r.coeffs_;
      for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
        nv[i + shift] -= c * d.coeffs_[i];
      r = UPoly(std::move(nv), rep_);
    }
    return {UPoly(std::move(q), rep_), r};
  }

  UPoly monic() const {
    if (is_zero())
      return *this;
    return scaled(leading().inverse());
  }

  // Image under t -> 1/s followed by clearing the pole with s^ref_degree:
  // p(t) of degree <= ref_degree becomes s^ref_degree * p(1/s).
  UPoly reciprocal(unsigned ref_degree) const {
    if (degree() > static_cast<int>(ref_degree))
      throw Error("UPoly: reciprocal reference degree too small");
    std::vector<K> v(ref_degree + 1, rep_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      v[ref_degree - i] = coeffs_[i];
    return UPoly(std::move(v), rep_);
  }

  bool operator==(const UPoly &o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UPoly &o) const { return !(*this == o); }

  std::string str(const std::string &var = "t") const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero())
        continue;
      if (!out.empty())
        out += " + ";
      if (i == 0)
        out += coeffs_[i].str();
      else if (coeffs_[i] == one_like(rep_))
        out += var + (i > 1 ? "^" + std::to_string(i) : "");
      else
        out += coeffs_[i].str() + "*" + var +
               (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
      coeffs_.pop_back();
  }
  K rep_;
  std::vector<K> coeffs_;
};

// Vanishing order of p at t0 (repeated exact division by t - t0). p must be
// nonzero.
template <class K> unsigned order_at(const UPoly<K> &p, const K &t0) {
  if (p.is_zero())
    throw Error("order_at: zero polynomial");
  UPoly<K> linear({-t0, one_like(t0)}, t0);
  UPoly<K> cur = p;
  unsigned ord = 0;
  for (;;) {
    auto [q, r] = cur.divmod(linear);
    if (!r.is_zero())
      return ord;
    ++ord;
    cur = q;
  }
}

// Order at the infinite chart point relative to a caller-supplied reference
// degree (the natural degree of the family p belongs to).
template <class K>
unsigned order_at_infinity(const UPoly<K> &p, unsigned reference_degree) {
  if (p.is_zero())
    throw Error("order_at_infinity: zero polynomial");
  return reference_degree - static_cast<unsigned>(p.degree());
}

// Monic Euclidean gcd; fine over F_p, where coefficients cannot grow.
template <class K> UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

using ZPoly = std::vector<mpz_class>; // coeffs_[i] * t^i, trimmed

inline void ztrim(ZPoly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

inline mpz_class zcontent(const ZPoly &a) {
  mpz_class g = 0;
  for (const mpz_class &c : a)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline void zprimitive(ZPoly &a) {
  mpz_class g = zcontent(a);
  if (g == 0)
    return;
  for (mpz_class &c : a)
    c /= g;
  if (!a.empty() && a.back() < 0)
    for (mpz_class &c : a)
      c = -c;
}

// Pseudo-remainder of a by b (lc(b)^(deg a - deg b + 1) * a mod b).
inline ZPoly zpseudo_rem(ZPoly a, const ZPoly &b) {
  int db = static_cast<int>(b.size()) - 1;
  const mpz_class &lead = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    mpz_class c = a.back();
    for (mpz_class &x : a)
      x *= lead;
    for (int i = 0; i <= db; ++i)
      a[i + shift] -= c * b[i];
    ztrim(a);
  }
  return a;
}

// Primitive pseudo-remainder sequence: content is stripped at every step,
// which keeps coefficient sizes linear instead of exponential.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  zprimitive(a);
  zprimitive(b);
  if (a.empty())
    return b;
  if (b.empty())
    return a;
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zpseudo_rem(a, b);
    zprimitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline ZPoly to_zpoly(const UPoly<Rat> &p) {
  mpz_class den = 1;
  for (const Rat &c : p.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  ZPoly out;
  for (const Rat &c : p.coeffs())
    out.push_back(c.numerator() * (den / c.denominator()));
  ztrim(out);
  return out;
}

inline UPoly<Rat> from_zpoly(const ZPoly &z) {
  std::vector<Rat> v;
  for (const mpz_class &c : z)
    v.push_back(Rat(mpq_class(c)));
  return UPoly<Rat>(std::move(v), Rat(0));
}

} // namespace detail

// Gcd over Q via the primitive integer sequence, returned monic.
inline UPoly<Rat> gcd(const UPoly<Rat> &a, const UPoly<Rat> &b) {
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  detail::ZPoly g = detail::zgcd(detail::to_zpoly(a), detail::to_zpoly(b));
  return detail::from_zpoly(g).monic();
}

struct ContentReport {
  UPoly<Rat> gcd;
  unsigned gcd_degree;
  unsigned order_at_infinity;
};

// Monic gcd of a nonzero list plus the vanishing order of the coefficient
// system at the infinite chart point (degrees measured against the largest
// degree present in the list).
inline ContentReport content_and_orders(const std::vector<UPoly<Rat>> &ps) {
  int max_deg = -1;
  for (const UPoly<Rat> &p : ps)
    max_deg = std::max(max_deg, p.degree());
  if (ps.empty() || max_deg < 0)
    throw Error("content_and_orders: all-zero input");
  UPoly<Rat> g = UPoly<Rat>::zero(Rat(0));
  unsigned inf = static_cast<unsigned>(max_deg);
  for (const UPoly<Rat> &p : ps) {
    if (p.is_zero())
      continue;
    g = gcd(g, p);
    inf = std::min(inf, order_at_infinity(p, static_cast<unsigned>(max_deg)));
  }
  return ContentReport{g, static_cast<unsigned>(g.degree()), inf};
}

// t^e mod f over F_p by repeated squaring; used to split f into its linear
// part via gcd(f, t^p - t).
inline UPoly<Fp> powmod(const UPoly<Fp> &base, std::uint64_t e,
                        const UPoly<Fp> &mod) {
  UPoly<Fp> acc = UPoly<Fp>::constant(one_like(base.rep()));
  UPoly<Fp> b = base.divmod(mod).second;
  while (e) {
    if (e & 1)
      acc = (acc * b).divmod(mod).second;
    b = (b * b).divmod(mod).second;
    e >>= 1;
  }
  return acc;
}

// All roots of f in F_p (Cantor-Zassenhaus equal-degree splitting on the
// product of linear factors), sorted for determinism.
inline std::vector<Fp> roots_in_field(const UPoly<Fp> &f, Rng &rng) {
  std::vector<Fp> roots;
  if (f.is_zero() || f.degree() == 0)
    return roots;
  std::uint64_t p = f.leading().modulus();
  Fp one(1, p), zero(0, p);
  UPoly<Fp> x = UPoly<Fp>::monomial(1, one);
  UPoly<Fp> xq = powmod(x, p, f);
  UPoly<Fp> linear_part = gcd(f, xq - x);
  std::vector<UPoly<Fp>> stack;
  if (linear_part.degree() >= 1)
    stack.push_back(linear_part.monic());
  while (!stack.empty()) {
    UPoly<Fp> s = stack.back();
    stack.pop_back();
    if (s.degree() == 1) {
      roots.push_back(-s.coeff(0));
      continue;
    }
    for (;;) {
      Fp shift(rng.below(p), p);
      UPoly<Fp> probe({shift, one}, zero);
      UPoly<Fp> h = powmod(probe, (p - 1) / 2, s) -
                    UPoly<Fp>::constant(one);
      UPoly<Fp> w = gcd(s, h);
      if (w.degree() >= 1 && w.degree() < s.degree()) {
        stack.push_back(w.monic());
        stack.push_back(s.divmod(w).first.monic());
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Fp &a, const Fp &b) { return a.value() < b.value(); });
  return roots;
}

} // namespace terracini

#endif // TERRACINI_UPOLY_HPP
