#ifndef TERRACINI_VARIETY_HPP
#define TERRACINI_VARIETY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/mpoly.hpp"
#include "terracini/rng.hpp"
#include "terracini/upoly.hpp"

namespace terracini {

// A projective variety presented as a polynomial map from an affine
// parameter chart into P^r. Tangent spaces of the projective variety are
// recovered later by augmenting the Jacobian with the coordinate vector
// itself (the affine cone trick).
//
// `n` is the chart dimension. For the basic constructors it equals the
// image dimension; for derived charts (joins, tangential projections) the
// image may be smaller, and that drop is exactly the defect being measured.
template <class K> struct ParamVariety {
  std::string name;
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<MPoly<K>> coords; // r + 1 polynomials over a common chart
  std::set<std::string> tags;
  std::map<std::string, int> expected; // pinned regression values
  int claimed_vertex_dim = -1;         // accumulated by cone constructions

  const std::vector<std::string> &vars() const { return coords.at(0).vars(); }

  std::vector<K> eval(const std::vector<K> &point) const {
    std::vector<K> out;
    out.reserve(coords.size());
    for (const MPoly<K> &c : coords)
      out.push_back(c.eval(point));
    return out;
  }
};

template <class K> struct PointSample {
  std::vector<K> params;
  std::vector<K> ambient;
};

namespace detail {

inline std::vector<std::string> numbered_vars(const std::string &stem,
                                              std::size_t count) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= count; ++i)
    v.push_back(stem + std::to_string(i));
  return v;
}

inline std::vector<std::string>
fresh_vars(const std::vector<std::string> &existing, const std::string &stem,
           std::size_t count) {
  std::set<std::string> taken(existing.begin(), existing.end());
  std::vector<std::string> out;
  for (std::size_t i = 1; out.size() < count; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken.count(candidate))
      out.push_back(candidate);
  }
  return out;
}

inline void enumerate_degree(std::size_t n, unsigned deg, Exponents &cur,
                             std::size_t pos, std::vector<Exponents> &out) {
  if (pos + 1 == n) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (unsigned k = deg + 1; k-- > 0;) {
    cur[pos] = k;
    enumerate_degree(n, deg - k, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

// All exponent vectors of total degree <= d in n variables, by increasing
// degree then lexicographically; the constant slot comes first.
inline std::vector<Exponents> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  for (unsigned deg = 0; deg <= d; ++deg)
    enumerate_degree(n, deg, cur, 0, out);
  return out;
}

} // namespace detail

// The d-th Veronese chart of A^n: every monomial of degree <= d in the n
// affine parameters; r + 1 = C(n + d, d).
template <class F>
ParamVariety<typename F::Scalar> veronese(const F &field, std::size_t n,
                                          unsigned d) {
  using K = typename F::Scalar;
  if (n < 1 || d < 1)
    throw Error("veronese: need n >= 1 and d >= 1");
  std::vector<std::string> vars = detail::numbered_vars("u", n);
  std::vector<Exponents> mons = detail::monomials_up_to(n, d);
  ParamVariety<K> X;
  X.name = "veronese:" + std::to_string(n) + ":" + std::to_string(d);
  X.n = n;
  X.r = mons.size() - 1;
  for (const Exponents &e : mons) {
    MPoly<K> m(vars, field.zero());
    m.add_term(e, field.one());
    X.coords.push_back(m);
  }
  X.tags = {"smooth-claimed"};
  return X;
}

// Segre chart of P^a x P^b: pairwise products of two affine charts
// (1, x_1..x_a) and (1, y_1..y_b); n = a + b, r = ab + a + b.
template <class F>
ParamVariety<typename F::Scalar> segre(const F &field, std::size_t a,
                                       std::size_t b) {
  using K = typename F::Scalar;
  if (a < 1 || b < 1)
    throw Error("segre: need a >= 1 and b >= 1");
  std::vector<std::string> vars = detail::numbered_vars("x", a);
  for (const std::string &v : detail::numbered_vars("y", b))
    vars.push_back(v);
  ParamVariety<K> X;
  X.name = "segre:" + std::to_string(a) + ":" + std::to_string(b);
  X.n = a + b;
  X.r = (a + 1) * (b + 1) - 1;
  for (std::size_t i = 0; i <= a; ++i)
    for (std::size_t j = 0; j <= b; ++j) {
      Exponents e(a + b, 0);
      if (i > 0)
        e[i - 1] = 1;
      if (j > 0)
        e[a + j - 1] = 1;
      MPoly<K> m(vars, field.zero());
      m.add_term(e, field.one());
      X.coords.push_back(m);
    }
  X.tags = {"smooth-claimed"};
  return X;
}

// Rational normal curve chart (1, t, ..., t^d) in P^d.
template <class F>
ParamVariety<typename F::Scalar> rational_normal_curve(const F &field,
                                                       unsigned d) {
  using K = typename F::Scalar;
  if (d < 1)
    throw Error("rational_normal_curve: need d >= 1");
  std::vector<std::string> vars = {"t"};
  ParamVariety<K> X;
  X.name = "rnc:" + std::to_string(d);
  X.n = 1;
  X.r = d;
  for (unsigned i = 0; i <= d; ++i) {
    MPoly<K> m(vars, field.zero());
    m.add_term({i}, field.one());
    X.coords.push_back(m);
  }
  X.tags = {"smooth-claimed", "curve"};
  return X;
}

// Identity embedding of A^n into P^r (coordinates beyond n + 1 are zero);
// degenerate in P^r when r > n. Mostly a test fixture.
template <class F>
ParamVariety<typename F::Scalar> linear_chart(const F &field, std::size_t n,
                                              std::size_t r) {
  using K = typename F::Scalar;
  if (r < n)
    throw Error("linear_chart: need r >= n");
  std::vector<std::string> vars = detail::numbered_vars("u", n);
  ParamVariety<K> X;
  X.name = "linear:" + std::to_string(n) + ":" + std::to_string(r);
  X.n = n;
  X.r = r;
  X.coords.push_back(MPoly<K>::constant(vars, field.one()));
  for (std::size_t i = 0; i < n; ++i)
    X.coords.push_back(MPoly<K>::variable(vars, i, field.one()));
  for (std::size_t i = n + 1; i <= r; ++i)
    X.coords.push_back(MPoly<K>(vars, field.zero()));
  return X;
}

// Random chart of degree <= deg (first coordinate pinned to 1 so the chart
// is affine); generically immersive and non-degenerate.
template <class F>
ParamVariety<typename F::Scalar> random_chart(const F &field, std::size_t n,
                                              std::size_t r, unsigned deg,
                                              Rng &rng) {
  using K = typename F::Scalar;
  std::vector<std::string> vars = detail::numbered_vars("u", n);
  std::vector<Exponents> mons = detail::monomials_up_to(n, deg);
  ParamVariety<K> X;
  X.name = "random:" + std::to_string(n) + ":" + std::to_string(r) + ":" +
           std::to_string(deg);
  X.n = n;
  X.r = r;
  X.coords.push_back(MPoly<K>::constant(vars, field.one()));
  for (std::size_t c = 1; c <= r; ++c) {
    MPoly<K> m(vars, field.zero());
    for (const Exponents &e : mons)
      m.add_term(e, field.random(rng));
    X.coords.push_back(m);
  }
  return X;
}

// Cone over X with vertex the span of k fresh coordinate axes: the chart
// gains k parameters, each placed in its own new ambient slot.
template <class K>
ParamVariety<K> cone_over(const ParamVariety<K> &base, std::size_t k) {
  if (k < 1)
    throw Error("cone_over: need k >= 1");
  std::vector<std::string> vars = base.vars();
  std::vector<std::string> fresh = detail::fresh_vars(vars, "w", k);
  for (const std::string &v : fresh)
    vars.push_back(v);
  std::vector<std::size_t> slot_map;
  for (std::size_t i = 0; i < base.vars().size(); ++i)
    slot_map.push_back(i);
  ParamVariety<K> X;
  X.name = "cone:" + std::to_string(k) + ":" + base.name;
  X.n = base.n + k;
  X.r = base.r + k;
  for (const MPoly<K> &c : base.coords)
    X.coords.push_back(c.embedded(vars, slot_map));
  K one = one_like(base.coords[0].rep());
  for (std::size_t i = 0; i < k; ++i)
    X.coords.push_back(MPoly<K>::variable(vars, base.n + i, one));
  X.tags = base.tags;
  X.tags.erase("smooth-claimed"); // a cone is singular at its vertex
  X.tags.insert("cone");
  X.claimed_vertex_dim = base.claimed_vertex_dim < 0
                             ? static_cast<int>(k) - 1
                             : base.claimed_vertex_dim + static_cast<int>(k);
  return X;
}

// Projection of X from the row space of `center`. The new coordinates are a
// basis of the linear forms vanishing on the center, applied to the old
// coordinates; internal and external centers are treated alike.
template <class K>
ParamVariety<K> project(const ParamVariety<K> &base, const Matrix<K> &center) {
  if (center.rows() == 0)
    return base;
  if (center.cols() != base.r + 1)
    throw Error("project: center has wrong ambient dimension");
  if (center.rows() > base.r - 1)
    throw Error("project: center too large");
  if (center.rank() != center.rows())
    throw Error("project: center rank deficient");
  std::vector<std::vector<K>> functionals = center.kernel_basis();
  ParamVariety<K> X;
  X.name = base.name + "/proj" + std::to_string(center.rows());
  X.n = base.n;
  X.r = base.r - center.rows();
  for (const auto &w : functionals) {
    MPoly<K> c(base.vars(), base.coords[0].rep());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero())
        c = c + base.coords[i].scaled(w[i]);
    X.coords.push_back(c);
  }
  return X;
}

// Abstract join chart: parameters of X, parameters of Y, and one scaling
// parameter; coords = X(u) + lam * Y(v). The chart dimension nX + nY + 1 is
// the abstract join dimension; the image can be smaller.
template <class K>
ParamVariety<K> join(const ParamVariety<K> &a, const ParamVariety<K> &b) {
  if (a.r != b.r)
    throw Error("join: ambient dimensions differ");
  std::vector<std::string> vars = detail::numbered_vars("u", a.n);
  for (const std::string &v : detail::numbered_vars("v", b.n))
    vars.push_back(v);
  vars.push_back("lam");
  std::vector<std::size_t> amap, bmap;
  for (std::size_t i = 0; i < a.n; ++i)
    amap.push_back(i);
  for (std::size_t i = 0; i < b.n; ++i)
    bmap.push_back(a.n + i);
  K one = one_like(a.coords[0].rep());
  MPoly<K> lam = MPoly<K>::variable(vars, a.n + b.n, one);
  ParamVariety<K> X;
  X.name = "join(" + a.name + "," + b.name + ")";
  X.n = a.n + b.n + 1;
  X.r = a.r;
  for (std::size_t c = 0; c <= a.r; ++c)
    X.coords.push_back(a.coords[c].embedded(vars, amap) +
                       lam * b.coords[c].embedded(vars, bmap));
  return X;
}

// Fourfold scroll in 3-spaces: the rulings of a rational normal scroll
// surface in a P^6 are joined to a moving line of the dual conic
// (1, t, t^2) inside a disjoint plane. Rulings pairwise meet inside the
// plane, so the scroll is defective; the enveloped conic keeps it from
// being a cone.
template <class F>
ParamVariety<typename F::Scalar> scroll_ex1(const F &field) {
  using K = typename F::Scalar;
  std::vector<std::string> vars = {"t", "a", "b", "m"};
  auto poly = [&](std::initializer_list<std::pair<Exponents, long long>> ts) {
    MPoly<K> p(vars, field.zero());
    for (const auto &[e, c] : ts)
      p.add_term(e, field.from_int(c));
    return p;
  };
  ParamVariety<K> X;
  X.name = "scroll-ex1";
  X.n = 4;
  X.r = 9;
  // scroll surface part: (1, t, t^2) joined to a * (1, t, t^2, t^3)
  X.coords.push_back(poly({{{0, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{2, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{0, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{2, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{3, 1, 0, 0}, 1}}));
  // plane part: the line of the dual conic (1, t, t^2), spanned by
  // (t, -1, 0) and (t^2, 0, -1)
  X.coords.push_back(poly({{{1, 0, 1, 0}, 1}, {{2, 0, 0, 1}, 1}}));
  X.coords.push_back(poly({{{0, 0, 1, 0}, -1}}));
  X.coords.push_back(poly({{{0, 0, 0, 1}, -1}}));
  X.tags = {"scroll"};
  return X;
}

// Fourfold scroll in 3-spaces: the tangent planes of the Veronese surface
// along the conic (1, t, t^2) pairwise meet at a point and span only a P^5;
// each is joined to the matching point of a rational normal cubic in a
// complementary P^3.
template <class F>
ParamVariety<typename F::Scalar> scroll_ex2(const F &field) {
  using K = typename F::Scalar;
  std::vector<std::string> vars = {"t", "a", "b", "m"};
  auto poly = [&](std::initializer_list<std::pair<Exponents, long long>> ts) {
    MPoly<K> p(vars, field.zero());
    for (const auto &[e, c] : ts)
      p.add_term(e, field.from_int(c));
    return p;
  };
  ParamVariety<K> X;
  X.name = "scroll-ex2";
  X.n = 4;
  X.r = 9;
  // directrix curve part
  X.coords.push_back(poly({{{0, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{2, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{3, 0, 0, 0}, 1}}));
  // moving plane part: a*q(t)x0 + b*q(t)x1 + m*q(t)x2 with q(t) = (1,t,t^2),
  // quadric monomial order (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2)
  X.coords.push_back(poly({{{0, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 1, 0, 0}, 1}, {{0, 0, 1, 0}, 1}}));
  X.coords.push_back(poly({{{2, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}}));
  X.coords.push_back(poly({{{1, 0, 1, 0}, 1}}));
  X.coords.push_back(poly({{{2, 0, 1, 0}, 1}, {{1, 0, 0, 1}, 1}}));
  X.coords.push_back(poly({{{2, 0, 0, 1}, 1}}));
  X.tags = {"scroll"};
  return X;
}

// Fourfold scroll in 3-spaces inside P^9: the union of tangent spaces to
// the Veronese threefold of quadrics at the points 2H, where H runs over
// the twisted cubic (1, t, t^2, t^3) in the dual space. Chart: coefficients
// of gamma(t) * (x0 + c1 x1 + c2 x2 + c3 x3).
template <class F>
ParamVariety<typename F::Scalar> scroll_ex3(const F &field) {
  using K = typename F::Scalar;
  std::vector<std::string> vars = {"t", "c1", "c2", "c3"};
  auto poly = [&](std::initializer_list<std::pair<Exponents, long long>> ts) {
    MPoly<K> p(vars, field.zero());
    for (const auto &[e, c] : ts)
      p.add_term(e, field.from_int(c));
    return p;
  };
  ParamVariety<K> X;
  X.name = "scroll-ex3";
  X.n = 4;
  X.r = 9;
  // quadric monomial order: x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3,
  // x2^2, x2x3, x3^2; gamma(t) = x0 + t x1 + t^2 x2 + t^3 x3
  X.coords.push_back(poly({{{0, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{0, 1, 0, 0}, 1}, {{1, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{0, 0, 1, 0}, 1}, {{2, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{0, 0, 0, 1}, 1}, {{3, 0, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 0, 1, 0}, 1}, {{2, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{1, 0, 0, 1}, 1}, {{3, 1, 0, 0}, 1}}));
  X.coords.push_back(poly({{{2, 0, 1, 0}, 1}}));
  X.coords.push_back(poly({{{2, 0, 0, 1}, 1}, {{3, 0, 1, 0}, 1}}));
  X.coords.push_back(poly({{{3, 0, 0, 1}, 1}}));
  X.tags = {"scroll"};
  return X;
}

// Non-degeneracy of the chart in P^r: the r + 1 coordinates are linearly
// independent as polynomials.
template <class K> bool coords_independent(const ParamVariety<K> &X) {
  std::set<Exponents> support;
  for (const MPoly<K> &c : X.coords)
    for (const auto &[e, v] : c.terms())
      support.insert(e);
  std::vector<Exponents> cols(support.begin(), support.end());
  K zero = zero_like(X.coords[0].rep());
  Matrix<K> m(X.coords.size(), cols.size(), zero);
  for (std::size_t i = 0; i < X.coords.size(); ++i) {
    const auto &terms = X.coords[i].terms();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto it = terms.find(cols[j]);
      if (it != terms.end())
        m(i, j) = it->second;
    }
  }
  return m.rank() == X.coords.size();
}

// Random parameter point with its ambient image; redraws while every
// coordinate vanishes.
template <class F>
PointSample<typename F::Scalar>
random_point(const F &field, const ParamVariety<typename F::Scalar> &X,
             Rng &rng, int budget = 32) {
  using K = typename F::Scalar;
  for (int tries = 0; tries < budget; ++tries) {
    std::vector<K> params;
    for (std::size_t i = 0; i < X.n; ++i)
      params.push_back(field.random(rng));
    std::vector<K> ambient = X.eval(params);
    for (const K &c : ambient)
      if (!c.is_zero())
        return {params, ambient};
  }
  throw SampleError("random_point: every draw vanished on " + X.name);
}

// A parameter point of X lying on the hyperplane h (given by its r + 1
// coefficients): all but one parameter is fixed at random and the remaining
// univariate equation is solved over F_p; the solved slot rotates across
// retries.
inline PointSample<Fp> hyperplane_point(const FpField &field,
                                        const ParamVariety<Fp> &X,
                                        const std::vector<Fp> &h, Rng &rng,
                                        int budget = 32) {
  if (h.size() != X.r + 1)
    throw Error("hyperplane_point: hyperplane has wrong ambient dimension");
  MPoly<Fp> g(X.vars(), field.zero());
  for (std::size_t i = 0; i <= X.r; ++i)
    if (!h[i].is_zero())
      g = g + X.coords[i].scaled(h[i]);
  if (g.is_zero())
    throw Error("hyperplane_point: hyperplane vanishes identically on " +
                X.name);
  std::vector<std::string> tvars = {"t"};
  for (int tries = 0; tries < budget; ++tries) {
    std::size_t solve = X.n == 0 ? 0 : static_cast<std::size_t>(tries) % X.n;
    std::vector<Fp> fixed;
    std::vector<MPoly<Fp>> assignment;
    for (std::size_t i = 0; i < X.n; ++i) {
      Fp c = field.random(rng);
      fixed.push_back(c);
      if (i == solve)
        assignment.push_back(MPoly<Fp>::variable(tvars, 0, field.one()));
      else
        assignment.push_back(MPoly<Fp>::constant(tvars, c));
    }
    MPoly<Fp> restricted = g.substitute(assignment);
    // convert the single-variable polynomial to dense form
    int deg = restricted.degree();
    if (deg < 0) {
      // identically satisfied on this slice: any value works
      std::vector<Fp> params = fixed;
      params[solve] = field.random(rng);
      std::vector<Fp> ambient = X.eval(params);
      for (const Fp &c : ambient)
        if (!c.is_zero())
          return {params, ambient};
      continue;
    }
    std::vector<Fp> dense(static_cast<std::size_t>(deg) + 1, field.zero());
    for (const auto &[e, c] : restricted.terms())
      dense[e[0]] = c;
    UPoly<Fp> upoly(dense, field.zero());
    if (upoly.degree() == 0)
      continue; // nonzero constant: no root on this slice
    std::vector<Fp> roots = roots_in_field(upoly, rng);
    if (roots.empty())
      continue;
    std::vector<Fp> params = fixed;
    params[solve] = roots[0];
    std::vector<Fp> ambient = X.eval(params);
    bool ok = false;
    for (const Fp &c : ambient)
      if (!c.is_zero())
        ok = true;
    if (ok)
      return {params, ambient};
  }
  throw SampleError("hyperplane_point: retry budget exhausted on " + X.name);
}

} // namespace terracini

#endif // TERRACINI_VARIETY_HPP
