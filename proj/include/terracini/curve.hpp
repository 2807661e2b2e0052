#ifndef TERRACINI_CURVE_HPP
#define TERRACINI_CURVE_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/rat.hpp"
#include "terracini/upoly.hpp"

namespace terracini {

// A rational curve in P^4 given by the t-chart of five binary forms of
// degree d. Validity: the five chart polynomials are coprime and at least
// one has degree exactly d (no base point, at infinity either), and they
// are linearly independent (the curve is non-degenerate in P^4).
struct RationalCurveP4 {
  unsigned d = 0;
  std::array<UPoly<Rat>, 5> forms{UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                  UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                  UPoly<Rat>(Rat(0))};
};

inline unsigned curve_degree_cap = 40;

inline RationalCurveP4 make_curve(unsigned d,
                                  std::array<UPoly<Rat>, 5> forms) {
  if (d > curve_degree_cap)
    throw Error("curve: degree exceeds cap " +
                std::to_string(curve_degree_cap));
  int max_deg = -1;
  for (const auto &f : forms)
    max_deg = std::max(max_deg, f.degree());
  if (max_deg != static_cast<int>(d))
    throw Error("curve: no coordinate of degree d (base point at infinity "
                "or wrong degree)");
  std::vector<UPoly<Rat>> nonzero;
  for (const auto &f : forms)
    if (!f.is_zero())
      nonzero.push_back(f);
  ContentReport content = content_and_orders(nonzero);
  if (content.gcd_degree != 0)
    throw Error("curve: coordinates share a factor (base point)");
  // linear independence of the five forms
  Matrix<Rat> coeffs(5, d + 1, Rat(0));
  for (std::size_t i = 0; i < 5; ++i)
    for (unsigned j = 0; j <= d; ++j)
      coeffs(i, j) = forms[i].coeff(j);
  if (coeffs.rank() != 5)
    throw Error("curve: coordinates are linearly dependent (degenerate)");
  return RationalCurveP4{d, std::move(forms)};
}

namespace detail {

// All (k+1)-minors of the matrix of derivatives (rows f, f', ..., f^(k)),
// for k = 0..4, built level by level with Laplace expansion along the last
// row. levels[k] maps a sorted column subset of size k+1 to its minor.
inline std::array<std::map<std::vector<int>, UPoly<Rat>>, 5>
minor_levels(const std::array<UPoly<Rat>, 5> &forms) {
  std::vector<std::vector<UPoly<Rat>>> deriv(
      5, std::vector<UPoly<Rat>>(5, UPoly<Rat>(Rat(0))));
  for (int j = 0; j < 5; ++j)
    deriv[0][j] = forms[j];
  for (int k = 1; k < 5; ++k)
    for (int j = 0; j < 5; ++j)
      deriv[k][j] = deriv[k - 1][j].derivative();

  std::array<std::map<std::vector<int>, UPoly<Rat>>, 5> levels;
  for (int j = 0; j < 5; ++j)
    levels[0].insert({{j}, deriv[0][j]});
  for (int k = 1; k < 5; ++k) {
    // iterate over subsets of {0..4} of size k+1
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(subset.size()) == k + 1) {
        UPoly<Rat> det(Rat(0));
        for (int p = 0; p <= k; ++p) {
          std::vector<int> rest = subset;
          rest.erase(rest.begin() + p);
          UPoly<Rat> term = deriv[k][subset[p]] * levels[k - 1].at(rest);
          if ((k + p) % 2 == 0)
            det = det + term;
          else
            det = det - term;
        }
        levels[k].insert({subset, det});
        return;
      }
      for (int j = start; j < 5; ++j) {
        subset.push_back(j);
        rec(j + 1);
        subset.pop_back();
      }
    };
    rec(0);
  }
  return levels;
}

// Minimum vanishing order at t0 over the nonzero minors of one level; the
// gcd of the minors vanishes to exactly this order.
inline unsigned min_order_at(const std::map<std::vector<int>, UPoly<Rat>> &lvl,
                             const Rat &t0, const std::string &what) {
  bool seen = false;
  unsigned best = 0;
  for (const auto &[cols, m] : lvl) {
    if (m.is_zero())
      continue;
    unsigned o = order_at(m, t0);
    best = seen ? std::min(best, o) : o;
    seen = true;
  }
  if (!seen)
    throw Error("curve: all minors vanish identically (" + what + ")");
  return best;
}

inline std::array<UPoly<Rat>, 5>
reciprocal_forms(const RationalCurveP4 &C) {
  std::array<UPoly<Rat>, 5> out{UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                UPoly<Rat>(Rat(0))};
  for (int j = 0; j < 5; ++j)
    out[j] = C.forms[j].reciprocal(C.d);
  return out;
}

} // namespace detail

// Total stationary orders T_0..T_4: for each k, the degree of the gcd of
// all (k+1)-minors of the derivative matrix, plus the same quantity at the
// infinite chart point computed in the reciprocal chart. T_k is the sum
// over all branches (at any complex parameter) of the cumulative deviation
// of the branch order sequence, with no root isolation needed.
inline std::array<unsigned, 5> stationary_totals(const RationalCurveP4 &C) {
  auto finite = detail::minor_levels(C.forms);
  auto infinite = detail::minor_levels(detail::reciprocal_forms(C));
  std::array<unsigned, 5> T{};
  for (int k = 0; k < 5; ++k) {
    std::vector<UPoly<Rat>> minors;
    for (const auto &[cols, m] : finite[k])
      if (!m.is_zero())
        minors.push_back(m);
    if (minors.empty())
      throw Error("curve: all minors vanish identically (level " +
                  std::to_string(k) + ")");
    ContentReport content = content_and_orders(minors);
    unsigned at_infinity =
        detail::min_order_at(infinite[k], Rat(0), "reciprocal chart");
    T[k] = content.gcd_degree + at_infinity;
  }
  return T;
}

struct BranchRanks {
  bool at_infinity = false;
  Rat t0 = Rat(0);
  std::array<unsigned, 5> orders{}; // a_0 <= ... <= a_4
  std::array<unsigned, 4> ranks{};  // successive differences
};

// Rank sequence of the branch at a rational parameter (or at infinity):
// the cumulative stationary orders are read off the minor orders and the
// order sequence is recovered as a_k = s_k - s_(k-1) + k.
inline BranchRanks branch_rank_sequence(const RationalCurveP4 &C,
                                        const Rat &t0, bool at_infinity) {
  auto levels = at_infinity
                    ? detail::minor_levels(detail::reciprocal_forms(C))
                    : detail::minor_levels(C.forms);
  Rat where = at_infinity ? Rat(0) : t0;
  std::array<unsigned, 5> s{};
  for (int k = 0; k < 5; ++k)
    s[k] = detail::min_order_at(levels[k], where,
                                "level " + std::to_string(k));
  BranchRanks out;
  out.at_infinity = at_infinity;
  out.t0 = t0;
  for (int k = 0; k < 5; ++k) {
    unsigned prev = k == 0 ? 0 : s[k - 1];
    out.orders[k] = s[k] - prev + static_cast<unsigned>(k);
  }
  for (int k = 0; k < 4; ++k)
    out.ranks[k] = out.orders[k + 1] - out.orders[k];
  return out;
}

struct CurveRankReport {
  unsigned d = 0;
  std::array<unsigned, 5> T{};   // total stationary orders
  std::array<long long, 4> S{};  // sums of (rank - 1) over all branches
  long long n1 = 0, n2 = 0, n3 = 0;
  std::vector<std::pair<std::string, bool>> checks;
  bool ok = true;
};

// Degrees of the tangent developable (n1), the osculating-plane threefold
// (n2) and the dual curve (n3), from the totals; the four rank identities
// and the total-weight identity are theorems, so they double as self-tests
// of both the implementation and the input.
inline CurveRankReport ranks(const RationalCurveP4 &C) {
  CurveRankReport rep;
  rep.d = C.d;
  rep.T = stationary_totals(C);
  long long d = C.d;
  long long T0 = rep.T[0], T1 = rep.T[1], T2 = rep.T[2], T3 = rep.T[3],
            T4 = rep.T[4];
  rep.S[0] = T1 - 2 * T0;
  rep.S[1] = T2 - 2 * T1 + T0;
  rep.S[2] = T3 - 2 * T2 + T1;
  rep.S[3] = T4 - 2 * T3 + T2;
  long long S0 = rep.S[0], S1 = rep.S[1], S2 = rep.S[2], S3 = rep.S[3];
  rep.n1 = 2 * (d - 1) - S0;
  rep.n2 = 3 * (d - 2) - (2 * S0 + S1);
  rep.n3 = 4 * (d - 3) - (3 * S0 + 2 * S1 + S2);
  rep.checks.emplace_back("rank-identity-1", S0 + rep.n1 == 2 * d - 2);
  rep.checks.emplace_back("rank-identity-2",
                          S1 + d + rep.n2 == 2 * rep.n1 - 2);
  rep.checks.emplace_back("rank-identity-3",
                          S2 + rep.n1 + rep.n3 == 2 * rep.n2 - 2);
  rep.checks.emplace_back("rank-identity-4", S3 + rep.n2 == 2 * rep.n3 - 2);
  rep.checks.emplace_back("total-weight", 4 * S0 + 3 * S1 + 2 * S2 + S3 ==
                                              5 * d - 20);
  rep.checks.emplace_back("base-point-free", T0 == 0);
  rep.checks.emplace_back("nonnegative", S0 >= 0 && S1 >= 0 && S2 >= 0 &&
                                             S3 >= 0 && rep.n1 >= 0 &&
                                             rep.n2 >= 0 && rep.n3 >= 0);
  for (const auto &[name, pass] : rep.checks)
    rep.ok = rep.ok && pass;
  return rep;
}

// Reparameterization t -> (a t + b) / (c t + e) with ae - bc != 0, applied
// to the degree-d binary forms.
inline RationalCurveP4 reparameterize(const RationalCurveP4 &C, const Rat &a,
                                      const Rat &b, const Rat &c,
                                      const Rat &e) {
  if ((a * e - b * c).is_zero())
    throw Error("reparameterize: transform is singular");
  UPoly<Rat> top({b, a}, Rat(0));    // a t + b
  UPoly<Rat> bottom({e, c}, Rat(0)); // c t + e
  std::array<UPoly<Rat>, 5> out{UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                UPoly<Rat>(Rat(0))};
  // powers shared across coordinates
  std::vector<UPoly<Rat>> top_pow{UPoly<Rat>::constant(Rat(1))};
  std::vector<UPoly<Rat>> bottom_pow{UPoly<Rat>::constant(Rat(1))};
  for (unsigned i = 1; i <= C.d; ++i) {
    top_pow.push_back(top_pow.back() * top);
    bottom_pow.push_back(bottom_pow.back() * bottom);
  }
  for (int j = 0; j < 5; ++j) {
    UPoly<Rat> acc(Rat(0));
    for (unsigned i = 0; i <= C.d; ++i) {
      Rat coeff = C.forms[j].coeff(i);
      if (coeff.is_zero())
        continue;
      acc = acc + (top_pow[i] * bottom_pow[C.d - i]).scaled(coeff);
    }
    out[j] = acc;
  }
  return make_curve(C.d, std::move(out));
}

// Invertible linear change of coordinates on P^4.
inline RationalCurveP4 linear_transform(const RationalCurveP4 &C,
                                        const Matrix<Rat> &m) {
  if (m.rows() != 5 || m.cols() != 5 || m.rank() != 5)
    throw Error("linear_transform: need an invertible 5x5 matrix");
  std::array<UPoly<Rat>, 5> out{UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                UPoly<Rat>(Rat(0)), UPoly<Rat>(Rat(0)),
                                UPoly<Rat>(Rat(0))};
  for (int i = 0; i < 5; ++i) {
    UPoly<Rat> acc(Rat(0));
    for (int j = 0; j < 5; ++j)
      if (!m(i, j).is_zero())
        acc = acc + C.forms[j].scaled(m(i, j));
    out[i] = acc;
  }
  return make_curve(C.d, std::move(out));
}

} // namespace terracini

#endif // TERRACINI_CURVE_HPP
