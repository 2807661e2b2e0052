#ifndef TERRACINI_MPOLY_HPP
#define TERRACINI_MPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "terracini/error.hpp"

namespace terracini {

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial over an exact scalar K. Terms live in an
// ordered map keyed by exponent vector, so iteration order (and therefore
// printing) is deterministic. No zero coefficient is ever stored.
template <class K> class MPoly {
public:
  MPoly(std::vector<std::string> vars, const K &rep)
      : vars_(std::move(vars)), rep_(zero_like(rep)) {}

  static MPoly constant(std::vector<std::string> vars, const K &c) {
    MPoly p(std::move(vars), c);
    if (!c.is_zero())
      p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }

  static MPoly variable(std::vector<std::string> vars, std::size_t index,
                        const K &one) {
    MPoly p(std::move(vars), one);
    Exponents e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.terms_[e] = one;
    return p;
  }

  const std::vector<std::string> &vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponents, K> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  K rep() const { return rep_; }

  int degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
      int t = 0;
      for (unsigned x : e)
        t += static_cast<int>(x);
      d = std::max(d, t);
    }
    return d; // -1 for the zero polynomial
  }

  void add_term(const Exponents &e, const K &c) {
    if (e.size() != vars_.size())
      throw Error("MPoly: exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero())
        terms_[e] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  MPoly operator+(const MPoly &o) const {
    check_vars(o);
    MPoly out = *this;
    for (const auto &[e, c] : o.terms_)
      out.add_term(e, c);
    return out;
  }

  MPoly operator-(const MPoly &o) const {
    check_vars(o);
    MPoly out = *this;
    for (const auto &[e, c] : o.terms_)
      out.add_term(e, -c);
    return out;
  }

  MPoly operator*(const MPoly &o) const {
    check_vars(o);
    MPoly out(vars_, rep_);
    for (const auto &[e1, c1] : terms_)
      for (const auto &[e2, c2] : o.terms_) {
        Exponents e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = e1[i] + e2[i];
        out.add_term(e, c1 * c2);
      }
    return out;
  }

  MPoly operator-() const {
    MPoly out(vars_, rep_);
    for (const auto &[e, c] : terms_)
      out.terms_[e] = -c;
    return out;
  }

  MPoly scaled(const K &c) const {
    MPoly out(vars_, rep_);
    if (c.is_zero())
      return out;
    for (const auto &[e, k] : terms_)
      out.terms_[e] = k * c;
    return out;
  }

  MPoly pow(unsigned n) const {
    MPoly acc = constant(vars_, one_like(rep_));
    for (unsigned i = 0; i < n; ++i)
      acc = acc * *this;
    return acc;
  }

  // Formal partial derivative with respect to vars()[index].
  MPoly diff(std::size_t index) const {
    if (index >= vars_.size())
      throw Error("MPoly: diff on unknown variable");
    MPoly out(vars_, rep_);
    for (const auto &[e, c] : terms_) {
      if (e[index] == 0)
        continue;
      Exponents d = e;
      d[index] -= 1;
      out.add_term(d, c * int_scalar(static_cast<long long>(e[index])));
    }
    return out;
  }

  K eval(const std::vector<K> &point) const {
    if (point.size() != vars_.size())
      throw Error("MPoly: eval arity mismatch");
    // power tables keep repeated exponents cheap
    std::vector<std::vector<K>> pows(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
      pows[i].push_back(one_like(rep_));
    K acc = rep_;
    for (const auto &[e, c] : terms_) {
      K term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        while (pows[i].size() <= e[i])
          pows[i].push_back(pows[i].back() * point[i]);
        if (e[i])
          term *= pows[i][e[i]];
      }
      acc += term;
    }
    return acc;
  }

  // Composition: every variable is replaced by the polynomial with the same
  // index in `assignment` (all over one common variable list).
  MPoly substitute(const std::vector<MPoly> &assignment) const {
    if (assignment.size() != vars_.size())
      throw Error("MPoly: substitute needs one polynomial per variable");
    const std::vector<std::string> &tvars =
        assignment.empty() ? vars_ : assignment[0].vars_;
    MPoly acc(tvars, rep_);
    for (const auto &[e, c] : terms_) {
      MPoly term = MPoly::constant(tvars, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i])
          term = term * assignment[i].pow(e[i]);
      acc = acc + term;
    }
    return acc;
  }

  // Re-expresses the polynomial over a larger variable list; slot_map[i]
  // tells where old variable i lives in the new list.
  MPoly embedded(const std::vector<std::string> &new_vars,
                 const std::vector<std::size_t> &slot_map) const {
    if (slot_map.size() != vars_.size())
      throw Error("MPoly: embed map arity mismatch");
    MPoly out(new_vars, rep_);
    for (const auto &[e, c] : terms_) {
      Exponents ne(new_vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        ne[slot_map[i]] = e[i];
      out.terms_[ne] = c;
    }
    return out;
  }

  bool operator==(const MPoly &o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly &o) const { return !(*this == o); }

  // Deterministic rendering that the expression grammar parses back.
  std::string str() const {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      std::string coeff = c.str();
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (first) {
        first = false;
        if (negative) {
          out += "-";
          coeff = coeff.substr(1);
        }
      } else {
        out += negative ? " - " : " + ";
        if (negative)
          coeff = coeff.substr(1);
      }
      std::string monomial;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!monomial.empty())
          monomial += "*";
        monomial += vars_[i];
        if (e[i] > 1)
          monomial += "^" + std::to_string(e[i]);
      }
      if (monomial.empty())
        out += coeff;
      else if (coeff == "1")
        out += monomial;
      else
        out += coeff + "*" + monomial;
    }
    return out;
  }

private:
  K int_scalar(long long n) const {
    K acc = rep_;
    K one = one_like(rep_);
    bool neg = n < 0;
    unsigned long long m = neg ? static_cast<unsigned long long>(-n)
                               : static_cast<unsigned long long>(n);
    for (unsigned long long i = 0; i < m; ++i)
      acc += one;
    return neg ? -acc : acc;
  }

  void check_vars(const MPoly &o) const {
    if (vars_ != o.vars_)
      throw Error("MPoly: operands use different variable lists");
  }

  std::vector<std::string> vars_;
  K rep_;
  std::map<Exponents, K> terms_;
};

} // namespace terracini

#endif // TERRACINI_MPOLY_HPP
