#ifndef TERRACINI_EXPR_HPP
#define TERRACINI_EXPR_HPP

#include <cctype>
#include <string>
#include <vector>

#include "terracini/error.hpp"
#include "terracini/mpoly.hpp"

namespace terracini {

struct ParseError : Error {
  int line, col;
  ParseError(const std::string &msg, int line_, int col_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(col_)),
        line(line_), col(col_) {}
};

// Recursive-descent parser for polynomial expressions:
//
//   expr     := '-'? term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' natural)?
//   atom     := rational | identifier | '(' expr ')'
//   rational := natural ('/' natural)?
//
// Implicit multiplication is rejected; whitespace is insignificant. The
// leading '-' mirrors what the printer emits for a negative first term.
template <class F> class ExprParser {
public:
  using K = typename F::Scalar;

  ExprParser(const std::string &src, const std::vector<std::string> &vars,
             const F &field)
      : src_(src), vars_(vars), field_(field) {}

  MPoly<K> parse() {
    skip_ws();
    MPoly<K> result = expr();
    skip_ws();
    if (pos_ != src_.size())
      fail("unexpected trailing input");
    return result;
  }

private:
  MPoly<K> expr() {
    bool negate_first = false;
    skip_ws();
    if (peek() == '-') {
      negate_first = true;
      advance();
    }
    MPoly<K> acc = term();
    if (negate_first)
      acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        advance();
        acc = acc + term();
      } else if (c == '-') {
        advance();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MPoly<K> term() {
    MPoly<K> acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        advance();
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MPoly<K> factor() {
    MPoly<K> base = atom();
    skip_ws();
    if (peek() == '^') {
      advance();
      skip_ws();
      if (!std::isdigit(peek()))
        fail("expected a natural number exponent");
      unsigned long e = std::stoul(digits());
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly<K> atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      advance();
      MPoly<K> inner = expr();
      skip_ws();
      if (peek() != ')')
        fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(c)) {
      std::string num = digits();
      skip_ws();
      if (peek() == '/') {
        advance();
        skip_ws();
        if (!std::isdigit(peek()))
          fail("expected a positive denominator");
        std::string den = digits();
        K d = from_decimal(den);
        if (d.is_zero())
          fail("zero denominator");
        return MPoly<K>::constant(vars_, from_decimal(num) / d);
      }
      return MPoly<K>::constant(vars_, from_decimal(num));
    }
    if (std::isalpha(c) || c == '_') {
      int l = line_, co = col_;
      std::string id = identifier();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == id)
          return MPoly<K>::variable(vars_, i, field_.one());
      throw ParseError("unknown identifier '" + id + "'", l, co);
    }
    fail(c == '\0' ? "unexpected end of input"
                   : std::string("unexpected character '") + c + "'");
    return MPoly<K>::constant(vars_, field_.zero()); // unreachable
  }

  // Folds a digit string into the field; large literals stay exact over Q
  // and reduce mod p on the fly over F_p.
  K from_decimal(const std::string &s) {
    K acc = field_.zero();
    K ten = field_.from_int(10);
    for (char c : s)
      acc = acc * ten + field_.from_int(c - '0');
    return acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      advance();
    return src_.substr(start, pos_ - start);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      advance();
    return src_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void advance() {
    if (pos_ < src_.size()) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  [[noreturn]] void fail(const std::string &msg) {
    throw ParseError(msg, line_, col_);
  }

  std::string src_;
  std::vector<std::string> vars_;
  const F &field_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

template <class F>
MPoly<typename F::Scalar> parse_poly(const std::string &src,
                                     const std::vector<std::string> &vars,
                                     const F &field) {
  return ExprParser<F>(src, vars, field).parse();
}

} // namespace terracini

#endif // TERRACINI_EXPR_HPP
