#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "segrelab/polynomial.hpp"

namespace segrelab {

// Recursive-descent parser for the expression grammar shared by the CLI and
// fixture files:
//
//   expr   := prod (('+'|'-') prod)*
//   prod   := ('+'|'-')* factor (['*'] factor)*   (juxtaposition multiplies)
//   factor := atom ['^' nat]
//   atom   := nat ['/' nat] | ident | '(' expr ')'
//   ident  := [A-Za-z_][A-Za-z0-9_]*
//
// Whitespace is insignificant.  Identifiers must name ring variables.
// Coefficients are integers or a/b fractions, reduced into the coefficient
// field (so 1/2 is valid over F_7 and means 4).
namespace detail {

template <class F>
class poly_parser {
 public:
  poly_parser(const ring_ptr<F>& r, std::string_view src) : r_(r), src_(src) {}

  polynomial<F> run() {
    skip_ws();
    if (eof()) throw parse_error("empty polynomial", 0);
    polynomial<F> p = expr();
    skip_ws();
    if (!eof()) throw parse_error("trailing characters", pos_);
    return p;
  }

 private:
  polynomial<F> expr() {
    polynomial<F> acc = prod();
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        bool minus = (get() == '-');
        polynomial<F> t = prod();
        acc = minus ? acc.sub(t) : acc.add(t);
      } else {
        return acc;
      }
    }
  }

  polynomial<F> prod() {
    bool negate = false;
    for (;;) {  // sign chain: "- - x" is x
      skip_ws();
      if (peek() == '+' || peek() == '-') negate ^= (get() == '-');
      else break;
    }
    polynomial<F> acc = factor();
    if (negate) acc = acc.neg();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        get();
        acc = acc.mul(factor());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc.mul(factor());
      } else {
        return acc;
      }
    }
  }

  polynomial<F> factor() {
    polynomial<F> base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::size_t at = pos_;
      std::uint64_t e = parse_nat(at);
      if (e > 1'000'000) throw parse_error("exponent too large", at);
      return base.pow(e);
    }
    return base;
  }

  polynomial<F> atom() {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      get();
      polynomial<F> p = expr();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      get();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits(at);
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        std::size_t dat = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw parse_error("expected denominator digits", pos_);
        std::string den = digits(dat);
        return polynomial<F>::constant(r_, r_->field().from_fraction(num, den));
      }
      return polynomial<F>::constant(r_, r_->field().from_decimal(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                        peek() == '_'))
        name.push_back(get());
      std::size_t idx = r_->var_index(name);
      if (idx == poly_ring<F>::npos)
        throw parse_error("unknown variable '" + name + "'", at);
      return polynomial<F>::variable(r_, idx);
    }
    if (eof()) throw parse_error("unexpected end of input", pos_);
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string digits(std::size_t at) {
    std::string s;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      s.push_back(get());
    if (s.empty()) throw parse_error("expected digits", at);
    return s;
  }

  std::uint64_t parse_nat(std::size_t at) {
    std::string s = digits(at);
    if (s.size() > 18) throw parse_error("number too large", at);
    return std::stoull(s);
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return eof() ? '\0' : src_[pos_]; }
  char get() { return src_[pos_++]; }

  ring_ptr<F> r_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
polynomial<F> parse_poly(const ring_ptr<F>& r, std::string_view src) {
  return detail::poly_parser<F>(r, src).run();
}

// Canonical text form: terms in ring order, explicit '*', '^' above degree 1,
// no redundant unit coefficients.  parse_poly(format_poly(f)) == f.
template <class F>
std::string format_poly(const polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const auto& r = f.ring();
  const F& k = r->field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    typename F::elem c = t.coeff;
    bool neg = false;
    if constexpr (!F::is_finite) {
      if (c < 0) {
        neg = true;
        c = k.neg(c);
      }
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < r->arity(); ++i) {
      std::uint32_t e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += r->vars()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += k.to_string(c);
    } else if (k.is_one(c)) {
      out += mono;
    } else {
      out += k.to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace segrelab
