#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "segrelab/errors.hpp"

namespace segrelab {

// Exponent vector of fixed arity.  Total degree is cached.
class monomial {
 public:
  monomial() = default;
  explicit monomial(std::size_t arity) : e_(arity, 0) {}
  explicit monomial(std::vector<std::uint32_t> exps)
      : e_(std::move(exps)),
        deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

  static monomial one(std::size_t arity) { return monomial(arity); }
  static monomial var(std::size_t arity, std::size_t i, std::uint32_t e = 1) {
    monomial m(arity);
    m.e_[i] = e;
    m.deg_ = e;
    return m;
  }

  std::size_t arity() const { return e_.size(); }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  monomial mul(const monomial& o) const {
    monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Exact quotient o / this caller guarantees divisibility; here o is the
  // numerator.
  monomial div_into(const monomial& o) const {
    monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = o.e_[i] - e_[i];
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  monomial lcm(const monomial& o) const {
    monomial r(e_.size());
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  monomial pow(std::uint32_t k) const {
    monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
    r.deg_ = deg_ * k;
    return r;
  }

  // Bitmask of the variables appearing with positive exponent.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) m |= (1u << i);
    return m;
  }

  bool operator==(const monomial& o) const { return e_ == o.e_; }
  bool operator!=(const monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
  std::uint32_t deg_ = 0;
};

// Term orders.  grevlex: total degree, ties broken by the last variable with
// differing exponent (larger exponent there is smaller).  lex: leftmost
// differing exponent decides.  block(k): grevlex on the first k variables
// first, then grevlex on the rest; this eliminates the first k variables.
struct monomial_order {
  enum class kind_t : std::uint8_t { grevlex, lex, block };

  kind_t kind = kind_t::grevlex;
  std::uint32_t split = 0;  // block only: size of the leading block

  static monomial_order grevlex() { return {kind_t::grevlex, 0}; }
  static monomial_order lex() { return {kind_t::lex, 0}; }
  static monomial_order block(std::uint32_t k) { return {kind_t::block, k}; }

  bool operator==(const monomial_order& o) const {
    return kind == o.kind && (kind != kind_t::block || split == o.split);
  }
  bool operator!=(const monomial_order& o) const { return !(*this == o); }
  bool operator<(const monomial_order& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == kind_t::block && split < o.split;
  }

  std::string to_string() const {
    switch (kind) {
      case kind_t::grevlex: return "grevlex";
      case kind_t::lex: return "lex";
      case kind_t::block: return "block:" + std::to_string(split);
    }
    return "?";
  }

  // Three-way compare: negative if a < b, zero if equal, positive if a > b.
  int cmp(const monomial& a, const monomial& b) const {
    switch (kind) {
      case kind_t::lex: {
        for (std::size_t i = 0; i < a.arity(); ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      }
      case kind_t::grevlex:
        return grevlex_range(a, b, 0, a.arity());
      case kind_t::block: {
        int c = grevlex_range(a, b, 0, split);
        if (c) return c;
        return grevlex_range(a, b, split, a.arity());
      }
    }
    return 0;
  }

  bool less(const monomial& a, const monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const monomial& a, const monomial& b) const { return cmp(a, b) > 0; }

 private:
  static int grevlex_range(const monomial& a, const monomial& b,
                           std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace segrelab
