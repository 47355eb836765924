#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "segrelab/errors.hpp"
#include "segrelab/ring.hpp"

namespace segrelab {

template <class F>
struct term {
  typename F::elem coeff;
  monomial mono;
};

// Sparse polynomial in canonical form: terms strictly descending under the
// ring's monomial order, no zero coefficients.  Every binary operation
// requires both operands to live in the same ring.
template <class F>
class polynomial {
 public:
  using elem = typename F::elem;

  polynomial() = default;
  explicit polynomial(ring_ptr<F> r) : ring_(std::move(r)) {}

  static polynomial zero(ring_ptr<F> r) { return polynomial(std::move(r)); }

  static polynomial constant(ring_ptr<F> r, elem c) {
    polynomial p(r);
    if (!r->field().is_zero(c))
      p.t_.push_back({std::move(c), monomial::one(r->arity())});
    return p;
  }

  static polynomial variable(ring_ptr<F> r, std::size_t i) {
    if (i >= r->arity()) throw precondition_error("variable index out of range");
    polynomial p(r);
    p.t_.push_back({r->field().one(), monomial::var(r->arity(), i)});
    return p;
  }

  static polynomial from_term(ring_ptr<F> r, elem c, monomial m) {
    polynomial p(r);
    if (m.arity() != r->arity()) throw ring_mismatch_error("monomial arity mismatch");
    if (!r->field().is_zero(c)) p.t_.push_back({std::move(c), std::move(m)});
    return p;
  }

  // Sorts, combines equal monomials, drops zeros.
  static polynomial from_terms(ring_ptr<F> r, std::vector<term<F>> ts) {
    polynomial p(r);
    p.t_ = std::move(ts);
    p.normalize();
    return p;
  }

  const ring_ptr<F>& ring() const { return ring_; }
  const std::vector<term<F>>& terms() const { return t_; }
  std::size_t num_terms() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }

  const term<F>& leading_term() const {
    if (t_.empty()) throw precondition_error("zero polynomial has no leading term");
    return t_.front();
  }
  const monomial& leading_monomial() const { return leading_term().mono; }
  const elem& leading_coeff() const { return leading_term().coeff; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.mono.degree() != t_.front().mono.degree()) return false;
    return true;
  }

  elem coefficient_of(const monomial& m) const {
    const auto& ord = ring_->order();
    // Terms are descending; binary search.
    std::size_t lo = 0, hi = t_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      int c = ord.cmp(t_[mid].mono, m);
      if (c == 0) return t_[mid].coeff;
      if (c > 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    return ring_->field().zero();
  }

  polynomial neg() const {
    polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({ring_->field().neg(t.coeff), t.mono});
    return r;
  }

  polynomial add(const polynomial& o) const { return merge(o, false); }
  polynomial sub(const polynomial& o) const { return merge(o, true); }

  polynomial scale(const elem& c) const {
    const F& k = ring_->field();
    polynomial r(ring_);
    if (k.is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({k.mul(t.coeff, c), t.mono});
    return r;
  }

  // this * (c . m), a single term.
  polynomial mul_term(const elem& c, const monomial& m) const {
    const F& k = ring_->field();
    polynomial r(ring_);
    if (k.is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({k.mul(t.coeff, c), t.mono.mul(m)});
    return r;
  }

  polynomial mul(const polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const F& k = ring_->field();
    polynomial r(ring_);
    if (t_.empty() || o.t_.empty()) return r;
    std::vector<term<F>> acc;
    acc.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
      for (const auto& b : o.t_)
        acc.push_back({k.mul(a.coeff, b.coeff), a.mono.mul(b.mono)});
    r.t_ = std::move(acc);
    r.normalize();
    return r;
  }

  polynomial pow(std::uint64_t e) const {
    polynomial base = *this;
    polynomial r = constant(ring_, ring_->field().one());
    while (e) {
      if (e & 1) r = r.mul(base);
      e >>= 1;
      if (e) base = base.mul(base);
    }
    return r;
  }

  // this − (c . m) * g, the inner step of polynomial division.  One linear
  // merge; avoids building the scaled g as a separate pass.
  polynomial sub_scaled(const elem& c, const monomial& m, const polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    const F& k = ring_->field();
    const auto& ord = ring_->order();
    polynomial r(ring_);
    r.t_.reserve(t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
      monomial gm = g.t_[j].mono.mul(m);
      int cv = ord.cmp(t_[i].mono, gm);
      if (cv > 0) {
        r.t_.push_back(t_[i++]);
      } else if (cv < 0) {
        elem v = k.neg(k.mul(c, g.t_[j].coeff));
        if (!k.is_zero(v)) r.t_.push_back({std::move(v), std::move(gm)});
        ++j;
      } else {
        elem v = k.sub(t_[i].coeff, k.mul(c, g.t_[j].coeff));
        if (!k.is_zero(v)) r.t_.push_back({std::move(v), std::move(gm)});
        ++i;
        ++j;
      }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < g.t_.size(); ++j) {
      elem v = k.neg(k.mul(c, g.t_[j].coeff));
      if (!k.is_zero(v)) r.t_.push_back({std::move(v), g.t_[j].mono.mul(m)});
    }
    return r;
  }

  polynomial monic() const {
    if (t_.empty()) return *this;
    return scale(ring_->field().inv(t_.front().coeff));
  }

  polynomial derivative(std::size_t var) const {
    if (var >= ring_->arity()) throw precondition_error("variable index out of range");
    const F& k = ring_->field();
    std::vector<term<F>> acc;
    for (const auto& t : t_) {
      std::uint32_t e = t.mono[var];
      if (e == 0) continue;
      elem c = k.mul(t.coeff, k.from_integer(static_cast<long long>(e)));
      if (k.is_zero(c)) continue;
      auto exps = t.mono.exponents();
      exps[var] -= 1;
      acc.push_back({std::move(c), monomial(std::move(exps))});
    }
    return from_terms(ring_, std::move(acc));
  }

  // Image under a variable renaming into `target`: variable i of this ring
  // becomes variable var_map[i] there.  Coefficients carry over unchanged,
  // so the fields must agree.
  polynomial map_variables(const ring_ptr<F>& target,
                           const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ring_->arity())
      throw precondition_error("variable map has wrong arity");
    if (!(ring_->field() == target->field()))
      throw ring_mismatch_error("variable map must preserve the field");
    std::vector<term<F>> acc;
    acc.reserve(t_.size());
    for (const auto& t : t_) {
      std::vector<std::uint32_t> exps(target->arity(), 0);
      for (std::size_t i = 0; i < var_map.size(); ++i) {
        if (var_map[i] >= target->arity())
          throw precondition_error("variable map target out of range");
        exps[var_map[i]] += t.mono[i];
      }
      acc.push_back({t.coeff, monomial(std::move(exps))});
    }
    return from_terms(target, std::move(acc));
  }

  // Evaluate with polynomial images for each variable (ring homomorphism
  // fixing the field).  All images must share one ring, the result's ring.
  polynomial substitute(const std::vector<polynomial>& images) const {
    if (images.size() != ring_->arity())
      throw precondition_error("substitution needs one image per variable");
    ring_ptr<F> target = images.front().ring();
    for (const auto& g : images) require_same_ring(target, g.ring());
    const F& k = target->field();
    polynomial acc = zero(target);
    for (const auto& t : t_) {
      polynomial prod = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i) {
        std::uint32_t e = t.mono[i];
        if (e) prod = prod.mul(images[i].pow(e));
      }
      acc = acc.add(prod);
    }
    (void)k;
    return acc;
  }

  elem evaluate(const std::vector<elem>& point) const {
    if (point.size() != ring_->arity())
      throw precondition_error("evaluation needs one value per variable");
    const F& k = ring_->field();
    elem acc = k.zero();
    for (const auto& t : t_) {
      elem v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (std::uint32_t e = 0; e < t.mono[i]; ++e) v = k.mul(v, point[i]);
      acc = k.add(acc, v);
    }
    return acc;
  }

  // Apply fn to every coefficient, landing in `target` (possibly a ring over
  // a different field).  Zero images are dropped.
  template <class G, class Fn>
  polynomial<G> map_coefficients(const ring_ptr<G>& target, Fn fn) const {
    if (target->arity() != ring_->arity())
      throw ring_mismatch_error("coefficient map must preserve the variables");
    std::vector<term<G>> acc;
    acc.reserve(t_.size());
    for (const auto& t : t_) {
      typename G::elem c = fn(t.coeff);
      if (!target->field().is_zero(c)) acc.push_back({std::move(c), t.mono});
    }
    return polynomial<G>::from_terms(target, std::move(acc));
  }

  bool operator==(const polynomial& o) const {
    if (!ring_ || !o.ring_) return t_.empty() && o.t_.empty();
    if (!ring_->same_ring(*o.ring_)) return false;
    if (t_.size() != o.t_.size()) return false;
    const F& k = ring_->field();
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_[i].mono != o.t_[i].mono) return false;
      if (!k.equal(t_[i].coeff, o.t_[i].coeff)) return false;
    }
    return true;
  }
  bool operator!=(const polynomial& o) const { return !(*this == o); }

  polynomial operator+(const polynomial& o) const { return add(o); }
  polynomial operator-(const polynomial& o) const { return sub(o); }
  polynomial operator*(const polynomial& o) const { return mul(o); }
  polynomial operator-() const { return neg(); }

 private:
  void normalize() {
    const auto& ord = ring_->order();
    const F& k = ring_->field();
    std::sort(t_.begin(), t_.end(), [&](const term<F>& a, const term<F>& b) {
      return ord.cmp(a.mono, b.mono) > 0;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t_.size();) {
      elem c = t_[i].coeff;
      monomial m = t_[i].mono;
      std::size_t j = i + 1;
      while (j < t_.size() && ord.cmp(t_[j].mono, m) == 0)
        c = k.add(c, t_[j++].coeff);
      if (!k.is_zero(c)) t_[out++] = {std::move(c), std::move(m)};
      i = j;
    }
    t_.resize(out);
  }

  polynomial merge(const polynomial& o, bool subtract) const {
    require_same_ring(ring_, o.ring_);
    const F& k = ring_->field();
    const auto& ord = ring_->order();
    polynomial r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
      int cv = ord.cmp(t_[i].mono, o.t_[j].mono);
      if (cv > 0) {
        r.t_.push_back(t_[i++]);
      } else if (cv < 0) {
        const auto& t = o.t_[j++];
        r.t_.push_back({subtract ? k.neg(t.coeff) : t.coeff, t.mono});
      } else {
        elem v = subtract ? k.sub(t_[i].coeff, o.t_[j].coeff)
                          : k.add(t_[i].coeff, o.t_[j].coeff);
        if (!k.is_zero(v)) r.t_.push_back({std::move(v), t_[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) {
      const auto& t = o.t_[j];
      r.t_.push_back({subtract ? k.neg(t.coeff) : t.coeff, t.mono});
    }
    return r;
  }

  ring_ptr<F> ring_;
  std::vector<term<F>> t_;
};

// Euler defect: sum_i x_i . df/dx_i − deg(f) . f.  Identically zero for a
// homogeneous f of degree deg(f) when the characteristic allows, which makes
// it a cheap differential self-check on arithmetic.
template <class F>
polynomial<F> euler_defect(const polynomial<F>& f) {
  const auto& r = f.ring();
  if (f.is_zero()) return f;
  if (!f.is_homogeneous())
    throw precondition_error("euler defect is defined for homogeneous input");
  polynomial<F> acc = polynomial<F>::zero(r);
  for (std::size_t i = 0; i < r->arity(); ++i)
    acc = acc.add(polynomial<F>::variable(r, i).mul(f.derivative(i)));
  auto d = r->field().from_integer(f.total_degree());
  return acc.sub(f.scale(d));
}

// Canonical generator scaling.  Over a finite field: monic.  Over the
// rationals: clear denominators, divide by the integer content, and make the
// leading coefficient positive, so equal ideals get literally equal
// normalized generators.
template <class F>
polynomial<F> normalize_generator(const polynomial<F>& f) {
  if (f.is_zero()) return f;
  if constexpr (F::is_finite) {
    return f.monic();
  } else {
    mpz_class den = 1;
    for (const auto& t : f.terms())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              t.coeff.get_den().get_mpz_t());
    mpz_class num = 0;
    for (const auto& t : f.terms()) {
      mpz_class scaled = t.coeff.get_num() * (den / t.coeff.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class factor(den, num);
    factor.canonicalize();
    if (f.leading_coeff() < 0) factor = -factor;
    return f.scale(factor);
  }
}

}  // namespace segrelab
