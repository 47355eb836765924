#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "segrelab/fields.hpp"
#include "segrelab/ideal.hpp"

namespace segrelab {

// A plane projective cubic: a nonzero homogeneous degree-3 form in a
// 3-variable ring.  The coefficient field decides the characteristic.
template <class F>
struct cubic_curve {
  ring_ptr<F> ring;
  polynomial<F> f;
  std::string description;

  long characteristic() const { return static_cast<long>(ring->field().characteristic()); }
};

template <class F>
cubic_curve<F> make_cubic(polynomial<F> f, std::string description = "") {
  const auto& r = f.ring();
  if (r->arity() != 3)
    throw precondition_error("a plane cubic needs exactly 3 variables");
  if (f.is_zero() || f.total_degree() != 3 || !f.is_homogeneous())
    throw precondition_error("curve polynomial must be homogeneous of degree 3");
  if (description.empty()) description = format_poly(f);
  return {r, std::move(f), std::move(description)};
}

template <class F>
cubic_curve<F> fermat_cubic(const F& field) {
  ring_ptr<F> r = make_ring(field, {"x0", "x1", "x2"});
  polynomial<F> f = polynomial<F>::variable(r, 0).pow(3)
                        .add(polynomial<F>::variable(r, 1).pow(3))
                        .add(polynomial<F>::variable(r, 2).pow(3));
  return make_cubic(std::move(f), "fermat");
}

// Diagonal cubics c0 x0^3 + c1 x1^3 + c2 x2^3 admit O(1) smoothness and O(p)
// Hasse-coefficient paths; detect them once.
template <class F>
std::optional<std::array<typename F::elem, 3>> diagonal_coefficients(
    const cubic_curve<F>& c) {
  std::array<typename F::elem, 3> out{c.ring->field().zero(),
                                      c.ring->field().zero(),
                                      c.ring->field().zero()};
  bool seen[3] = {false, false, false};
  for (const auto& t : c.f.terms()) {
    int which = -1;
    for (int i = 0; i < 3; ++i)
      if (t.mono[static_cast<std::size_t>(i)] == 3) which = i;
    if (which < 0 || t.mono.degree() != 3) return std::nullopt;
    out[static_cast<std::size_t>(which)] = t.coeff;
    seen[which] = true;
  }
  if (!seen[0] || !seen[1] || !seen[2]) return std::nullopt;
  return out;
}

// Smoothness as Jacobian-ideal primarity: every variable has a power in
// (f, f_0, f_1, f_2), checked by radical membership.  Diagonal cubics short
// circuit: smooth iff every diagonal coefficient is a unit (char != 3), which
// agrees with the radical-membership test (partials are then unit multiples
// of the squared variables).
template <class F>
bool is_smooth_cubic(const cubic_curve<F>& c,
                     const budget& bud = default_budget()) {
  const F& k = c.ring->field();
  if (k.characteristic() == 3) return false;
  if (auto diag = diagonal_coefficients(c)) {
    return !k.is_zero((*diag)[0]) && !k.is_zero((*diag)[1]) &&
           !k.is_zero((*diag)[2]);
  }
  std::vector<polynomial<F>> gens{c.f, c.f.derivative(0), c.f.derivative(1),
                                  c.f.derivative(2)};
  ideal<F> jac(c.ring, std::move(gens));
  for (std::size_t i = 0; i < 3; ++i)
    if (!jac.radical_contains(polynomial<F>::variable(c.ring, i), bud))
      return false;
  return true;
}

// Reduce a rational coefficient into F_p; the denominator must be a unit.
inline std::uint64_t reduce_coeff_mod_p(const mpq_class& a, const prime_field& k) {
  std::uint64_t den = k.from_mpz(a.get_den());
  if (den == 0)
    throw precondition_error("denominator divisible by " +
                             std::to_string(k.characteristic()));
  return k.div(k.from_mpz(a.get_num()), den);
}

// Image of a rational-coefficient polynomial in F_p, same variables and
// order.  Throws when any denominator is divisible by p.
inline polynomial<prime_field> reduce_mod_p(const polynomial<rational_field>& f,
                                            std::uint64_t p) {
  prime_field k(p);
  ring_ptr<prime_field> target = make_ring(k, f.ring()->vars(), f.ring()->order());
  return f.map_coefficients(target, [&](const mpq_class& a) {
    return reduce_coeff_mod_p(a, k);
  });
}

inline cubic_curve<prime_field> reduce_mod_p(const cubic_curve<rational_field>& c,
                                             std::uint64_t p) {
  polynomial<prime_field> fp = reduce_mod_p(c.f, p);
  if (fp.is_zero())
    throw precondition_error("curve vanishes mod " + std::to_string(p));
  return make_cubic(std::move(fp), c.description + " mod " + std::to_string(p));
}

}  // namespace segrelab
