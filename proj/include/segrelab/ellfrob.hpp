#pragma once

#include <array>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

#include "segrelab/curve.hpp"
#include "segrelab/primes.hpp"

namespace segrelab {

enum class reduction_status : std::uint8_t { bad_reduction, supersingular, ordinary };

inline const char* to_string(reduction_status s) {
  switch (s) {
    case reduction_status::bad_reduction: return "bad_reduction";
    case reduction_status::supersingular: return "supersingular";
    case reduction_status::ordinary: return "ordinary";
  }
  return "?";
}

struct prime_classification {
  std::uint64_t p = 0;
  reduction_status status = reduction_status::bad_reduction;
  std::uint64_t hasse_coefficient = 0;  // element of F_p; 0 when bad reduction
};

namespace detail {

// Coefficient of (x0 x1 x2)^(p-1) in f^(p-1) by dense sequential multiplies.
// Homogeneity pins the third exponent, so the state is a (p x p) table over
// (e0, e1); any exponent that passes p-1 can never drop back and is pruned.
// Cost is O(#terms(f) * p^3), so the door is closed well before that explodes.
inline std::uint64_t hasse_by_expansion(const cubic_curve<prime_field>& c) {
  const prime_field& k = c.ring->field();
  std::uint64_t p = k.characteristic();
  if (p > 256)
    throw budget_exhausted(
        "dense Hasse expansion is capped at p <= 256 for non-diagonal cubics");
  std::size_t w = static_cast<std::size_t>(p);
  std::vector<std::uint64_t> cur(w * w, 0), nxt(w * w, 0);
  cur[0] = 1;  // exponent (0, 0), degree 0
  struct fterm {
    std::uint32_t d0, d1, d2;
    std::uint64_t c;
  };
  std::vector<fterm> ft;
  for (const auto& t : c.f.terms()) ft.push_back({t.mono[0], t.mono[1], t.mono[2], t.coeff});

  for (std::uint64_t step = 0; step + 1 < p; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    std::uint64_t deg = 3 * step;  // degree of cur
    for (std::size_t e0 = 0; e0 < w; ++e0) {
      std::uint64_t lo1 = deg >= e0 + (p - 1) ? deg - e0 - (p - 1) : 0;
      for (std::size_t e1 = lo1 > 0 ? static_cast<std::size_t>(lo1) : 0; e1 < w; ++e1) {
        if (e0 + e1 > deg) break;
        std::uint64_t v = cur[e0 * w + e1];
        if (!v) continue;
        std::uint64_t e2 = deg - e0 - e1;
        for (const auto& t : ft) {
          std::uint64_t n0 = e0 + t.d0, n1 = e1 + t.d1, n2 = e2 + t.d2;
          if (n0 >= p || n1 >= p || n2 >= p) continue;
          std::uint64_t& slot = nxt[n0 * w + n1];
          slot = (slot + mulmod_u64(v, t.c, p)) % p;
        }
      }
    }
    cur.swap(nxt);
  }
  return cur[(p - 1) * w + (p - 1)];
}

// Diagonal shortcut: for c0 x^3 + c1 y^3 + c2 z^3 the only contributing
// multinomial term needs 3 | p - 1, and Wilson's theorem turns the factorial
// ratio into -(k!)^-3 (c0 c1 c2)^k with k = (p-1)/3.
inline std::uint64_t hasse_diagonal(std::uint64_t p,
                                    const std::array<std::uint64_t, 3>& coeffs) {
  if (p % 3 == 2) return 0;
  std::uint64_t k = (p - 1) / 3;
  std::uint64_t kfact = 1;
  for (std::uint64_t i = 2; i <= k; ++i) kfact = mulmod_u64(kfact, i, p);
  std::uint64_t denom = mulmod_u64(kfact, mulmod_u64(kfact, kfact, p), p);
  std::uint64_t prod = mulmod_u64(coeffs[0], mulmod_u64(coeffs[1], coeffs[2], p), p);
  std::uint64_t value = mulmod_u64(invmod_u64(denom, p), powmod_u64(prod, k, p), p);
  return (p - value) % p;
}

}  // namespace detail

// The classical coefficient criterion: the curve is supersingular at p
// exactly when this vanishes.  Requires p >= 5 and a smooth reduction.
inline std::uint64_t hasse_invariant(const cubic_curve<prime_field>& c) {
  const prime_field& k = c.ring->field();
  std::uint64_t p = k.characteristic();
  if (p < 5) throw precondition_error("Hasse invariant requires p >= 5");
  if (!is_smooth_cubic(c)) throw precondition_error("curve is singular mod " + std::to_string(p));
  if (auto diag = diagonal_coefficients(c))
    return detail::hasse_diagonal(p, {(*diag)[0], (*diag)[1], (*diag)[2]});
  return detail::hasse_by_expansion(c);
}

inline std::uint64_t hasse_invariant(const cubic_curve<rational_field>& c,
                                     std::uint64_t p) {
  if (p < 5) throw precondition_error("Hasse invariant requires p >= 5");
  return hasse_invariant(reduce_mod_p(c, p));
}

inline prime_classification classify_at(const cubic_curve<rational_field>& c,
                                        std::uint64_t p) {
  prime_classification out;
  out.p = p;
  try {
    cubic_curve<prime_field> cp = reduce_mod_p(c, p);
    if (!is_smooth_cubic(cp)) return out;  // bad reduction
    out.hasse_coefficient = hasse_invariant(cp);
    out.status = out.hasse_coefficient == 0 ? reduction_status::supersingular
                                            : reduction_status::ordinary;
  } catch (const precondition_error&) {
    // unreducible coefficients: bad reduction at p
  }
  return out;
}

struct classification_summary {
  std::uint64_t good = 0;
  std::uint64_t bad = 0;
  std::uint64_t supersingular = 0;
  std::uint64_t ordinary = 0;
  double supersingular_fraction = 0.0;  // among good primes
};

// One row per prime 5 <= p <= limit, in prime order.  Rows are computed in
// parallel (each is an independent pure computation) and merged by index, so
// the output is deterministic regardless of scheduling.
inline std::vector<prime_classification> classify_primes(
    const cubic_curve<rational_field>& c, std::uint64_t limit,
    classification_summary* summary = nullptr) {
  std::vector<std::uint64_t> ps = limit < 5 ? std::vector<std::uint64_t>{}
                                            : primes_in_range(5, limit);
  std::vector<prime_classification> rows(ps.size());
  std::size_t workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), ps.size());
  if (workers > 1) {
    std::vector<std::future<void>> tasks;
    for (std::size_t wid = 0; wid < workers; ++wid)
      tasks.push_back(std::async(std::launch::async, [&, wid] {
        for (std::size_t i = wid; i < ps.size(); i += workers)
          rows[i] = classify_at(c, ps[i]);
      }));
    for (auto& t : tasks) t.get();
  } else {
    for (std::size_t i = 0; i < ps.size(); ++i) rows[i] = classify_at(c, ps[i]);
  }
  if (summary) {
    classification_summary s;
    for (const auto& r : rows) {
      if (r.status == reduction_status::bad_reduction) {
        ++s.bad;
        continue;
      }
      ++s.good;
      if (r.status == reduction_status::supersingular)
        ++s.supersingular;
      else
        ++s.ordinary;
    }
    s.supersingular_fraction =
        s.good ? static_cast<double>(s.supersingular) / static_cast<double>(s.good) : 0.0;
    *summary = s;
  }
  return rows;
}

struct cd_prediction {
  std::uint64_t p = 0;
  std::uint64_t n = 1;
  reduction_status status = reduction_status::bad_reduction;
  std::uint64_t predicted_cd = 0;
};

// Cohomological-dimension prediction for the product with P^n: 2n+1 at
// supersingular primes, 3n+1 at ordinary ones.  Predicted, not computed.
inline cd_prediction predict_cd(const cubic_curve<rational_field>& c,
                                std::uint64_t p, std::uint64_t n) {
  if (n < 1) throw precondition_error("cd prediction needs n >= 1");
  prime_classification cls = classify_at(c, p);
  if (cls.status == reduction_status::bad_reduction)
    throw precondition_error("bad reduction at " + std::to_string(p));
  cd_prediction out;
  out.p = p;
  out.n = n;
  out.status = cls.status;
  out.predicted_cd =
      cls.status == reduction_status::supersingular ? 2 * n + 1 : 3 * n + 1;
  return out;
}

// Bracket power I^[q]: q-th powers of the generators, q a power of the
// characteristic.  Computed by honest repeated squaring (not the termwise
// Frobenius shortcut) so the freshman's-dream identities stay testable.
inline ideal<prime_field> frobenius_power(const ideal<prime_field>& I,
                                          std::uint64_t q) {
  std::uint64_t p = I.ring()->field().characteristic();
  std::uint64_t r = q;
  while (r > 1 && r % p == 0) r /= p;
  if (r != 1 || q < p)
    throw precondition_error(std::to_string(q) + " is not a positive power of " +
                             std::to_string(p));
  std::vector<polynomial<prime_field>> gens;
  for (const auto& g : I.gens()) gens.push_back(g.pow(q));
  return ideal<prime_field>(I.ring(), std::move(gens));
}

// Does some term of g avoid every p-th variable power?  Membership in the
// monomial ideal m^[p] is termwise, so this decides g not-in m^[p].
inline bool has_term_outside_mbracket(const polynomial<prime_field>& g,
                                      std::uint64_t p) {
  for (const auto& t : g.terms()) {
    bool inside = true;
    for (std::size_t i = 0; i < g.ring()->arity() && inside; ++i)
      if (t.mono[i] >= p) inside = false;
    if (inside) return true;
  }
  return false;
}

// Fedder's criterion at the irrelevant maximal ideal: R/I is F-pure iff
// (I^[p] : I) is not contained in m^[p].  Principal homogeneous I = (f)
// collapses to f^(p-1) not in m^[p] (the colon of bracket powers of a
// principal ideal in a domain is (f^(p-1))).  The general path computes the
// colon ideal and may exhaust its budget; that is reported, never guessed.
inline bool fedder_fpure(const ideal<prime_field>& I,
                         const budget& bud = default_budget()) {
  std::uint64_t p = I.ring()->field().characteristic();
  if (I.gens().empty()) throw precondition_error("Fedder needs a nonzero ideal");
  for (const auto& g : I.gens())
    if (!g.is_homogeneous() || g.total_degree() == 0)
      throw precondition_error("Fedder expects a proper homogeneous ideal");
  if (I.gens().size() == 1) {
    polynomial<prime_field> u = I.gens().front().pow(p - 1);
    return has_term_outside_mbracket(u, p);
  }
  ideal<prime_field> c = colon(frobenius_power(I, p), I, bud);
  for (const auto& g : c.gens())
    if (has_term_outside_mbracket(g, p)) return true;
  return false;
}

}  // namespace segrelab
