#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "segrelab/budget.hpp"
#include "segrelab/polynomial.hpp"

namespace segrelab {

struct gb_stats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_skipped_chain = 0;
  std::uint64_t reductions_to_zero = 0;
  std::uint64_t basis_size = 0;
};

// Full normal form: every term of the remainder is reducible by no leading
// monomial of `basis`.  Deterministic given the basis order; the remainder is
// unique when `basis` is a Groebner basis.
template <class F>
polynomial<F> normal_form(polynomial<F> p, const std::vector<polynomial<F>>& basis,
                          budget_meter* meter = nullptr) {
  if (basis.empty() || p.is_zero()) return p;
  const auto& r = p.ring();
  const F& k = r->field();
  std::vector<term<F>> tail;  // fully reduced leading part, collected in order
  while (!p.is_zero()) {
    bool reduced = false;
    const monomial& lm = p.leading_monomial();
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(lm)) continue;
      typename F::elem c = k.div(p.leading_coeff(), g.leading_coeff());
      p = p.sub_scaled(c, g.leading_monomial().div_into(lm), g);
      if (meter) meter->count_terms(p.num_terms());
      reduced = true;
      break;
    }
    if (!reduced) {
      tail.push_back(p.leading_term());
      p = p.sub(polynomial<F>::from_term(r, p.leading_coeff(), lm));
    }
  }
  return polynomial<F>::from_terms(r, std::move(tail));
}

template <class F>
polynomial<F> s_polynomial(const polynomial<F>& f, const polynomial<F>& g) {
  require_same_ring(f.ring(), g.ring());
  const F& k = f.ring()->field();
  monomial l = f.leading_monomial().lcm(g.leading_monomial());
  polynomial<F> a =
      f.mul_term(k.inv(f.leading_coeff()), f.leading_monomial().div_into(l));
  polynomial<F> b =
      g.mul_term(k.inv(g.leading_coeff()), g.leading_monomial().div_into(l));
  return a.sub(b);
}

namespace detail {

struct sp_pair {
  std::uint32_t i, j;
  monomial lcm;
  bool coprime;
};

}  // namespace detail

// Buchberger's algorithm with the coprime and chain criteria and
// degree-ascending pair selection.  `degree_cap`, when non-negative, skips
// every pair whose lcm degree exceeds it; for homogeneous input the result is
// then a Groebner basis truncated at that degree (S-polynomial degrees never
// drop below the pair's lcm degree), which is exactly what degree-bounded
// membership tests need.  Throws budget_exhausted when the meter trips.
template <class F>
std::vector<polynomial<F>> buchberger(std::vector<polynomial<F>> gens,
                                      const budget& bud = default_budget(),
                                      gb_stats* stats = nullptr,
                                      int degree_cap = -1) {
  std::vector<polynomial<F>> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(normalize_generator(g));
  gb_stats local;
  budget_meter meter(bud);
  if (basis.empty()) {
    if (stats) *stats = local;
    return basis;
  }
  const auto& ord = basis.front().ring()->order();

  std::vector<detail::sp_pair> pending;
  auto push_pairs_for = [&](std::uint32_t n) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const monomial& a = basis[i].leading_monomial();
      const monomial& b = basis[n].leading_monomial();
      pending.push_back({i, n, a.lcm(b), a.mul(b) == a.lcm(b)});
    }
  };
  for (std::uint32_t n = 1; n < basis.size(); ++n) push_pairs_for(n);

  auto in_pending = [&](std::uint32_t a, std::uint32_t b) {
    for (const auto& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    // Normal selection: smallest lcm degree, ties by the monomial order, then
    // by index for determinism.
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      const auto& a = pending[t];
      const auto& b = pending[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = t;
        continue;
      }
      int c = ord.cmp(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = t;
    }
    detail::sp_pair pr = pending[best];
    pending[best] = pending.back();
    pending.pop_back();

    if (degree_cap >= 0 && static_cast<int>(pr.lcm.degree()) > degree_cap) continue;
    meter.count_pair();
    ++local.pairs_considered;

    if (pr.coprime) {
      ++local.pairs_skipped_coprime;
      continue;
    }
    // Chain criterion: some k with lm(k) | lcm(i,j) and both (i,k), (j,k)
    // already handled lets us discard (i,j).
    bool chained = false;
    for (std::uint32_t t = 0; t < basis.size() && !chained; ++t) {
      if (t == pr.i || t == pr.j) continue;
      if (!basis[t].leading_monomial().divides(pr.lcm)) continue;
      if (!in_pending(pr.i, t) && !in_pending(pr.j, t)) chained = true;
    }
    if (chained) {
      ++local.pairs_skipped_chain;
      continue;
    }

    polynomial<F> rem =
        normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis, &meter);
    if (rem.is_zero()) {
      ++local.reductions_to_zero;
      continue;
    }
    basis.push_back(normalize_generator(rem));
    push_pairs_for(static_cast<std::uint32_t>(basis.size() - 1));
  }

  local.basis_size = basis.size();
  if (stats) *stats = local;
  return basis;
}

// Minimal + reduced form: no leading monomial divides another, every element
// is fully reduced against the rest and canonically scaled, elements sorted
// ascending by leading monomial.  Unique for a given ideal and order, so basis
// equality is ideal equality.
template <class F>
std::vector<polynomial<F>> reduce_basis(std::vector<polynomial<F>> basis) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const polynomial<F>& g) { return g.is_zero(); }),
              basis.end());
  if (basis.empty()) return basis;
  const auto& ord = basis.front().ring()->order();

  std::vector<polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const monomial& mi = basis[i].leading_monomial();
      const monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  std::vector<polynomial<F>> out(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out[i] = normalize_generator(normal_form(minimal[i], others));
  }
  std::sort(out.begin(), out.end(),
            [&](const polynomial<F>& a, const polynomial<F>& b) {
              return ord.cmp(a.leading_monomial(), b.leading_monomial()) < 0;
            });
  return out;
}

template <class F>
std::vector<polynomial<F>> groebner_basis(const std::vector<polynomial<F>>& gens,
                                          const budget& bud = default_budget(),
                                          gb_stats* stats = nullptr,
                                          int degree_cap = -1) {
  return reduce_basis(buchberger(gens, bud, stats, degree_cap));
}

// Self-check: every S-polynomial of `basis` reduces to zero.  Used by tests
// to certify computed bases independently of how they were produced.
template <class F>
bool is_groebner_basis(const std::vector<polynomial<F>>& basis,
                       const budget& bud = default_budget()) {
  budget_meter meter(bud);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      meter.count_pair();
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis, &meter).is_zero())
        return false;
    }
  return true;
}

}  // namespace segrelab
