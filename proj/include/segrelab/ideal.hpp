#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "segrelab/cache.hpp"
#include "segrelab/groebner.hpp"

namespace segrelab {

// An ideal of a polynomial ring, as a generator list plus lazily computed
// reduced Groebner bases, one per monomial order, cached in memory (and on
// disk when the global cache is enabled).  Copies share the cache.
template <class F>
class ideal {
 public:
  ideal(ring_ptr<F> r, std::vector<polynomial<F>> gens)
      : s_(std::make_shared<state>()) {
    s_->ring = std::move(r);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(s_->ring, g.ring());
      s_->gens.push_back(std::move(g));
    }
  }

  const ring_ptr<F>& ring() const { return s_->ring; }
  const std::vector<polynomial<F>>& gens() const { return s_->gens; }

  // Reduced Groebner basis in the ring's own order.
  std::vector<polynomial<F>> groebner(const budget& bud = default_budget()) const {
    return groebner(s_->ring->order(), bud);
  }

  // Reduced Groebner basis under `ord`; the returned polynomials live in the
  // reordered ring (identical to ring() when the order already matches).
  std::vector<polynomial<F>> groebner(const monomial_order& ord,
                                      const budget& bud = default_budget()) const {
    {
      std::lock_guard<std::mutex> lk(s_->mu);
      auto it = s_->gb.find(ord);
      if (it != s_->gb.end()) return it->second;
    }
    ring_ptr<F> r2 = ord == s_->ring->order() ? s_->ring : with_order(s_->ring, ord);
    std::vector<polynomial<F>> moved;
    moved.reserve(s_->gens.size());
    std::vector<std::size_t> id(s_->ring->arity());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    for (const auto& g : s_->gens) moved.push_back(g.map_variables(r2, id));

    std::vector<polynomial<F>> basis;
    auto& cache = gb_cache::instance();
    std::string key;
    if (cache.enabled()) {
      key = cache.key_for(r2, moved);
      if (auto hit = cache.load(r2, key)) basis = std::move(*hit);
    }
    if (basis.empty() && !moved.empty()) {
      basis = groebner_basis(moved, bud);
      if (cache.enabled()) cache.store(key, r2, basis);
    }
    std::lock_guard<std::mutex> lk(s_->mu);
    s_->gb.emplace(ord, basis);
    return basis;
  }

  bool contains(const polynomial<F>& f, const budget& bud = default_budget()) const {
    require_same_ring(s_->ring, f.ring());
    return normal_form(f, groebner(bud)).is_zero();
  }

  bool contains_all(const std::vector<polynomial<F>>& fs,
                    const budget& bud = default_budget()) const {
    for (const auto& f : fs)
      if (!contains(f, bud)) return false;
    return true;
  }

  bool is_unit(const budget& bud = default_budget()) const {
    auto b = groebner(bud);
    return b.size() == 1 && b.front().leading_monomial().is_one();
  }

  bool is_zero_ideal() const { return s_->gens.empty(); }

  // Same ideal of the same ring: reduced bases are unique, so compare them.
  bool equals(const ideal& o, const budget& bud = default_budget()) const {
    require_same_ring(s_->ring, o.s_->ring);
    auto a = groebner(bud);
    auto b = o.groebner(bud);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

  // f lies in the radical iff 1 is in I + (1 - t f) over the ring extended by
  // a fresh variable t.
  bool radical_contains(const polynomial<F>& f,
                        const budget& bud = default_budget()) const {
    require_same_ring(s_->ring, f.ring());
    if (f.is_zero()) return true;
    std::string tname = "t";
    while (s_->ring->var_index(tname) != poly_ring<F>::npos) tname += "_";
    std::vector<std::string> vars;
    vars.push_back(tname);
    for (const auto& v : s_->ring->vars()) vars.push_back(v);
    ring_ptr<F> ext = make_ring(s_->ring->field(), vars, monomial_order::grevlex());
    std::vector<std::size_t> shift(s_->ring->arity());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
    std::vector<polynomial<F>> gens;
    for (const auto& g : s_->gens) gens.push_back(g.map_variables(ext, shift));
    polynomial<F> one = polynomial<F>::constant(ext, ext->field().one());
    polynomial<F> t = polynomial<F>::variable(ext, 0);
    gens.push_back(one.sub(t.mul(f.map_variables(ext, shift))));
    ideal extd(ext, std::move(gens));
    return extd.is_unit(bud);
  }

  // Krull dimension of R/I: the largest set of variables supporting no
  // leading monomial of the basis.  -1 for the unit ideal.
  int dimension(const budget& bud = default_budget()) const {
    std::size_t n = s_->ring->arity();
    if (n > 26) throw precondition_error("dimension supports at most 26 variables");
    auto basis = groebner(bud);
    if (!basis.empty() && basis.front().leading_monomial().is_one()) return -1;
    std::vector<std::uint32_t> lm;
    lm.reserve(basis.size());
    for (const auto& g : basis) lm.push_back(g.leading_monomial().support_mask());
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      int size = __builtin_popcount(s);
      if (size <= best) continue;
      bool independent = true;
      for (std::uint32_t m : lm)
        if ((m & ~s) == 0) {
          independent = false;
          break;
        }
      if (independent) best = size;
    }
    return best;
  }

 private:
  struct state {
    ring_ptr<F> ring;
    std::vector<polynomial<F>> gens;
    std::mutex mu;
    std::map<monomial_order, std::vector<polynomial<F>>> gb;
  };
  std::shared_ptr<state> s_;
};

template <class F>
ideal<F> ideal_sum(const ideal<F>& a, const ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<polynomial<F>> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return ideal<F>(a.ring(), std::move(gens));
}

// Eliminate the variables at positions `kill`: compute a Groebner basis with
// those variables in a leading grevlex block, keep the elements free of them,
// and land in the ring on the surviving variables (original relative order,
// grevlex — which is the order the block order induces there).
template <class F>
ideal<F> eliminate(const ideal<F>& I, std::vector<std::size_t> kill,
                   const budget& bud = default_budget()) {
  const ring_ptr<F>& r = I.ring();
  std::size_t n = r->arity();
  std::vector<bool> killed(n, false);
  for (std::size_t k : kill) {
    if (k >= n) throw precondition_error("eliminated variable out of range");
    if (killed[k]) throw precondition_error("variable eliminated twice");
    killed[k] = true;
  }
  if (kill.empty() || kill.size() >= n)
    throw precondition_error("elimination needs a proper nonempty variable set");

  // Permuted ring: killed block first, survivors after, block order.
  std::vector<std::string> vars;
  std::vector<std::size_t> var_map(n);
  for (std::size_t k : kill) {
    var_map[k] = vars.size();
    vars.push_back(r->vars()[k]);
  }
  std::vector<std::string> tail_vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (killed[i]) continue;
    var_map[i] = kill.size() + tail_vars.size();
    tail_vars.push_back(r->vars()[i]);
  }
  vars.insert(vars.end(), tail_vars.begin(), tail_vars.end());
  ring_ptr<F> block_ring =
      make_ring(r->field(), vars,
                monomial_order::block(static_cast<std::uint32_t>(kill.size())));

  std::vector<polynomial<F>> moved;
  for (const auto& g : I.gens()) moved.push_back(g.map_variables(block_ring, var_map));
  ideal<F> blocked(block_ring, std::move(moved));
  auto basis = blocked.groebner(bud);

  ring_ptr<F> target = make_ring(r->field(), tail_vars, monomial_order::grevlex());
  std::vector<std::size_t> down(block_ring->arity(), poly_ring<F>::npos);
  for (std::size_t i = 0; i < tail_vars.size(); ++i) down[kill.size() + i] = i;

  std::vector<polynomial<F>> out;
  for (const auto& g : basis) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < kill.size() && pure; ++i)
        if (t.mono[i]) pure = false;
    if (!pure) continue;
    std::vector<term<F>> ts;
    for (const auto& t : g.terms()) {
      std::vector<std::uint32_t> exps(tail_vars.size(), 0);
      for (std::size_t i = kill.size(); i < n; ++i) exps[down[i]] = t.mono[i];
      ts.push_back({t.coeff, monomial(std::move(exps))});
    }
    out.push_back(polynomial<F>::from_terms(target, std::move(ts)));
  }
  return ideal<F>(target, std::move(out));
}

// I ∩ J = (t I + (1 - t) J) ∩ R, with t a fresh variable.
template <class F>
ideal<F> intersect(const ideal<F>& I, const ideal<F>& J,
                   const budget& bud = default_budget()) {
  const ring_ptr<F>& r = I.ring();
  require_same_ring(r, J.ring());
  std::string tname = "t";
  while (r->var_index(tname) != poly_ring<F>::npos) tname += "_";
  std::vector<std::string> vars;
  vars.push_back(tname);
  for (const auto& v : r->vars()) vars.push_back(v);
  ring_ptr<F> ext = make_ring(r->field(), vars, monomial_order::grevlex());
  std::vector<std::size_t> shift(r->arity());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;

  polynomial<F> t = polynomial<F>::variable(ext, 0);
  polynomial<F> one_minus_t =
      polynomial<F>::constant(ext, ext->field().one()).sub(t);
  std::vector<polynomial<F>> gens;
  for (const auto& g : I.gens()) gens.push_back(t.mul(g.map_variables(ext, shift)));
  for (const auto& g : J.gens())
    gens.push_back(one_minus_t.mul(g.map_variables(ext, shift)));
  ideal<F> mixed(ext, std::move(gens));
  ideal<F> flat = eliminate(mixed, {0}, bud);

  // eliminate() lands in a grevlex ring on the same variables; fold back into
  // the caller's ring.
  std::vector<std::size_t> id(r->arity());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<polynomial<F>> back;
  for (const auto& g : flat.gens()) back.push_back(g.map_variables(r, id));
  return ideal<F>(r, std::move(back));
}

// Quotient of f by g with zero remainder demanded; the division witness for
// colon-ideal generators.
template <class F>
polynomial<F> exact_divide(polynomial<F> f, const polynomial<F>& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw precondition_error("exact division by zero");
  const F& k = f.ring()->field();
  std::vector<term<F>> q;
  while (!f.is_zero()) {
    if (!g.leading_monomial().divides(f.leading_monomial()))
      throw precondition_error("exact division has a remainder");
    typename F::elem c = k.div(f.leading_coeff(), g.leading_coeff());
    monomial m = g.leading_monomial().div_into(f.leading_monomial());
    q.push_back({c, m});
    f = f.sub_scaled(c, m, g);
  }
  return polynomial<F>::from_terms(g.ring(), std::move(q));
}

// (I : g) via the principal-intersection route: every generator of I ∩ (g)
// is divisible by g; divide each one out.
template <class F>
ideal<F> quotient_by_poly(const ideal<F>& I, const polynomial<F>& g,
                          const budget& bud = default_budget()) {
  require_same_ring(I.ring(), g.ring());
  if (g.is_zero()) throw precondition_error("colon by the zero polynomial");
  ideal<F> principal(I.ring(), {g});
  ideal<F> cap = intersect(I, principal, bud);
  std::vector<polynomial<F>> gens;
  for (const auto& h : cap.gens()) gens.push_back(exact_divide(h, g));
  return ideal<F>(I.ring(), std::move(gens));
}

// (I : J) = ∩_g (I : g) over the generators of J.
template <class F>
ideal<F> colon(const ideal<F>& I, const ideal<F>& J,
               const budget& bud = default_budget()) {
  require_same_ring(I.ring(), J.ring());
  if (J.gens().empty()) throw precondition_error("colon by the zero ideal");
  bool first = true;
  ideal<F> acc = I;
  for (const auto& g : J.gens()) {
    ideal<F> q = quotient_by_poly(I, g, bud);
    acc = first ? q : intersect(acc, q, bud);
    first = false;
  }
  return acc;
}

}  // namespace segrelab
