#pragma once

#include <cstdint>
#include <cstdio>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "segrelab/ellfrob.hpp"
#include "segrelab/report.hpp"
#include "segrelab/segre.hpp"

namespace segrelab {

template <class F>
ideal<F> maximal_ideal(const ring_ptr<F>& r) {
  std::vector<polynomial<F>> vars;
  for (std::size_t i = 0; i < r->arity(); ++i)
    vars.push_back(polynomial<F>::variable(r, i));
  return ideal<F>(r, std::move(vars));
}

// Candidate linear forms for regular-sequence search, in a deterministic
// seed-shuffled order.  Over F_p: every nonzero form up to scaling (leading
// coefficient 1).  Over Q: coefficient vectors in {0..c_max} with content 1.
// The shuffle is a hand-rolled Fisher-Yates so the order is identical across
// standard libraries.
template <class F>
std::vector<polynomial<F>> linear_form_candidates(const ring_ptr<F>& r,
                                                  std::uint64_t seed,
                                                  std::uint32_t c_max = 2) {
  const F& k = r->field();
  std::size_t n = r->arity();
  constexpr std::uint64_t enumeration_cap = 2'000'000;
  std::uint64_t base = F::is_finite ? k.characteristic() : c_max + 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    count *= base;
    if (count > enumeration_cap)
      throw budget_exhausted("linear-form candidate set exceeds " +
                             std::to_string(enumeration_cap) + " entries");
  }
  std::vector<std::vector<std::uint64_t>> vectors;
  if constexpr (F::is_finite) {
    std::uint64_t p = k.characteristic();
    for (std::size_t lead = 0; lead < n; ++lead) {
      std::vector<std::uint64_t> v(n, 0);
      v[lead] = 1;
      std::size_t free_coords = n - lead - 1;
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < free_coords; ++i) combos *= p;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < free_coords; ++i) {
          v[lead + 1 + i] = c % p;
          c /= p;
        }
        vectors.push_back(v);
      }
    }
  } else {
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= (c_max + 1);
    for (std::uint64_t code = 1; code < combos; ++code) {
      std::uint64_t c = code;
      std::vector<std::uint64_t> v(n, 0);
      std::uint64_t g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = c % (c_max + 1);
        g = std::gcd(g, v[i]);
        c /= (c_max + 1);
      }
      if (g == 1) vectors.push_back(std::move(v));
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = vectors.size(); i > 1; --i)
    std::swap(vectors[i - 1], vectors[rng() % i]);

  std::vector<polynomial<F>> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<term<F>> ts;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i])
        ts.push_back({k.from_integer(static_cast<long long>(v[i])),
                      monomial::var(n, i)});
    out.push_back(polynomial<F>::from_terms(r, std::move(ts)));
  }
  return out;
}

// First candidate that is regular on R/I, i.e. (I : l) = I; nullopt when the
// enumeration is exhausted.
template <class F>
std::optional<polynomial<F>> regular_element_search(
    const ideal<F>& I, const std::vector<polynomial<F>>& candidates,
    const budget& bud = default_budget()) {
  for (const auto& l : candidates) {
    if (l.is_zero()) continue;
    if (I.contains(l, bud)) continue;  // a member is always a zerodivisor mod I
    ideal<F> q = quotient_by_poly(I, l, bud);
    if (I.contains_all(q.gens(), bud)) return l;
  }
  return std::nullopt;
}

// depth(R/J) = 0 exactly when the socle (J : m)/J is nonzero; this is the
// certificate that lets the greedy search stop without exhausting the
// candidate list.  Returns a witness socle element (reduced mod J) when one
// exists.
template <class F>
std::optional<polynomial<F>> socle_element(const ideal<F>& J,
                                           const budget& bud = default_budget()) {
  ideal<F> q = colon(J, maximal_ideal(J.ring()), bud);
  auto basis = J.groebner(bud);
  for (const auto& g : q.gens()) {
    polynomial<F> nf = normal_form(g, basis);
    if (!nf.is_zero()) return nf;
  }
  return std::nullopt;
}

struct depth_report {
  std::string ideal_description;
  int dim = 0;
  int depth = 0;
  bool depth_is_exact = true;  // false: enumeration exhausted, lower bound only
  bool is_cm = false;
  std::vector<std::string> regular_sequence;
  std::string note;

  report to_report() const {
    report rep;
    rep.set("ideal", ideal_description);
    rep.set("dim", dim);
    rep.set("depth", depth);
    rep.set("depth_is_exact", depth_is_exact);
    if (!depth_is_exact) rep.set("depth_meaning", "lower bound only");
    rep.set("is_cohen_macaulay", is_cm);
    auto& seq = rep.section("regular_sequence");
    for (std::size_t i = 0; i < regular_sequence.size(); ++i)
      seq.set("l" + std::to_string(i + 1), regular_sequence[i]);
    rep.set("note", note);
    return rep;
  }
};

// Graded depth by greedy regular sequences of linear forms.  Each round first
// looks for a socle element — its presence certifies depth 0 for the current
// quotient, making the reported depth exact — and only then scans the
// seed-shuffled candidate forms.  If the candidates run out with no socle
// found, the result is flagged as a lower bound, never passed off as exact.
template <class F>
depth_report depth_graded(const ideal<F>& I, std::uint64_t seed,
                          const budget& bud = default_budget(),
                          std::uint32_t c_max = 2) {
  if (I.is_unit(bud)) throw precondition_error("depth of the zero ring is undefined");
  for (const auto& g : I.gens())
    if (!g.is_homogeneous())
      throw precondition_error("graded depth needs homogeneous generators");

  depth_report out;
  std::string desc;
  for (const auto& g : I.gens()) {
    if (!desc.empty()) desc += ", ";
    desc += format_poly(g);
  }
  out.ideal_description = desc.empty() ? "0" : "(" + desc + ")";
  out.dim = I.dimension(bud);

  auto candidates = linear_form_candidates(I.ring(), seed, c_max);
  ideal<F> J = I;
  while (true) {
    if (static_cast<int>(out.regular_sequence.size()) == out.dim) {
      out.depth = out.dim;
      break;
    }
    if (socle_element(J, bud)) {
      out.depth = static_cast<int>(out.regular_sequence.size());
      break;
    }
    auto l = regular_element_search(J, candidates, bud);
    if (!l) {
      out.depth = static_cast<int>(out.regular_sequence.size());
      out.depth_is_exact = false;
      break;
    }
    out.regular_sequence.push_back(format_poly(*l));
    J = ideal_sum(J, ideal<F>(I.ring(), {*l}));
  }
  out.is_cm = out.depth_is_exact && out.depth == out.dim;
  out.note =
      out.depth_is_exact
          ? "graded depth at the irrelevant maximal ideal; socle certificate "
            "makes the value exact. For the homogeneous fixtures here it "
            "agrees with the local depth at m."
          : "linear-form enumeration exhausted with no socle certificate: "
            "depth is a lower bound only.";
  return out;
}

template <class F>
bool is_cohen_macaulay(const ideal<F>& I, std::uint64_t seed,
                       const budget& bud = default_budget()) {
  if (I.gens().empty()) return true;  // the polynomial ring itself
  depth_report r = depth_graded(I, seed, bud);
  return r.is_cm;
}

// ---------------------------------------------------------------------------
// Fixtures

template <class F>
ideal<F> fixture_fermat_segre(const F& field) {
  segre_presentation<F> pres = seven_generators(fermat_cubic(field));
  ring_ptr<F> alias = segre_alias_ring(field);
  std::vector<polynomial<F>> gens;
  for (const auto& g : pres.seven)
    gens.push_back(g.map_variables(alias, {0, 1, 2, 3, 4, 5}));
  return ideal<F>(alias, std::move(gens));
}

// The quartic-monomial-curve prime: the kernel of K[w,x,y,z] onto
// K[s^4, s^3 t, s t^3, t^4].
template <class F>
ideal<F> fixture_hartshorne(const F& field) {
  ring_ptr<F> r = make_ring(field, {"w", "x", "y", "z"});
  auto parse = [&](const char* s) { return parse_poly(r, s); };
  return ideal<F>(r, {parse("x*y - w*z"), parse("y^3 - x*z^2"),
                      parse("w*y^2 - x^2*z"), parse("x^3 - w^2*y")});
}

namespace detail {

template <class F>
polynomial<F> matrix_determinant(const std::vector<std::vector<polynomial<F>>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  polynomial<F> det = polynomial<F>::zero(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<polynomial<F>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<polynomial<F>> row;
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(m[i][jj]);
      sub.push_back(std::move(row));
    }
    polynomial<F> c = m[0][j].mul(matrix_determinant(sub));
    det = (j % 2 == 0) ? det.add(c) : det.sub(c);
  }
  return det;
}

}  // namespace detail

// Maximal minors of an n x (n+1) matrix of indeterminates x_rc.
template <class F>
ideal<F> fixture_determinantal(const F& field, std::size_t n) {
  if (n < 2 || n > 9)
    throw precondition_error("determinantal fixture supports 2 <= n <= 9");
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n + 1; ++j)
      vars.push_back("x" + std::to_string(i) + std::to_string(j));
  ring_ptr<F> r = make_ring(field, vars);
  auto entry = [&](std::size_t i, std::size_t j) {
    return polynomial<F>::variable(r, i * (n + 1) + j);
  };
  std::vector<polynomial<F>> minors;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::vector<polynomial<F>>> m;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<polynomial<F>> row;
      for (std::size_t j = 0; j <= n; ++j)
        if (j != skip) row.push_back(entry(i, j));
      m.push_back(std::move(row));
    }
    minors.push_back(detail::matrix_determinant(m));
  }
  return ideal<F>(r, std::move(minors));
}

template <class F>
ideal<F> example_ideals(const std::string& name, const F& field) {
  if (name == "fermat_segre") return fixture_fermat_segre(field);
  if (name == "hartshorne") return fixture_hartshorne(field);
  if (name.rfind("determinantal", 0) == 0) {
    std::string tail = name.substr(13);
    if (!tail.empty() && tail.front() == '(' && tail.back() == ')')
      tail = tail.substr(1, tail.size() - 2);
    if (tail.size() == 1 && std::isdigit(static_cast<unsigned char>(tail[0])))
      return fixture_determinantal(field, static_cast<std::size_t>(tail[0] - '0'));
  }
  throw precondition_error("unknown fixture '" + name + "'");
}

// ---------------------------------------------------------------------------
// The Frobenius-power mechanism behind the set-theoretic Cohen-Macaulayness
// argument: from a depth-2 stop on R/a (dim 3), produce the witness pair and
// check the displayed bracket-power membership.

struct huneke_report {
  bool witness_found = false;
  bool product_in_j2 = false;       // y * l3 in a + (l1, l2)
  bool witness_outside_j2 = false;  // y not in a + (l1, l2)
  bool frobenius_membership = false;  // y^q l3^q in (l1^q, l2^q) + a^[q]
  std::uint64_t q = 0;
  std::string l1, l2, l3, y;

  bool all_verified() const {
    return witness_found && product_in_j2 && witness_outside_j2 &&
           frobenius_membership;
  }

  report to_report() const {
    report rep;
    rep.set("witness_found", witness_found);
    rep.set("product_in_j2", product_in_j2);
    rep.set("witness_outside_j2", witness_outside_j2);
    rep.set("frobenius_membership", frobenius_membership);
    rep.set("q", q);
    auto& data = rep.section("witness");
    data.set("l1", l1);
    data.set("l2", l2);
    data.set("l3", l3);
    data.set("y", y);
    return rep;
  }
};

template <class F>
bool is_system_of_parameters(const ideal<F>& I,
                             const std::vector<polynomial<F>>& forms,
                             const budget& bud = default_budget()) {
  ideal<F> J = ideal_sum(I, ideal<F>(I.ring(), forms));
  for (std::size_t i = 0; i < I.ring()->arity(); ++i)
    if (!J.radical_contains(polynomial<F>::variable(I.ring(), i), bud))
      return false;
  return true;
}

// a must be a dim-3 non-CM quotient stopping at depth 2 (the Segre fixture
// is the intended input).  The witness y is a socle element of
// J2 = a + (l1, l2); l3 completes the system of parameters.  The final
// membership is decided by a degree-truncated basis, exact for homogeneous
// ideals at the witness degree.
inline huneke_report huneke_mechanism_check(const ideal<prime_field>& a,
                                            std::uint64_t seed,
                                            const budget& bud = default_budget()) {
  std::uint64_t p = a.ring()->field().characteristic();
  huneke_report out;
  out.q = p;

  depth_report dr = depth_graded(a, seed, bud);
  if (dr.regular_sequence.size() < 2 || dr.depth != 2 || !dr.depth_is_exact)
    throw precondition_error("mechanism check expects a depth-2 stop");
  polynomial<prime_field> l1 = parse_poly(a.ring(), dr.regular_sequence[0]);
  polynomial<prime_field> l2 = parse_poly(a.ring(), dr.regular_sequence[1]);
  ideal<prime_field> j2 =
      ideal_sum(a, ideal<prime_field>(a.ring(), {l1, l2}));

  std::optional<polynomial<prime_field>> l3;
  for (const auto& cand : linear_form_candidates(a.ring(), seed)) {
    if (j2.contains(cand, bud)) continue;
    if (is_system_of_parameters(a, {l1, l2, cand}, bud)) {
      l3 = cand;
      break;
    }
  }
  if (!l3) throw precondition_error("no third parameter form found");

  std::optional<polynomial<prime_field>> y = socle_element(j2, bud);
  if (!y) throw precondition_error("no socle witness at the depth-2 stop");

  out.witness_found = true;
  out.l1 = format_poly(l1);
  out.l2 = format_poly(l2);
  out.l3 = format_poly(*l3);
  out.y = format_poly(*y);
  out.product_in_j2 = j2.contains(y->mul(*l3), bud);
  out.witness_outside_j2 = !j2.contains(*y, bud);

  std::vector<polynomial<prime_field>> bracket_gens{l1.pow(p), l2.pow(p)};
  for (const auto& g : a.gens()) bracket_gens.push_back(g.pow(p));
  polynomial<prime_field> target = y->pow(p).mul(l3->pow(p));
  int cap = target.total_degree();
  auto basis = buchberger(bracket_gens, bud, nullptr, cap);
  out.frobenius_membership = normal_form(target, basis).is_zero();
  return out;
}

// ---------------------------------------------------------------------------
// Depth inequality between an F-pure ideal and one with the same radical.

struct depth_inequality_report {
  depth_report depth_a;
  depth_report depth_b;
  bool radicals_match = false;
  bool a_is_fpure = false;
  bool inequality_holds = false;

  report to_report() const {
    report rep;
    rep.set("radicals_match", radicals_match);
    rep.set("a_is_fpure", a_is_fpure);
    rep.set("inequality_holds", inequality_holds);
    rep.set("depth_a", depth_a.depth);
    rep.set("depth_b", depth_b.depth);
    return rep;
  }
};

// Verifies depth R/a >= depth R/b when rad(b) = a and R/a is F-pure.  The
// inequality is a theorem, so a computed violation aborts with a diagnostic
// instead of returning false.
inline depth_inequality_report depth_inequality_check(
    const ideal<prime_field>& a, const ideal<prime_field>& b, std::uint64_t seed,
    const budget& bud = default_budget()) {
  depth_inequality_report out;
  out.radicals_match = true;
  for (const auto& g : a.gens())
    if (!b.radical_contains(g, bud)) out.radicals_match = false;
  for (const auto& g : b.gens())
    if (!a.radical_contains(g, bud)) out.radicals_match = false;
  if (!out.radicals_match)
    throw precondition_error("generators fail the two-way radical membership");

  out.a_is_fpure = fedder_fpure(a, bud);
  if (!out.a_is_fpure)
    throw precondition_error("the radical ideal is not F-pure at this prime");

  out.depth_a = depth_graded(a, seed, bud);
  out.depth_b = depth_graded(b, seed, bud);
  out.inequality_holds = out.depth_a.depth >= out.depth_b.depth;
  if (out.depth_a.depth_is_exact && out.depth_b.depth_is_exact &&
      !out.inequality_holds)
    throw claim_failure(
        "depth R/a = " + std::to_string(out.depth_a.depth) + " < " +
        std::to_string(out.depth_b.depth) +
        " = depth R/b: the proved inequality failed, so the engine is wrong");
  return out;
}

// ---------------------------------------------------------------------------
// Mod-p persistence of a rational regular sequence.

enum class modp_status : std::uint8_t { regular, fails, degenerate };

struct modp_result {
  std::uint64_t p = 0;
  modp_status status = modp_status::regular;
  int failing_step = -1;  // 1-based index of the first non-regular form
};

struct modp_report {
  std::vector<modp_result> rows;
  std::vector<std::uint64_t> failing_primes;

  report to_report() const {
    report rep;
    auto& primes = rep.section("primes");
    for (const auto& r : rows) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "p%06llu",
                    static_cast<unsigned long long>(r.p));
      auto& row = primes.section(buf);
      row.set("status", r.status == modp_status::regular    ? "regular"
                        : r.status == modp_status::fails     ? "fails"
                                                             : "degenerate");
      if (r.status == modp_status::fails) row.set("failing_step", r.failing_step);
    }
    std::string fp;
    for (auto p : failing_primes) {
      if (!fp.empty()) fp += ",";
      fp += std::to_string(p);
    }
    rep.set("failing_primes", fp.empty() ? "none" : fp);
    return rep;
  }
};

namespace detail {

template <class F>
bool sequence_is_regular(const ideal<F>& I,
                         const std::vector<polynomial<F>>& forms,
                         int* failing_step, const budget& bud) {
  ideal<F> J = I;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    bool member = J.contains(forms[i], bud);
    bool regular = false;
    if (!member) {
      ideal<F> q = quotient_by_poly(J, forms[i], bud);
      regular = J.contains_all(q.gens(), bud);
    }
    if (!regular) {
      if (failing_step) *failing_step = static_cast<int>(i) + 1;
      return false;
    }
    J = ideal_sum(J, ideal<F>(I.ring(), {forms[i]}));
  }
  return true;
}

}  // namespace detail

// The forms must be a regular sequence on R_Q/I (verified first; that is the
// precondition, not the thing under test).  Per prime: reduce everything and
// re-run the step-by-step colon checks.  A form that vanishes mod p is
// degenerate, distinct from a regularity failure.  Primes are processed in
// parallel and reported in ascending order.
inline modp_report modp_regular_sequence_check(
    const ideal<rational_field>& I,
    const std::vector<polynomial<rational_field>>& forms,
    std::vector<std::uint64_t> primes, const budget& bud = default_budget()) {
  if (forms.empty()) throw precondition_error("empty form sequence");
  if (!detail::sequence_is_regular(I, forms, nullptr, bud))
    throw precondition_error("forms are not a regular sequence over Q");

  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  modp_report out;
  out.rows.resize(primes.size());
  auto run_one = [&](std::size_t idx) {
    std::uint64_t p = primes[idx];
    modp_result r;
    r.p = p;
    try {
      prime_field k(p);
      ring_ptr<prime_field> rp = make_ring(k, I.ring()->vars(), I.ring()->order());
      auto down = [&](const polynomial<rational_field>& g) {
        return g.map_coefficients(rp, [&](const mpq_class& c) {
          return reduce_coeff_mod_p(c, k);
        });
      };
      std::vector<polynomial<prime_field>> gens;
      for (const auto& g : I.gens()) gens.push_back(down(g));
      std::vector<polynomial<prime_field>> fp;
      bool degenerate = false;
      for (const auto& f : forms) {
        polynomial<prime_field> g = down(f);
        if (g.is_zero()) degenerate = true;
        fp.push_back(std::move(g));
      }
      if (degenerate) {
        r.status = modp_status::degenerate;
      } else {
        ideal<prime_field> Ip(rp, std::move(gens));
        int step = -1;
        r.status = detail::sequence_is_regular(Ip, fp, &step, bud)
                       ? modp_status::regular
                       : modp_status::fails;
        r.failing_step = step;
      }
    } catch (const precondition_error&) {
      r.status = modp_status::degenerate;
    }
    out.rows[idx] = r;
  };

  std::size_t workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), primes.size());
  if (workers > 1) {
    std::vector<std::future<void>> tasks;
    for (std::size_t wid = 0; wid < workers; ++wid)
      tasks.push_back(std::async(std::launch::async, [&, wid] {
        for (std::size_t i = wid; i < primes.size(); i += workers) run_one(i);
      }));
    for (auto& t : tasks) t.get();
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
  }
  for (const auto& r : out.rows)
    if (r.status == modp_status::fails) out.failing_primes.push_back(r.p);
  return out;
}

}  // namespace segrelab
