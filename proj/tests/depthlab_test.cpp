// Depth via greedy linear regular sequences with socle certificates, the
// named fixtures, the Frobenius-witness mechanism, the F-purity depth
// inequality, and mod-p persistence of rational regular sequences.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "segrelab/depthlab.hpp"
#include "segrelab/fields.hpp"
#include "segrelab/parse.hpp"

namespace segrelab {
namespace {

using QP = polynomial<rational_field>;
using FP = polynomial<prime_field>;

TEST(Candidates, FiniteFieldCountsProjectivePoints) {
  // one representative per point of P^(n-1)(F_p): (p^n - 1)/(p - 1)
  prime_field f5(5);
  auto r2 = make_ring(f5, {"x", "y"});
  EXPECT_EQ(linear_form_candidates(r2, 0).size(), 6u);
  prime_field f7(7);
  auto r6 = segre_alias_ring(f7);
  EXPECT_EQ(linear_form_candidates(r6, 0).size(), 19608u);  // (7^6-1)/6
}

TEST(Candidates, FiniteFieldSetIsSeedIndependent) {
  prime_field f5(5);
  auto r = make_ring(f5, {"x", "y", "z"});
  auto a = linear_form_candidates(r, 0);
  auto b = linear_form_candidates(r, 12345);
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> sa, sb;
  for (const auto& f : a) sa.insert(format_poly(f));
  for (const auto& f : b) sb.insert(format_poly(f));
  EXPECT_EQ(sa, sb);
  // same seed, same order
  auto a2 = linear_form_candidates(r, 0);
  EXPECT_EQ(a, a2);
}

TEST(Candidates, RationalFormsHaveContentOne) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  auto cands = linear_form_candidates(r, 0, 2);
  // entries in {0,1,2}, gcd 1: (0,1),(1,0),(1,1),(1,2),(2,1)
  EXPECT_EQ(cands.size(), 5u);
  std::set<std::string> got;
  for (const auto& f : cands) got.insert(format_poly(f));
  EXPECT_EQ(got, (std::set<std::string>{"y", "x", "x + y", "x + 2*y",
                                        "2*x + y"}));
}

TEST(Candidates, EnumerationCapTrips) {
  // 12 variables over F_7 would be ~10^10 candidates
  prime_field f7(7);
  std::vector<std::string> vars;
  for (int i = 0; i < 12; ++i) vars.push_back("x" + std::to_string(i));
  auto r = make_ring(f7, vars);
  EXPECT_THROW(linear_form_candidates(r, 0), budget_exhausted);
}

TEST(RegularElement, SkipsZerodivisors) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> I(r, {parse_poly(r, "x*y")});
  std::vector<FP> cands{parse_poly(r, "x"), parse_poly(r, "y"),
                        parse_poly(r, "x + y")};
  auto l = regular_element_search(I, cands);
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ(*l, parse_poly(r, "x + y"));
}

TEST(RegularElement, MaximalIdealHasNone) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  auto I = maximal_ideal(r);
  auto l = regular_element_search(I, linear_form_candidates(r, 0));
  EXPECT_FALSE(l.has_value());
}

TEST(RegularElement, ZeroIdealTakesFirstCandidate) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> I(r, {});
  auto cands = linear_form_candidates(r, 3);
  auto l = regular_element_search(I, cands);
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ(*l, cands.front());
}

TEST(Socle, CertifiesDepthZero) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> J(
      r, {parse_poly(r, "x^2"), parse_poly(r, "x*y"), parse_poly(r, "y^2")});
  auto y = socle_element(J);
  ASSERT_TRUE(y.has_value());
  EXPECT_FALSE(J.contains(*y));
  // y * m lands in J for every variable
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_TRUE(J.contains(y->mul(QP::variable(r, i))));
}

TEST(Socle, AbsentWhenDepthPositive) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  EXPECT_FALSE(socle_element(ideal<rational_field>(r, {parse_poly(r, "x")}))
                   .has_value());
  EXPECT_FALSE(socle_element(ideal<rational_field>(r, {})).has_value());
}

TEST(Depth, HypersurfaceIsCohenMacaulay) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> I(r, {parse_poly(r, "x*y")});
  auto rep = depth_graded(I, 0);
  EXPECT_EQ(rep.dim, 1);
  EXPECT_EQ(rep.depth, 1);
  EXPECT_TRUE(rep.depth_is_exact);
  EXPECT_TRUE(rep.is_cm);
  EXPECT_TRUE(is_cohen_macaulay(I, 0));
}

TEST(Depth, ArtinianQuotient) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> I(
      r, {parse_poly(r, "x^2"), parse_poly(r, "x*y"), parse_poly(r, "y^2")});
  auto rep = depth_graded(I, 0);
  EXPECT_EQ(rep.dim, 0);
  EXPECT_EQ(rep.depth, 0);
  EXPECT_TRUE(rep.depth_is_exact);
  EXPECT_TRUE(rep.is_cm);  // Artinian: depth 0 = dim 0
  EXPECT_TRUE(rep.regular_sequence.empty());
}

TEST(Depth, ZeroIdealIsCohenMacaulay) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y", "z"});
  ideal<prime_field> I(r, {});
  EXPECT_TRUE(is_cohen_macaulay(I, 0));
  auto rep = depth_graded(I, 0);
  EXPECT_EQ(rep.dim, 3);
  EXPECT_EQ(rep.depth, 3);
}

TEST(Depth, UnitIdealRefused) {
  prime_field k(5);
  auto r = make_ring(k, {"x"});
  ideal<prime_field> I(r, {parse_poly(r, "x"), parse_poly(r, "x + 1")});
  EXPECT_THROW(depth_graded(I, 0), precondition_error);
}

TEST(Depth, InhomogeneousRefused) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> I(r, {parse_poly(r, "x^2 + y")});
  EXPECT_THROW(depth_graded(I, 0), precondition_error);
}

TEST(Depth, SegreFixtureIsDepthTwoOfDimThree) {
  auto I = fixture_fermat_segre(prime_field(7));
  auto rep = depth_graded(I, 0);
  EXPECT_EQ(rep.dim, 3);
  EXPECT_EQ(rep.depth, 2);
  EXPECT_TRUE(rep.depth_is_exact);
  EXPECT_FALSE(rep.is_cm);
  EXPECT_EQ(rep.regular_sequence.size(), 2u);
}

TEST(Depth, SegreFixtureSeedInvariance) {
  auto I = fixture_fermat_segre(prime_field(7));
  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{42}}) {
    auto rep = depth_graded(I, seed);
    EXPECT_EQ(rep.depth, 2) << seed;
    EXPECT_TRUE(rep.depth_is_exact) << seed;
  }
}

TEST(Depth, DeterminantalFixtureIsCohenMacaulay) {
  auto I = fixture_determinantal(prime_field(7), 2);
  auto rep = depth_graded(I, 0);
  EXPECT_EQ(rep.dim, 4);  // 6 variables, height-2 determinantal ideal
  EXPECT_EQ(rep.depth, 4);
  EXPECT_TRUE(rep.is_cm);
}

TEST(Depth, HartshorneQuarticHasDepthOne) {
  auto I = fixture_hartshorne(prime_field(5));
  auto rep = depth_graded(I, 0);
  EXPECT_EQ(rep.dim, 2);
  EXPECT_EQ(rep.depth, 1);
  EXPECT_TRUE(rep.depth_is_exact);
  EXPECT_FALSE(rep.is_cm);
}

TEST(Fixtures, LookupByName) {
  prime_field k(7);
  EXPECT_EQ(example_ideals("fermat_segre", k).gens().size(), 7u);
  EXPECT_EQ(example_ideals("hartshorne", k).gens().size(), 4u);
  EXPECT_EQ(example_ideals("determinantal2", k).gens().size(), 3u);
  EXPECT_EQ(example_ideals("determinantal3", k).gens().size(), 4u);
  EXPECT_EQ(example_ideals("determinantal3", k).ring()->arity(), 12u);
  EXPECT_THROW(example_ideals("nonesuch", k), precondition_error);
  EXPECT_THROW(example_ideals("determinantal1", k), precondition_error);
}

TEST(Fixtures, DeterminantalMinorsAreTheTwoByTwos) {
  rational_field q;
  auto I = fixture_determinantal(q, 2);
  auto r = I.ring();
  ASSERT_EQ(r->arity(), 6u);
  // rows x1*, x2*; one minor per dropped column, in column order
  ASSERT_EQ(I.gens().size(), 3u);
  EXPECT_EQ(I.gens()[0], parse_poly(r, "x12*x23 - x13*x22"));
  EXPECT_EQ(I.gens()[1], parse_poly(r, "x11*x23 - x13*x21"));
  EXPECT_EQ(I.gens()[2], parse_poly(r, "x11*x22 - x12*x21"));
}

TEST(Huneke, SegreFixtureMechanism) {
  auto a = fixture_fermat_segre(prime_field(7));
  auto rep = huneke_mechanism_check(a, 0);
  EXPECT_TRUE(rep.witness_found);
  EXPECT_TRUE(rep.product_in_j2);
  EXPECT_TRUE(rep.witness_outside_j2);
  EXPECT_TRUE(rep.frobenius_membership);
  EXPECT_TRUE(rep.all_verified());
  EXPECT_EQ(rep.q, 7u);
  EXPECT_FALSE(rep.y.empty());
  auto txt = rep.to_report().to_structured();
  EXPECT_NE(txt.find("frobenius_membership: true"), std::string::npos);
}

TEST(Huneke, RejectsCohenMacaulayInput) {
  // determinantal fixture is CM: no depth-2 stop, so the mechanism refuses
  auto I = fixture_determinantal(prime_field(7), 2);
  EXPECT_THROW(huneke_mechanism_check(I, 0), precondition_error);
}

TEST(SystemOfParameters, ZeroIdealNeedsAllVariables) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> I(r, {});
  EXPECT_TRUE(is_system_of_parameters(
      I, {parse_poly(r, "x"), parse_poly(r, "y")}));
  EXPECT_TRUE(is_system_of_parameters(
      I, {parse_poly(r, "x"), parse_poly(r, "x + y")}));
  EXPECT_FALSE(is_system_of_parameters(I, {parse_poly(r, "x")}));
  EXPECT_FALSE(is_system_of_parameters(
      I, {parse_poly(r, "x"), parse_poly(r, "x + 2*x")}));
}

TEST(DepthInequality, RadicalVsThickening) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> a(r, {parse_poly(r, "x")});
  ideal<prime_field> b(r, {parse_poly(r, "x^2")});
  auto rep = depth_inequality_check(a, b, 0);
  EXPECT_TRUE(rep.radicals_match);
  EXPECT_TRUE(rep.a_is_fpure);
  EXPECT_TRUE(rep.inequality_holds);
  EXPECT_EQ(rep.depth_a.depth, 1);
  EXPECT_EQ(rep.depth_b.depth, 1);
}

TEST(DepthInequality, MonomialExample) {
  // a = (xy), b = (x^2 y^3): same radical, a F-pure at 5
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> a(r, {parse_poly(r, "x*y")});
  ideal<prime_field> b(r, {parse_poly(r, "x^2*y^3")});
  auto rep = depth_inequality_check(a, b, 0);
  EXPECT_TRUE(rep.inequality_holds);
}

TEST(DepthInequality, MismatchedRadicalsRefused) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  ideal<prime_field> a(r, {parse_poly(r, "x")});
  ideal<prime_field> b(r, {parse_poly(r, "y")});
  EXPECT_THROW(depth_inequality_check(a, b, 0), precondition_error);
}

TEST(DepthInequality, NonFpureBaseRefused) {
  prime_field k(5);
  auto r = make_ring(k, {"x", "y"});
  // (x^2) is not radical and not F-pure; both directions of the radical
  // check still pass against itself
  ideal<prime_field> a(r, {parse_poly(r, "x^2")});
  EXPECT_THROW(depth_inequality_check(a, a, 0), precondition_error);
}

TEST(ModP, CraftedSequenceFailsExactlyAtSeven) {
  // x^2 - 2 y^2 factors mod p iff 2 is a square mod p: among {5,7,11,13}
  // only p = 7 (3^2 = 9 = 2), where x - 3y becomes a zerodivisor.
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> I(r, {});
  std::vector<QP> forms{parse_poly(r, "x^2 - 2*y^2"), parse_poly(r, "x - 3*y")};
  auto rep = modp_regular_sequence_check(I, forms, {5, 7, 11, 13});
  EXPECT_EQ(rep.failing_primes, (std::vector<std::uint64_t>{7}));
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.rows[0].status, modp_status::regular);   // 5
  EXPECT_EQ(rep.rows[1].status, modp_status::fails);     // 7
  EXPECT_EQ(rep.rows[1].failing_step, 2);
  EXPECT_EQ(rep.rows[2].status, modp_status::regular);   // 11
  EXPECT_EQ(rep.rows[3].status, modp_status::regular);   // 13
  auto txt = rep.to_report().to_structured();
  EXPECT_NE(txt.find("failing_primes: 7"), std::string::npos);
  EXPECT_NE(txt.find("p000007"), std::string::npos);
}

TEST(ModP, RegularAtAllSmallPrimes) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> I(r, {parse_poly(r, "x*y")});
  std::vector<QP> forms{parse_poly(r, "x + y")};
  auto rep = modp_regular_sequence_check(I, forms, {2, 3, 5});
  EXPECT_TRUE(rep.failing_primes.empty());
  for (const auto& row : rep.rows)
    EXPECT_EQ(row.status, modp_status::regular) << row.p;
  EXPECT_NE(rep.to_report().to_structured().find("failing_primes: none"),
            std::string::npos);
}

TEST(ModP, VanishingFormIsDegenerateNotFailing) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> I(r, {parse_poly(r, "x*y")});
  std::vector<QP> forms{parse_poly(r, "5*x + 5*y")};
  auto rep = modp_regular_sequence_check(I, forms, {3, 5, 7});
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_EQ(rep.rows[0].status, modp_status::regular);
  EXPECT_EQ(rep.rows[1].status, modp_status::degenerate);
  EXPECT_EQ(rep.rows[2].status, modp_status::regular);
  EXPECT_TRUE(rep.failing_primes.empty());
}

TEST(ModP, UnreducibleCoefficientIsDegenerate) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> I(r, {});
  std::vector<QP> forms{parse_poly(r, "1/5*x + y")};
  auto rep = modp_regular_sequence_check(I, forms, {5, 7});
  EXPECT_EQ(rep.rows[0].status, modp_status::degenerate);
  EXPECT_EQ(rep.rows[1].status, modp_status::regular);
}

TEST(ModP, NonRegularOverQIsRefused) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> I(r, {parse_poly(r, "x*y")});
  std::vector<QP> forms{parse_poly(r, "x")};
  EXPECT_THROW(modp_regular_sequence_check(I, forms, {5}), precondition_error);
  EXPECT_THROW(modp_regular_sequence_check(I, {}, {5}), precondition_error);
}

TEST(ModP, PrimeOrderIsCanonical) {
  rational_field q;
  auto r = make_ring(q, {"x", "y"});
  ideal<rational_field> I(r, {});
  std::vector<QP> forms{parse_poly(r, "x^2 - 2*y^2"), parse_poly(r, "x - 3*y")};
  auto a = modp_regular_sequence_check(I, forms, {13, 5, 7, 11, 7});
  auto b = modp_regular_sequence_check(I, forms, {5, 7, 11, 13});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].p, b.rows[i].p);
    EXPECT_EQ(a.rows[i].status, b.rows[i].status);
  }
  EXPECT_EQ(a.to_report().to_structured(), b.to_report().to_structured());
}

}  // namespace
}  // namespace segrelab
