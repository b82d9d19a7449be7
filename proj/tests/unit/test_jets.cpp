#include <gtest/gtest.h>

#include "helpers.hpp"
#include "jetalg/jet.hpp"

using namespace jetalg;
using namespace jetalg::test;

namespace {

/// Jet from coefficient expressions by t-exponent, N = 1.
Jet jet1(const ChartPtr& c, unsigned k, std::initializer_list<std::pair<unsigned, const char*>> terms) {
  Jet u(c, k);
  for (const auto& [e, src] : terms) u.add_term(MultiIndex{e}, E(c, src));
  return u;
}

}  // namespace

TEST(JetOf, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(jet_of(E(a, "x^2"), 2), jet1(a, 2, {{0, "x^2"}, {1, "2*x"}, {2, "1"}}));
  const auto l = fixture("laurent");
  EXPECT_EQ(jet_of(E(l, "1/x"), 2), jet1(l, 2, {{0, "1/x"}, {1, "-1/x^2"}, {2, "1/x^3"}}));
  const auto e = fixture("elliptic");
  EXPECT_EQ(jet_of(e->variable(1), 1), jet1(e, 1, {{0, "y"}, {1, "(3*x^2 - 1)/(2*y)"}}));
}

TEST(JetOf, EllipticSecondOrderOracle) {
  const auto e = fixture("elliptic");
  EXPECT_EQ(jet_of(e->variable(1), 2).coeff(MultiIndex{2}), E(e, "(3*x^4 - 6*x^2 + 12*x - 1)/(8*y^3)"));
}

TEST(JetOfPair, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(jet_of_pair(E(a, "x"), E(a, "x"), 1), jet1(a, 1, {{0, "x^2"}, {1, "x"}}));
  const RingElem f = E(a, "x^3 - 2");
  EXPECT_EQ(jet_of_pair(a->one(), f, 3), jet_of(f, 3));
  EXPECT_EQ(jet_of_pair(a->one(), a->one(), 3), Jet::constant(a->one(), 3));
}

TEST(JetMul, Examples) {
  const auto a = fixture("affine1");
  const Jet jx = jet_of(E(a, "x"), 2);
  EXPECT_EQ(jet_mul(jx, jx), jet_of(E(a, "x^2"), 2));
  EXPECT_EQ(jet_mul(jx, Jet::constant(a->one(), 2)), jx);
  EXPECT_EQ(jet_mul(delta(E(a, "x"), 2), delta(E(a, "x"), 2)), jet1(a, 2, {{2, "1"}}));
}

TEST(JetMul, TruncatesAndChecksCharts) {
  const auto a = fixture("affine1");
  const Jet t = jet1(a, 3, {{2, "1"}});
  EXPECT_TRUE(jet_mul(t, t).is_zero());
  EXPECT_THROW(jet_mul(t, Jet(fixture("laurent"), 3)), MismatchError);
}

TEST(Delta, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(delta(E(a, "x"), 2), jet1(a, 2, {{1, "-1"}}));
  EXPECT_EQ(delta(E(a, "x^2"), 2), jet1(a, 2, {{1, "-2*x"}, {2, "-1"}}));
  EXPECT_TRUE(delta(E(a, "7/3"), 2).is_zero());
}

TEST(TOrder, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(t_order(jet_mul(delta(E(a, "x"), 3), delta(E(a, "x^2"), 3))), 2u);
  EXPECT_EQ(t_order(jet_of(a->one(), 3)), 0u);
  EXPECT_EQ(t_order(Jet(a, 3)), 4u);
}

TEST(FactorActions, Examples) {
  const auto e = fixture("elliptic");
  const RingElem f = E(e, "x^2*y + 1/y");
  EXPECT_TRUE(act_first_factor(0, jet_of(f, 3)).is_zero());
  const auto a = fixture("affine1");
  EXPECT_EQ(act_first_factor(0, delta(E(a, "x"), 3)), Jet::constant(a->one(), 2));
  EXPECT_EQ(act_second_factor(0, jet_of(E(a, "x^2"), 2)), jet1(a, 1, {{0, "2*x"}, {1, "2"}}));
  EXPECT_THROW(act_first_factor(0, Jet(a, 0)), DomainError);
}

TEST(FactorActions, MatchDecomposableOracle) {
  // On g (x) f the first factor differentiates g and the second f.
  const auto e = fixture("elliptic");
  const RingElem g = E(e, "x*y - 1"), f = E(e, "y^3 + x");
  const Jet u = jet_of_pair(g, f, 3);
  EXPECT_EQ(act_first_factor(0, u), jet_of_pair(re_derive(0, g), f, 2));
  EXPECT_EQ(act_second_factor(0, u), jet_of_pair(g, re_derive(0, f), 2));
}

TEST(EvalDiagonal, Examples) {
  const auto e = fixture("elliptic");
  const RingElem g = E(e, "x + y"), f = E(e, "1/y");
  EXPECT_EQ(eval_diagonal(jet_of_pair(g, f, 3)), g * f);
  EXPECT_TRUE(eval_diagonal(delta(g, 3)).is_zero());
  EXPECT_EQ(eval_diagonal(Jet::constant(e->one(), 3)), e->one());
}

TEST(Taylor, Examples) {
  EXPECT_TRUE(taylor_identity_check(E(fixture("affine1"), "x^3"), 3));
  EXPECT_TRUE(taylor_identity_check(E(fixture("laurent"), "1/x"), 3));
  EXPECT_TRUE(taylor_identity_check(fixture("elliptic")->variable(1), 2));
  EXPECT_TRUE(taylor_extraction_check(fixture("elliptic")->variable(1), 3));
  EXPECT_TRUE(taylor_extraction_check(E(fixture("affine2"), "x1^2*x2 - x2^3"), 4));
}

TEST(DeltaMonomial, IsAProductOfDeltas) {
  const auto a2 = fixture("affine2");
  const Jet d1 = delta(E(a2, "x1"), 4), d2 = delta(E(a2, "x2"), 4);
  EXPECT_EQ(delta_monomial(a2, MultiIndex{2, 1}, 4), jet_mul(jet_mul(d1, d1), d2));
}

TEST(JetCompose, SubstitutionIntoPowerSeries) {
  // (1 + t)^{-1} composed with t -> t + t^2 agrees with the jet of the composite.
  const auto a = fixture("affine1");
  const Jet geo = jet1(a, 3, {{0, "1"}, {1, "-1"}, {2, "1"}, {3, "-1"}});
  const Jet sub = jet1(a, 3, {{1, "1"}, {2, "1"}});
  EXPECT_EQ(jet_compose(geo, {sub}), jet1(a, 3, {{0, "1"}, {1, "-1"}, {3, "1"}}));
}

TEST(Jet, Printing) {
  const auto a = fixture("affine1");
  EXPECT_EQ(jet_of(E(a, "x^2"), 2).to_string(), "x^2 + 2*x*t + t^2");
  EXPECT_EQ(jet_of(E(a, "x^2 + x"), 1).to_string(), "(x^2 + x) + (2*x + 1)*t");
  EXPECT_EQ(jet_of(fixture("laurent")->one(), 3).to_string(), "1");
  EXPECT_EQ(Jet(a, 2).to_string(), "0");
}
