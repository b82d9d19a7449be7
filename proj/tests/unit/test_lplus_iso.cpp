#include <gtest/gtest.h>

#include "helpers.hpp"
#include "jetalg/semidirect.hpp"

using namespace jetalg;
using namespace jetalg::test;

namespace {

LBasis b1(unsigned e) { return LBasis{MultiIndex{e}, 0}; }
LBasis b2(unsigned e1, unsigned e2, std::size_t dir) { return LBasis{MultiIndex{e1, e2}, dir}; }

CurrentElem current(const ChartPtr& c, unsigned r, std::initializer_list<std::pair<LBasis, const char*>> terms) {
  CurrentElem out(c, r);
  for (const auto& [b, src] : terms) out.add_term(b, E(c, src));
  return out;
}

}  // namespace

TEST(LBracket, WittRelation) {
  const LElem e = LElem::basis(1, 3, b1(1)), f = LElem::basis(1, 3, b1(2));
  EXPECT_EQ(l_bracket(e, f), f);
  EXPECT_TRUE(l_bracket(f, f).is_zero());
}

TEST(LBracket, GlRelation) {
  const LElem a = LElem::basis(2, 2, b2(1, 0, 1)), b = LElem::basis(2, 2, b2(0, 1, 0));
  LElem expected(2, 2);
  expected.add_term(b2(1, 0, 0), Rational(1));
  expected.add_term(b2(0, 1, 1), Rational(-1));
  EXPECT_EQ(l_bracket(a, b), expected);
}

TEST(LBracket, TruncationDropsHighDegrees) {
  // [X^2 d, X^3 d] = X^4 d lies beyond r = 3.
  EXPECT_TRUE(l_bracket(LElem::basis(1, 3, b1(2)), LElem::basis(1, 3, b1(3))).is_zero());
  EXPECT_EQ(l_bracket(LElem::basis(1, 4, b1(2)), LElem::basis(1, 4, b1(3))), LElem::basis(1, 4, b1(4)));
}

TEST(LBracket, JacobiOnAllBasisTriples) {
  const auto basis = l_basis(2, 3);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const LElem x = LElem::basis(2, 3, a), y = LElem::basis(2, 3, b), z = LElem::basis(2, 3, c);
        EXPECT_TRUE((l_bracket(x, l_bracket(y, z)) + l_bracket(y, l_bracket(z, x)) + l_bracket(z, l_bracket(x, y)))
                        .is_zero());
      }
}

TEST(CurrentElem, RejectsDegreeMinusOne) {
  const auto a = fixture("affine1");
  CurrentElem c(a, 2);
  EXPECT_THROW(c.add_term(b1(0), a->one()), DomainError);
  // Degrees beyond the truncation vanish in the quotient.
  c.add_term(b1(3), a->one());
  EXPECT_TRUE(c.is_zero());
}

TEST(SdBracket, Examples) {
  const auto a = fixture("affine1");
  const SemiDirectElem dx(V(a, "1"), CurrentElem(a, 2));
  const SemiDirectElem xe(VectorField(a), current(a, 2, {{b1(1), "x"}}));
  EXPECT_EQ(sd_bracket(dx, xe), SemiDirectElem(VectorField(a), current(a, 2, {{b1(1), "1"}})));
  const SemiDirectElem e(VectorField(a), current(a, 2, {{b1(1), "1"}}));
  const SemiDirectElem f(VectorField(a), current(a, 2, {{b1(2), "1"}}));
  EXPECT_EQ(sd_bracket(e, f), f);
  const SemiDirectElem v(V(a, "x^2"), CurrentElem(a, 2)), w(V(a, "x + 1"), CurrentElem(a, 2));
  EXPECT_EQ(sd_bracket(v, w), SemiDirectElem(vf_bracket(V(a, "x^2"), V(a, "x + 1")), CurrentElem(a, 2)));
}

TEST(Phi, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(phi(jf_from_pair(a->one(), V(a, "x^2"), 2)),
            SemiDirectElem(V(a, "x^2"), current(a, 2, {{b1(1), "2*x"}, {b1(2), "1"}})));
  EXPECT_EQ(phi(jf_from_pair(a->one(), V(a, "1"), 3)), SemiDirectElem(V(a, "1"), CurrentElem(a, 3)));
  const SemiDirectElem p = phi(delta(E(a, "x"), 3) * jf_from_pair(E(a, "x"), V(a, "x^3"), 3));
  EXPECT_TRUE(p.v_part.is_zero());
  EXPECT_FALSE(p.l_part.is_zero());
}

TEST(Psi, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(psi(SemiDirectElem(V(a, "x"), CurrentElem(a, 2)), 2), jf_from_pair(E(a, "x"), V(a, "1"), 2));
  const JetField u = psi(SemiDirectElem(VectorField(a), current(a, 2, {{b1(1), "x^2 + 1"}})), 2);
  Jet expected(a, 2);
  expected.add_term(MultiIndex{1}, E(a, "x^2 + 1"));
  EXPECT_EQ(u[0], expected);
  EXPECT_TRUE(psi(SemiDirectElem(a, 2), 2).is_zero());
  EXPECT_THROW(psi(SemiDirectElem(a, 3), 2), MismatchError);
}

TEST(Iso, RoundTripOnElliptic) {
  const auto e = fixture("elliptic");
  for (unsigned k = 1; k <= 4; ++k) {
    JetField u = jf_from_pair(E(e, "x/y"), V(e, "y^3 + x"), k);
    u.component(0).add_term(MultiIndex{k}, E(e, "1/y^2"));
    EXPECT_EQ(psi(phi(u), k), u);
    const SemiDirectElem p(V(e, "y"), current(e, k, {{b1(k), "x*y"}, {b1(1), "3"}}));
    EXPECT_EQ(phi(psi(p, k)), p);
  }
}

TEST(Iso, BracketAndLinearity) {
  const auto e = fixture("elliptic");
  const unsigned k = 3;
  const JetField u = jf_from_pair(E(e, "x"), V(e, "y"), k) + delta(E(e, "y"), k) * jf_from_pair(e->one(), V(e, "x^2"), k);
  const JetField w = jf_from_pair(E(e, "1/y"), V(e, "x*y"), k);
  EXPECT_EQ(phi(jf_bracket(u, w)), sd_bracket(phi(u), phi(w)));
  const RingElem s = E(e, "x^2 - y");
  EXPECT_EQ(phi(jf_scale(s, u)), s * phi(u));
  EXPECT_EQ(psi(s * phi(w), k), jf_scale(s, w));
}
