#include <gtest/gtest.h>

#include "helpers.hpp"
#include "jetalg/transition.hpp"

using namespace jetalg;
using namespace jetalg::test;

namespace {

LBasis b1(unsigned e) { return LBasis{MultiIndex{e}, 0}; }

CurrentElem current(const ChartPtr& c, unsigned r, std::initializer_list<std::pair<LBasis, const char*>> terms) {
  CurrentElem out(c, r);
  for (const auto& [b, src] : terms) out.add_term(b, E(c, src));
  return out;
}

const Atlas& p1() {
  static const Atlas a = fixtures::atlas("p1");
  return a;
}

const TransitionPair& p1_01() { return p1().transition(0, 1); }

ChartPtr line(const char* name, const char* var, const char* den) {
  return parse_chart(std::string(R"({"name":")") + name + R"(","params":[")" + var + R"("],"denominator":")" + den +
                     "\"}");
}

}  // namespace

TEST(ValidateTransition, AcceptsFixturesAndIdentity) {
  EXPECT_NO_THROW(validate_transition(p1_01()));
  EXPECT_NO_THROW(validate_transition(TransitionPair::identity(fixture("elliptic"))));
  for (const auto& [i, j] : fixtures::atlas("plane_shear").transition_keys())
    EXPECT_NO_THROW(validate_transition(fixtures::atlas("plane_shear").transition(i, j)));
}

TEST(ValidateTransition, RejectsNonInverseMaps) {
  const ChartPtr u1 = line("U1", "x", "1"), u2 = line("U2", "y", "1");
  const ChartPtr o2 = line("O2", "y", "y"), o1 = line("O1", "x", "x");
  const TransitionPair tp(u1, u2, o2, o1, {E(o2, "y^2")}, {E(o1, "x")});
  try {
    validate_transition(tp);
    FAIL() << "accepted G = y^2, H = x";
  } catch (const TransitionError& e) {
    EXPECT_EQ(e.kind(), TransitionError::Kind::InverseCheckFailed);
  }
}

TEST(TransitionL, ProjectiveLineValues) {
  const ChartPtr o = p1_01().overlap();
  EXPECT_EQ(transition_l(MultiIndex{1}, 0, p1_01(), 4), current(o, 4, {{b1(1), "1"}, {b1(2), "1/y"}}));
  EXPECT_EQ(transition_l(MultiIndex{2}, 0, p1_01(), 4), current(o, 4, {{b1(2), "-1/y^2"}}));
  EXPECT_EQ(transition_l(MultiIndex{1}, 0, p1_01(), 2), current(o, 2, {{b1(1), "1"}, {b1(2), "1/y"}}));
  EXPECT_EQ(transition_l(MultiIndex{2}, 0, p1_01(), 2), current(o, 2, {{b1(2), "-1/y^2"}}));
  EXPECT_EQ(transition_l(MultiIndex{3}, 0, p1_01(), 4), current(o, 4, {{b1(3), "1/y^4"}, {b1(4), "-1/y^5"}}));
}

TEST(TransitionL, AgreesWithIsoRoute) {
  for (const auto& atlas : {fixtures::atlas("p1"), fixtures::atlas("plane_shear")}) {
    const std::size_t n = atlas.charts().front()->n();
    for (const auto& [i, j] : atlas.transition_keys())
      for (const auto& m : indices_up_to(n, 3)) {
        if (m.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p) {
          const TransitionPair& tp = atlas.transition(i, j);
          const SemiDirectElem iso = iso_transport(m, p, tp, 4);
          EXPECT_EQ(transition_l(m, p, tp, 4), iso.l_part) << atlas.name() << " " << i << "->" << j;
          EXPECT_TRUE(iso.v_part.is_zero());
        }
      }
  }
}

TEST(TransitionL, IdentityPair) {
  const auto a2 = fixture("affine2");
  const TransitionPair id = TransitionPair::identity(a2);
  for (const auto& m : indices_up_to(2, 3)) {
    if (m.is_zero()) continue;
    for (std::size_t p = 0; p < 2; ++p) {
      CurrentElem expected(a2, 4);
      expected.add_term(LBasis{m, p}, a2->one());
      EXPECT_EQ(transition_l(m, p, id, 4), expected);
      EXPECT_EQ(transition_via_iso(m, p, id, 4), expected);
    }
  }
}

TEST(TransitionL, RejectsDegreeMinusOneAndOverTruncation) {
  EXPECT_THROW(transition_l(MultiIndex{0}, 0, p1_01(), 4), DomainError);
  EXPECT_THROW(transition_l(MultiIndex{5}, 0, p1_01(), 4), DomainError);
}

TEST(Filtration, ProjectiveLine) {
  for (unsigned m = 1; m <= 3; ++m) EXPECT_TRUE(filtration_check(p1_01(), MultiIndex{m}, 0, 4));
  EXPECT_TRUE(jacobian_quotient_check(p1_01(), MultiIndex{1}, 0, 4));
  EXPECT_EQ(transition_l(MultiIndex{1}, 0, p1_01(), 4).degree_part(0), current(p1_01().overlap(), 4, {{b1(1), "1"}}));
  EXPECT_TRUE(jacobian_quotient_check(TransitionPair::identity(fixture("affine2")), MultiIndex{0, 1}, 1, 3));
}

TEST(Cocycle, ProjectiveLine) {
  const Atlas& a = p1();
  for (unsigned m = 1; m <= 3; ++m) {
    EXPECT_TRUE(cocycle_check(a, 0, 1, 2, MultiIndex{m}, 0, 4));
    EXPECT_TRUE(cocycle_check(a, 2, 1, 0, MultiIndex{m}, 0, 4));
    EXPECT_TRUE(cocycle_check(a, 0, 1, 0, MultiIndex{m}, 0, 4));
    EXPECT_TRUE(cocycle_check(a, 1, 1, 1, MultiIndex{m}, 0, 4));
  }
}

TEST(Cocycle, NegativeControl) {
  const Atlas& a = p1();
  const TransitionPair& tp = a.transition(0, 1);
  const TransitionPair naive(tp.source(), tp.target(), tp.overlap(), tp.source_overlap(), {tp.overlap()->param(0)},
                             {tp.source_overlap()->param(0)});
  const Atlas broken = a.with_transition(0, 1, naive);
  EXPECT_FALSE(cocycle_check(broken, 0, 1, 2, MultiIndex{1}, 0, 4));
}

TEST(Atlas, TripleOverlapFallbacks) {
  const Atlas& a = p1();
  EXPECT_EQ(a.triple_overlap(0, 1, 2)->name(), "T2");
  EXPECT_EQ(a.triple_overlap(0, 0, 1)->name(), a.transition(0, 1).overlap()->name());
  EXPECT_EQ(a.triple_overlap(0, 1, 1)->name(), a.transition(0, 1).overlap()->name());
  EXPECT_TRUE(a.has_transition(2, 0));
  EXPECT_EQ(a.chart_index("U2"), std::optional<std::size_t>(2));
}
