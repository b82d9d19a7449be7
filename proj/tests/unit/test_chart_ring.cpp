#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace jetalg;
using namespace jetalg::test;

namespace {

ChartSpec spec_from(std::string_view json) { return parse_chart_spec(json); }

ChartError::Kind chart_error_kind(std::string_view json) {
  try {
    validate_chart(spec_from(json));
  } catch (const ChartError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ChartError for " << json;
  return ChartError::Kind::Malformed;
}

}  // namespace

TEST(ValidateChart, AcceptsAffineLineAndElliptic) {
  EXPECT_NO_THROW(validate_chart(spec_from(R"({"name":"a","params":["x"],"denominator":"1"})")));
  EXPECT_NO_THROW(validate_chart(fixture("elliptic")->spec()));
}

TEST(ValidateChart, RejectsNonInvertibleGenerator) {
  EXPECT_EQ(chart_error_kind(
                R"({"name":"cusp","params":["x"],"alg_gens":[{"name":"y","degree":2,"rhs":"x^3"}],"denominator":"1"})"),
            ChartError::Kind::MissingInvertibleGenerator);
}

TEST(ValidateChart, RejectsDegenerateRelationsAndNames) {
  EXPECT_EQ(chart_error_kind(
                R"({"name":"c","params":["x"],"alg_gens":[{"name":"y","degree":1,"rhs":"x"}],"denominator":"y"})"),
            ChartError::Kind::NonMonicRelation);
  EXPECT_EQ(chart_error_kind(R"({"name":"c","params":["x","x"],"denominator":"1"})"), ChartError::Kind::Malformed);
  EXPECT_EQ(chart_error_kind(R"({"name":"c","params":["x"],"denominator":"0"})"), ChartError::Kind::ZeroDenominator);
}

TEST(RingElem, RelationReduction) {
  const auto c = fixture("elliptic");
  EXPECT_EQ(E(c, "y") * E(c, "y"), E(c, "x^3 - x + 1"));
  EXPECT_TRUE(re_eq(E(c, "y^2"), E(c, "x^3 - x + 1")));
  EXPECT_EQ(E(c, "y^3").to_string(), "x^3*y - x*y + y");
}

TEST(RingElem, LocalizedArithmetic) {
  const auto c = fixture("laurent");
  EXPECT_EQ(E(c, "1/x") * E(c, "x"), c->one());
  EXPECT_TRUE(re_eq(RingElem(c, Poly::variable(c->vars(), 0), 1), c->one()));
  const RingElem a = E(c, "x^2 + 3/x");
  EXPECT_EQ(a + c->zero(), a);
  EXPECT_FALSE(re_eq(E(c, "x"), E(c, "x + 1")));
  EXPECT_EQ(E(c, "1/x^2").to_string(), "1/x^2");
}

TEST(RingElem, EqualityAcrossRepresentations) {
  const auto c = fixture("elliptic");
  // y / y^2 and 1/y are the same element written with different denominators.
  EXPECT_EQ(E(c, "y") * E(c, "1/y^2"), E(c, "1/y"));
  EXPECT_EQ(E(c, "(x^3 - x + 1)/y"), E(c, "y"));
}

TEST(RingElem, Inverse) {
  const auto c = fixture("elliptic");
  EXPECT_EQ(*try_inverse(E(c, "y^3")) * E(c, "y^3"), c->one());
  EXPECT_EQ(*try_inverse(E(c, "x^3 - x + 1")), E(c, "1/y^2"));
  EXPECT_FALSE(try_inverse(E(c, "x")).has_value());
}

TEST(Derive, Examples) {
  const auto l = fixture("laurent");
  EXPECT_EQ(re_derive(0, E(l, "1/x")), E(l, "-1/x^2"));
  const auto e = fixture("elliptic");
  EXPECT_EQ(re_derive(0, E(e, "y")), E(e, "(3*x^2 - 1)/(2*y)"));
  const auto a = fixture("affine1");
  EXPECT_EQ(re_derive(0, E(a, "x^2")), E(a, "2*x"));
}

TEST(Derive, ImplicitDifferentiationOracle) {
  // Differentiating y^2 = x^3 - x + 1 gives 2 y y' = 3x^2 - 1.
  const auto e = fixture("elliptic");
  const RingElem dy = re_derive(0, e->variable(1));
  EXPECT_EQ(E(e, "2*y") * dy, E(e, "3*x^2 - 1"));
  // Second derivative from the quotient rule on (3x^2 - 1) / (2y).
  EXPECT_EQ(re_derive(0, dy), E(e, "(3*x^4 - 6*x^2 + 12*x - 1)/(4*y^3)"));
}

TEST(Derive, MultiIndexExamples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(re_derive_multi(MultiIndex{2}, E(a, "x^3")), E(a, "6*x"));
  const auto a2 = fixture("affine2");
  EXPECT_EQ(re_derive_multi(MultiIndex{1, 1}, E(a2, "x1*x2")), a2->one());
  const auto l = fixture("laurent");
  EXPECT_EQ(re_derive_multi(MultiIndex{2}, E(l, "1/x")), E(l, "2/x^3"));
}

TEST(Derive, RejectsBadIndex) {
  const auto a = fixture("affine1");
  EXPECT_THROW(re_derive(1, a->one()), DomainError);
}

TEST(RingHom, CompositionRespectsRelations) {
  const auto c = fixture("elliptic");
  // y -> -y is an automorphism of the elliptic ring.
  const RingHom flip(c, c, {E(c, "x"), E(c, "-y")});
  EXPECT_TRUE(flip.respects_relations());
  EXPECT_EQ(flip(E(c, "x + 1/y")), E(c, "x - 1/y"));
  const RingHom bad(c, c, {E(c, "x"), E(c, "2*y")});
  EXPECT_FALSE(bad.respects_relations());
}
