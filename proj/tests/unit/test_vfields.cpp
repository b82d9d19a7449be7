#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace jetalg;
using namespace jetalg::test;

TEST(VectorField, Apply) {
  const auto a = fixture("affine1");
  EXPECT_EQ(vf_apply(V(a, "x"), E(a, "x^2")), E(a, "2*x^2"));
  const auto e = fixture("elliptic");
  EXPECT_EQ(vf_apply(V(e, "1"), E(e, "y")), E(e, "(3*x^2 - 1)/(2*y)"));
  EXPECT_TRUE(vf_apply(V(e, "x*y + 1/y"), e->one()).is_zero());
}

TEST(VectorField, Bracket) {
  const auto a = fixture("affine1");
  EXPECT_EQ(vf_bracket(V(a, "1"), V(a, "x")), V(a, "1"));
  const auto a2 = fixture("affine2");
  EXPECT_EQ(vf_bracket(V(a2, "0; x1"), V(a2, "x2; 0")), V(a2, "x1; -x2"));
  const auto e = fixture("elliptic");
  EXPECT_EQ(vf_bracket(V(e, "1"), V(e, "y")), V(e, "(3*x^2 - 1)/(2*y)"));
}

TEST(VectorField, BracketIsCommutatorOfActions) {
  const auto e = fixture("elliptic");
  const VectorField v = V(e, "x*y"), w = V(e, "x^2 + 1/y");
  const RingElem f = E(e, "x^3*y - 2/y");
  EXPECT_EQ(vf_apply(vf_bracket(v, w), f), vf_apply(v, vf_apply(w, f)) - vf_apply(w, vf_apply(v, f)));
}

TEST(VectorField, ModuleStructure) {
  const auto a2 = fixture("affine2");
  const VectorField v = V(a2, "x1; x2^2");
  EXPECT_EQ(E(a2, "x1") * v, V(a2, "x1^2; x1*x2^2"));
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_THROW(V(a2, "x1"), ParseError);
}
