#include <gtest/gtest.h>

#include "jetalg/expression.hpp"
#include "jetalg/multi_index.hpp"
#include "jetalg/poly.hpp"

using namespace jetalg;

namespace {

VarList vars_x() { return make_var_list({"x"}); }
VarList vars_x12() { return make_var_list({"x1", "x2"}); }
VarList vars_xy() { return make_var_list({"x", "y"}); }

}  // namespace

TEST(Rational, NormalizesAndPrints) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_TRUE((Rational(1, 3) + Rational(2, 3)).is_one());
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, BeyondMachineIntegers) {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000);
  EXPECT_EQ(big.to_string(), "1" + std::string(120, '0'));
  EXPECT_EQ(big / big, Rational(1));
}

TEST(Poly, ProductOfConjugates) {
  const auto x = vars_x();
  EXPECT_EQ(parse_poly("(x+1)*(x-1)", x), parse_poly("x^2 - 1", x));
}

TEST(Poly, AdditiveInverse) {
  const Poly p = parse_poly("3*x^4 - x + 7/2", vars_x());
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_EQ(poly_arith('-', p, p), Poly(vars_x()));
}

TEST(Poly, BinomialSquare) {
  const auto v = vars_x12();
  EXPECT_EQ(parse_poly("(x1+x2)^2", v), parse_poly("x1^2 + 2*x1*x2 + x2^2", v));
  EXPECT_EQ(poly_arith('*', parse_poly("x1+x2", v), parse_poly("x1+x2", v)), parse_poly("(x1+x2)^2", v));
}

TEST(Poly, MismatchedVariablesRejected) {
  EXPECT_THROW(parse_poly("x", vars_x()) + parse_poly("x1", vars_x12()), MismatchError);
}

TEST(Poly, Partials) {
  EXPECT_EQ(poly_partial(0, parse_poly("x^3", vars_x())), parse_poly("3*x^2", vars_x()));
  EXPECT_TRUE(poly_partial(1, parse_poly("x1", vars_x12())).is_zero());
  EXPECT_EQ(poly_partial(0, parse_poly("x^2*y", vars_xy())), parse_poly("2*x*y", vars_xy()));
}

TEST(Poly, LeibnizOnSamples) {
  const auto v = vars_xy();
  const Poly p = parse_poly("x^3*y - 2*y^2 + 5", v), q = parse_poly("x*y^4 + 1/3*x", v);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(poly_partial(i, p * q), poly_partial(i, p) * q + p * poly_partial(i, q));
}

TEST(Poly, GrlexLeadingTermAndPrinting) {
  const Poly p = parse_poly("x*y + x^2 + y^3", vars_xy());
  EXPECT_EQ(p.leading_term().first, (MultiIndex{0, 3}));
  EXPECT_EQ(p.to_string(), "y^3 + x^2 + x*y");
  EXPECT_EQ(p.total_degree(), 3u);
}

TEST(Poly, ExactDivision) {
  const auto v = vars_x();
  EXPECT_EQ(*parse_poly("x^2 - 1", v).exact_divide(parse_poly("x - 1", v)), parse_poly("x + 1", v));
  EXPECT_FALSE(parse_poly("x^2 + 1", v).exact_divide(parse_poly("x - 1", v)).has_value());
}

TEST(MultiIndex, Combinatorics) {
  EXPECT_EQ(factorial(MultiIndex{2, 1}), Rational(2));
  EXPECT_EQ(binomial(MultiIndex{2, 1}, MultiIndex{1, 0}), Rational(2));
  const MultiIndex m{3, 2};
  EXPECT_EQ(binomial(m, m), Rational(1));
  EXPECT_TRUE((MultiIndex{1, 0}).leq(m));
  EXPECT_FALSE((MultiIndex{0, 3}).leq(m));
  EXPECT_THROW(binomial(m, MultiIndex{0, 3}), DomainError);
  EXPECT_THROW((MultiIndex{1, 0} - MultiIndex{0, 1}), DomainError);
}

TEST(MultiIndex, GradedOrderAndEnumeration) {
  EXPECT_LT((MultiIndex{0, 1}), (MultiIndex{1, 0}));
  EXPECT_LT((MultiIndex{1, 0}), (MultiIndex{0, 2}));
  const auto all = indices_up_to(2, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(indices_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(lower_set(MultiIndex{2, 1}).size(), 6u);
}
