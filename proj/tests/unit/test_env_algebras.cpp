#include <gtest/gtest.h>

#include "helpers.hpp"
#include "jetalg/diff_op.hpp"
#include "jetalg/pbw.hpp"
#include "jetalg/tensor.hpp"

using namespace jetalg;
using namespace jetalg::test;

namespace {

DiffOp d(const ChartPtr& c, unsigned e) { return DiffOp::monomial(c->one(), MultiIndex{e}); }
DiffOp fn(const ChartPtr& c, const char* src) { return DiffOp::function(E(c, src)); }

const LBasis kE{MultiIndex{1}, 0};  // X d/dX
const LBasis kF{MultiIndex{2}, 0};  // X^2 d/dX

UElem u_of(std::initializer_list<std::pair<PBWMonomial, Rational>> terms, std::size_t n = 1, unsigned r = 3) {
  UElem out(n, r);
  for (const auto& [w, c] : terms) out.add_term(w, c);
  return out;
}

}  // namespace

TEST(DopMul, WeylRelations) {
  const auto a = fixture("affine1");
  EXPECT_EQ(dop_mul(d(a, 1), fn(a, "x")), DiffOp::monomial(E(a, "x"), MultiIndex{1}) + fn(a, "1"));
  EXPECT_EQ(dop_mul(d(a, 2), fn(a, "x")), DiffOp::monomial(E(a, "x"), MultiIndex{2}) + DiffOp::monomial(E(a, "2"), MultiIndex{1}));
  const auto l = fixture("laurent");
  EXPECT_EQ(dop_mul(d(l, 1), fn(l, "1/x")), DiffOp::monomial(E(l, "1/x"), MultiIndex{1}) + fn(l, "-1/x^2"));
}

TEST(DopApply, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(dop_apply(DiffOp::from_field(V(a, "x")), E(a, "x^2")), E(a, "2*x^2"));
  EXPECT_EQ(dop_apply(d(a, 2), E(a, "x^3")), E(a, "6*x"));
  EXPECT_EQ(dop_apply(DiffOp::identity(a), E(a, "x^5 - 1")), E(a, "x^5 - 1"));
}

TEST(DopMul, CompositionMatchesApplication) {
  const auto e = fixture("elliptic");
  const DiffOp p = dop_mul(DiffOp::from_field(V(e, "y")), fn(e, "x^2 + 1/y"));
  const DiffOp q = dop_mul(DiffOp::from_field(V(e, "x")), DiffOp::from_field(V(e, "1/y")));
  const RingElem f = E(e, "x^3*y - 1/y^2");
  EXPECT_EQ(dop_apply(dop_mul(p, q), f), dop_apply(p, dop_apply(q, f)));
  const DiffOp r = DiffOp::from_field(V(e, "x*y"));
  EXPECT_EQ(dop_mul(dop_mul(p, q), r), dop_mul(p, dop_mul(q, r)));
}

TEST(Pbw, Examples) {
  EXPECT_EQ(pbw_normalize({kE}, 1, 3), u_of({{{kE}, 1}}));
  EXPECT_EQ(pbw_normalize({kF, kE}, 1, 3), u_of({{{kE, kF}, 1}, {{kF}, -1}}));
  EXPECT_EQ(pbw_normalize({kE, kE}, 1, 3), u_of({{{kE, kE}, 1}}));
  EXPECT_EQ(std::string(kPBWOrder).empty(), false);
}

TEST(Pbw, RejectsFactorsOutsideTheTruncation) {
  EXPECT_THROW(pbw_normalize({LBasis{MultiIndex{0}, 0}}, 1, 3), DomainError);
  EXPECT_THROW(pbw_normalize({LBasis{MultiIndex{4}, 0}}, 1, 3), DomainError);
}

TEST(Pbw, CommutatorOfNormalFormsIsTheBracket) {
  const auto basis = l_basis(2, 2);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      UElem expected(2, 2);
      for (const auto& [c, coeff] : basis_bracket(a, b, 2)) expected.add_term({c}, coeff);
      EXPECT_EQ(pbw_normalize({a, b}, 2, 2) - pbw_normalize({b, a}, 2, 2), expected);
    }
}

TEST(TensorMul, Examples) {
  const auto a = fixture("affine1");
  const UElem one = UElem::unit(1, 2);
  const TensorElem dx = TensorElem::product(d(a, 1), one), x = TensorElem::product(fn(a, "x"), one);
  EXPECT_EQ(tensor_mul(dx, x),
            TensorElem::product(DiffOp::monomial(E(a, "x"), MultiIndex{1}), one) + TensorElem::product(fn(a, "1"), one));
  const TensorElem e = TensorElem::product(DiffOp::identity(a), u_of({{{kE}, 1}}, 1, 2));
  const DiffOp op = DiffOp::monomial(E(a, "x^2"), MultiIndex{2});
  EXPECT_EQ(tensor_mul(e, TensorElem::product(op, one)), TensorElem::product(op, u_of({{{kE}, 1}}, 1, 2)));
  const TensorElem s = tensor_mul(dx, e);
  EXPECT_EQ(tensor_mul(TensorElem::unit(a, 2), s), s);
}

TEST(AvToTensor, Examples) {
  const auto a = fixture("affine1");
  const UElem one = UElem::unit(1, 2);
  EXPECT_EQ(av_to_tensor(parse_av_word("vf:1", a), 2), TensorElem::product(d(a, 1), one));
  EXPECT_EQ(av_to_tensor(parse_av_word("vf:x", a), 2),
            TensorElem::product(DiffOp::from_field(V(a, "x")), one) +
                TensorElem::product(DiffOp::identity(a), u_of({{{kE}, 1}}, 1, 2)));
  EXPECT_EQ(av_to_tensor(parse_av_word("vf:1 | fun:x", a), 2) - av_to_tensor(parse_av_word("fun:x | vf:1", a), 2),
            TensorElem::unit(a, 2));
}

TEST(AvToTensor, VectorFieldCommutator) {
  const auto e = fixture("elliptic");
  const VectorField v = V(e, "x*y"), w = V(e, "1/y");
  const AVWord vw{{v, w}}, wv{{w, v}}, br{{vf_bracket(v, w)}};
  for (unsigned r = 1; r <= 3; ++r) EXPECT_EQ(av_to_tensor(vw, r) - av_to_tensor(wv, r), av_to_tensor(br, r));
}
