#pragma once

#include <map>
#include <string>

#include "jetalg/chart.hpp"
#include "jetalg/vector_field.hpp"

namespace jetalg {

/// Differential operator sum_k a_k d^k in normal order (coefficients left,
/// derivatives right).
class DiffOp {
 public:
  using Terms = std::map<MultiIndex, RingElem>;

  DiffOp() = default;
  /// Zero operator.
  explicit DiffOp(ChartPtr chart);
  /// Multiplication by a.
  static DiffOp function(const RingElem& a);
  static DiffOp identity(const ChartPtr& chart);
  /// a d^k.
  static DiffOp monomial(const RingElem& a, const MultiIndex& k);
  /// sum_i v_i d/dx_i.
  static DiffOp from_field(const VectorField& v);

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingElem coeff(const MultiIndex& k) const;
  void add_term(const MultiIndex& k, const RingElem& a);
  unsigned order() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  /// Left multiplication by a function (stays normal ordered).
  friend DiffOp operator*(const RingElem& a, const DiffOp& p);
  friend DiffOp operator*(const Rational& c, const DiffOp& p);
  /// Composition, same as dop_mul.
  friend DiffOp operator*(const DiffOp& p, const DiffOp& q);

  std::string to_string() const;
  friend bool operator==(const DiffOp& a, const DiffOp& b);

 private:
  void require_same_chart(const DiffOp& other) const;

  ChartPtr chart_;
  Terms terms_;
};

/// Composition p o q, normal ordered with the generalized Leibniz rule
///   (a d^alpha)(b d^beta) = sum_{gamma <= alpha} C(alpha, gamma) a d^gamma(b) d^{alpha - gamma + beta}.
DiffOp dop_mul(const DiffOp& p, const DiffOp& q);

/// sum_k a_k d^k f.
RingElem dop_apply(const DiffOp& p, const RingElem& f);

}  // namespace jetalg
