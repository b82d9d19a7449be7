#pragma once

#include <string>

#include "jetalg/jet_field.hpp"
#include "jetalg/lie_plus.hpp"
#include "jetalg/vector_field.hpp"

namespace jetalg {

/// Element (v, c) of V semidirect (A (x) L^(r)).
struct SemiDirectElem {
  VectorField v_part;
  CurrentElem l_part;

  SemiDirectElem() = default;
  SemiDirectElem(VectorField v, CurrentElem l);
  /// Zero element.
  SemiDirectElem(const ChartPtr& chart, unsigned max_total);

  const ChartPtr& chart() const { return v_part.chart(); }
  unsigned max_total() const { return l_part.max_total(); }
  bool is_zero() const { return v_part.is_zero() && l_part.is_zero(); }

  SemiDirectElem operator-() const { return {-v_part, -l_part}; }
  SemiDirectElem& operator+=(const SemiDirectElem& rhs);
  SemiDirectElem& operator-=(const SemiDirectElem& rhs);
  friend SemiDirectElem operator+(SemiDirectElem a, const SemiDirectElem& b) { return a += b; }
  friend SemiDirectElem operator-(SemiDirectElem a, const SemiDirectElem& b) { return a -= b; }
  /// Left A-module structure on both parts.
  friend SemiDirectElem operator*(const RingElem& a, const SemiDirectElem& p);

  std::string to_string() const;
  friend bool operator==(const SemiDirectElem& a, const SemiDirectElem& b);
};

/// v acting on the ring coefficients of a current element.
CurrentElem vf_act(const VectorField& v, const CurrentElem& c);

/// [(v1, c1), (v2, c2)] = ([v1, v2], [c1, c2] + v1(c2) - v2(c1)).
SemiDirectElem sd_bracket(const SemiDirectElem& p, const SemiDirectElem& q);

/// Jets of vector fields to the semidirect product: the anchor becomes the
/// V-part and the coefficient of t^m in component i becomes the coefficient
/// of X^m d/dX_i. Target truncation is r = k.
SemiDirectElem phi(const JetField& u);

/// Inverse of phi at order k >= r, computed from the defining images
/// g d/dx_i -> g # d/dx_i and g (x) X^m d/dX_i -> (-1)^|m| (g (x) 1) delta(x)^m d/dx_i.
JetField psi(const SemiDirectElem& p, unsigned k);

}  // namespace jetalg
