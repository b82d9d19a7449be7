#pragma once

#include <string>
#include <vector>

#include "jetalg/jet.hpp"
#include "jetalg/vector_field.hpp"

namespace jetalg {

/// Class of a jet of vector fields modulo J_{k+1}: component i is the jet
/// coefficient of d/dx_i, so a # (f d/dx_i) has component i = a(x) f(x+t).
class JetField {
 public:
  JetField() = default;
  /// Zero field.
  JetField(ChartPtr chart, unsigned order);
  explicit JetField(std::vector<Jet> components);

  const ChartPtr& chart() const { return chart_; }
  unsigned order() const { return order_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<Jet>& components() const { return components_; }
  const Jet& operator[](std::size_t i) const { return components_[i]; }
  Jet& component(std::size_t i) { return components_[i]; }
  bool is_zero() const;

  JetField operator-() const;
  JetField& operator+=(const JetField& rhs);
  JetField& operator-=(const JetField& rhs);
  friend JetField operator+(JetField a, const JetField& b) { return a += b; }
  friend JetField operator-(JetField a, const JetField& b) { return a -= b; }
  friend JetField operator*(const Rational& c, const JetField& u);
  /// Multiplies every component by a jet (an element of A (x) A).
  friend JetField operator*(const Jet& c, const JetField& u);

  std::string to_string() const;

  friend bool operator==(const JetField& a, const JetField& b);

 private:
  void require_compatible(const JetField& other) const;

  ChartPtr chart_;
  unsigned order_ = 0;
  std::vector<Jet> components_;
};

/// a # v: component i is jet_of_pair(a, v_i, k).
JetField jf_from_pair(const RingElem& a, const VectorField& v, unsigned k);

/// Smash-product bracket in t-coordinates,
///   [u, w]_j = sum_i u_i(x,0) dw_j/dx_i + (u_i - u_i(x,0)) dw_j/dt_i - (u <-> w).
/// The second term has t-valuation >= 1 in its first factor, so the result
/// is exact at order k without information from order k+1.
JetField jf_bracket(const JetField& u, const JetField& w);

/// Minimal t-order over all components; k+1 for the zero field.
unsigned jf_order(const JetField& u);

/// Image under the multiplication map f # eta -> f eta.
VectorField jf_anchor(const JetField& u);

/// Left A-action on the first tensor factor.
JetField jf_scale(const RingElem& a, const JetField& u);

/// sum_{r=0}^{m} (1/g^{r+1}) delta(g)^r (1 # v) at order k.
JetField localization_partial_sum(const RingElem& g, const VectorField& v, unsigned m, unsigned k);

/// Closed form of 1 # (1/g) v minus the partial sum above:
///   sum_{s=0}^{m+1} (-1)^s C(m+1, s) (1/g^s) # (g^{s-1} v).
JetField localization_remainder(const RingElem& g, const VectorField& v, unsigned m, unsigned k);

/// One decomposable summand left # (right d/dx_dir).
struct SmashTerm {
  RingElem left;
  RingElem right;
  std::size_t dir = 0;
};

/// Writes u as a finite sum of decomposables. Component i with
/// coefficients u_{i,n}(x) is represented by
///   sum_n (-1)^{|n|} (u_{i,n} (x) 1) delta(x)^n d/dx_i,
/// with delta(x)^n expanded binomially into x^{n-a} (x) x^a.
std::vector<SmashTerm> jf_decompose(const JetField& u);

/// Sum of jf_from_pair over decomposable terms.
JetField jf_from_terms(const ChartPtr& chart, const std::vector<SmashTerm>& terms, unsigned k);

}  // namespace jetalg
