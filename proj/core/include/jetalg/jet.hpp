#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jetalg/chart.hpp"
#include "jetalg/ring_hom.hpp"

namespace jetalg {

/// Class of an element of A (x) A modulo Delta^{k+1}, realized through the
/// jet map g (x) f -> g(x) f(x+t) as a polynomial in t_1..t_N of degree <= k
/// with coefficients in the chart ring.
class Jet {
 public:
  using Coeffs = std::map<MultiIndex, RingElem>;

  Jet() = default;
  Jet(ChartPtr chart, unsigned order);

  /// g(x) placed at t^0, i.e. the image of g (x) 1.
  static Jet constant(const RingElem& g, unsigned order);
  static Jet monomial(const RingElem& c, const MultiIndex& m, unsigned order);

  const ChartPtr& chart() const { return chart_; }
  unsigned order() const { return order_; }
  std::size_t nvars() const { return chart_->n(); }
  const Coeffs& coeffs() const { return coeffs_; }
  RingElem coeff(const MultiIndex& m) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c t^m; terms above the order are dropped.
  void add_term(const MultiIndex& m, const RingElem& c);

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  /// Multiplication by a t^0 scalar: (a (x) 1) * u.
  friend Jet operator*(const RingElem& a, const Jet& u);
  friend Jet operator*(const Rational& c, const Jet& u);
  /// Truncated product, same as jet_mul.
  friend Jet operator*(const Jet& u, const Jet& w);

  /// Reduction to a lower order.
  Jet truncated(unsigned order) const;
  /// Formal d/dt_i; exact at order k-1 and returned there.
  Jet partial_t(std::size_t i) const;
  /// d/dx_i applied to every coefficient, same order.
  Jet derive_coeffs(std::size_t i) const;

  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const Jet& a, const Jet& b);

 private:
  void require_compatible(const Jet& other) const;

  ChartPtr chart_;
  unsigned order_ = 0;
  Coeffs coeffs_;
};

/// f(x+t) = sum_{|m|<=k} (1/m!) d^m f/dx^m t^m, the image of 1 (x) f.
Jet jet_of(const RingElem& f, unsigned k);
/// g(x) f(x+t), the image of g (x) f.
Jet jet_of_pair(const RingElem& g, const RingElem& f, unsigned k);
/// Truncated convolution.
Jet jet_mul(const Jet& u, const Jet& w);
/// delta(f) = f (x) 1 - 1 (x) f.
Jet delta(const RingElem& f, unsigned k);
/// Minimal |m| with a non-zero coefficient, or k+1 for the zero jet.
unsigned t_order(const Jet& u);
/// Action of d/dx_i on the first tensor factor: d/dx_i on coefficients minus
/// d/dt_i. Requires order >= 1; result has order k-1.
Jet act_first_factor(std::size_t i, const Jet& u);
/// Action of d/dx_i on the second tensor factor: d/dt_i. Result has order k-1.
Jet act_second_factor(std::size_t i, const Jet& u);
/// The multiplication map A (x) A -> A, i.e. t -> 0.
RingElem eval_diagonal(const Jet& u);

/// prod_i delta(x_i)^{m_i} at order k.
Jet delta_monomial(const ChartPtr& chart, const MultiIndex& m, unsigned k);

/// Both Taylor identities
///   1 (x) f = sum_m (-1)^|m|/m! (d^m f (x) 1) delta(x)^m
///   f (x) 1 = sum_m 1/m! (1 (x) d^m f) delta(x)^m
/// checked exactly at truncation order k.
bool taylor_identity_check(const RingElem& f, unsigned k);

/// Coefficient extraction behind the Taylor identities: applying the
/// first-factor action of d^m and then t -> 0 to both sides of each
/// identity gives equal ring elements, for every |m| <= k.
bool taylor_extraction_check(const RingElem& f, unsigned k);

/// Substitutes t_i -> subs[i] (each of positive t-valuation) into u.
/// The result has order min(u.order(), subs order).
Jet jet_compose(const Jet& u, const std::vector<Jet>& subs);

/// Applies a ring map to every coefficient. Source and target must have the
/// same number of parameters.
Jet jet_map(const Jet& u, const RingHom& hom);

}  // namespace jetalg
