#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetalg/chart.hpp"
#include "jetalg/multi_index.hpp"

namespace jetalg {

/// Basis vector X^m d/dX_dir of the Lie algebra of polynomial vector fields
/// vanishing at the origin. Its degree is |m| - 1.
///
/// Ordered by degree, then graded-lex m, then direction. This is also the
/// PBW order.
struct LBasis {
  MultiIndex m;
  std::size_t dir = 0;

  int degree() const { return static_cast<int>(m.total()) - 1; }
  std::string to_string(const std::string& var = "X") const;

  friend bool operator==(const LBasis& a, const LBasis& b) = default;
  friend std::strong_ordering operator<=>(const LBasis& a, const LBasis& b) {
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.dir <=> b.dir;
  }
};

/// [X^a d_i, X^b d_j] = b_i X^{a+b-e_i} d_j - a_j X^{a+b-e_j} d_i, with terms
/// of |m| > max_total dropped.
std::vector<std::pair<LBasis, Rational>> basis_bracket(const LBasis& a, const LBasis& b, unsigned max_total);

/// Every basis vector with 1 <= |m| <= r in n variables, ascending.
std::vector<LBasis> l_basis(std::size_t n, unsigned r);

/// Element of the truncation L^(r): degrees 0..r-1, i.e. 1 <= |m| <= r.
class LElem {
 public:
  using Terms = std::map<LBasis, Rational>;

  LElem() = default;
  LElem(std::size_t nvars, unsigned max_total);
  static LElem basis(std::size_t nvars, unsigned max_total, const LBasis& b);

  std::size_t nvars() const { return nvars_; }
  unsigned max_total() const { return max_total_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const LBasis& b) const;
  void add_term(const LBasis& b, const Rational& c);

  LElem operator-() const;
  LElem& operator+=(const LElem& rhs);
  LElem& operator-=(const LElem& rhs);
  friend LElem operator+(LElem a, const LElem& b) { return a += b; }
  friend LElem operator-(LElem a, const LElem& b) { return a -= b; }
  friend LElem operator*(const Rational& c, const LElem& a);

  std::string to_string() const;
  friend bool operator==(const LElem& a, const LElem& b);

 private:
  void require_compatible(const LElem& other) const;

  std::size_t nvars_ = 0;
  unsigned max_total_ = 0;
  Terms terms_;
};

LElem l_bracket(const LElem& a, const LElem& b);

/// Element of the current algebra A (x) L^(r): ring-valued coefficients.
class CurrentElem {
 public:
  using Terms = std::map<LBasis, RingElem>;

  CurrentElem() = default;
  CurrentElem(ChartPtr chart, unsigned max_total);
  /// a (x) l.
  static CurrentElem from_l(const RingElem& a, const LElem& l);

  const ChartPtr& chart() const { return chart_; }
  std::size_t nvars() const { return chart_->n(); }
  unsigned max_total() const { return max_total_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingElem coeff(const LBasis& b) const;
  void add_term(const LBasis& b, const RingElem& c);

  CurrentElem operator-() const;
  CurrentElem& operator+=(const CurrentElem& rhs);
  CurrentElem& operator-=(const CurrentElem& rhs);
  friend CurrentElem operator+(CurrentElem a, const CurrentElem& b) { return a += b; }
  friend CurrentElem operator-(CurrentElem a, const CurrentElem& b) { return a -= b; }
  friend CurrentElem operator*(const RingElem& a, const CurrentElem& e);
  friend CurrentElem operator*(const Rational& c, const CurrentElem& e);

  /// Coefficients restricted to degree exactly d (|m| = d + 1).
  CurrentElem degree_part(unsigned d) const;
  /// Text such as "(1)*Y*d/dY + (1/y)*Y^2*d/dY".
  std::string to_string(const std::string& var = "X") const;
  friend bool operator==(const CurrentElem& a, const CurrentElem& b);

 private:
  void require_compatible(const CurrentElem& other) const;

  ChartPtr chart_;
  unsigned max_total_ = 0;
  Terms terms_;
};

/// Pointwise bracket (a (x) l1, b (x) l2) -> ab (x) [l1, l2].
CurrentElem current_bracket(const CurrentElem& p, const CurrentElem& q);

}  // namespace jetalg
