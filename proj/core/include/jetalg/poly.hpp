#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jetalg/multi_index.hpp"
#include "jetalg/rational.hpp"

namespace jetalg {

/// Ordered variable names shared by every polynomial of one ring.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_var_list(std::vector<std::string> names);
/// True when both lists name the same variables in the same order.
bool same_vars(const VarList& a, const VarList& b);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex order with no zero
/// coefficients, so the stored representation of a value is unique.
class Poly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  Poly() = default;
  explicit Poly(VarList vars);
  Poly(VarList vars, const Rational& constant);

  static Poly variable(VarList vars, std::size_t i);
  static Poly monomial(VarList vars, const MultiIndex& m, const Rational& c);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const MultiIndex& m) const;
  /// Largest term in graded-lex order; requires a non-zero polynomial.
  const Terms::value_type& leading_term() const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t i) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(unsigned e) const;
  /// Multiplies by the monomial x^m.
  Poly shift(const MultiIndex& m) const;

  /// Formal partial derivative with respect to variable i.
  Poly partial(std::size_t i) const;

  /// Exact quotient *this / divisor when the division leaves no remainder.
  std::optional<Poly> exact_divide(const Poly& divisor) const;

  /// Adds c * x^m in place.
  void add_term(const MultiIndex& m, const Rational& c);

  /// Human and parser readable form, leading term first, e.g. "3*x^2*y - 1/2".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void require_same_vars(const Poly& other) const;

  VarList vars_;
  Terms terms_;
};

/// Sum, difference and product in one entry point; `op` is one of '+', '-', '*'.
Poly poly_arith(char op, const Poly& p, const Poly& q);
/// Formal partial derivative; throws DomainError for an out-of-range index.
Poly poly_partial(std::size_t i, const Poly& p);

/// Formats a single monomial c*x^m using the given names ("1" for the unit).
std::string format_monomial(const MultiIndex& m, const std::vector<std::string>& names);

/// Formats coeff*factor, dropping a unit coefficient or factor and
/// parenthesizing a coefficient that is a sum or a quotient.
std::string format_term(const std::string& coeff, const std::string& factor);

}  // namespace jetalg
