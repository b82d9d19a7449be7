#pragma once

#include <map>
#include <string>
#include <vector>

#include "jetalg/lie_plus.hpp"

namespace jetalg {

/// Non-decreasing product of L-basis vectors; empty means the unit.
using PBWMonomial = std::vector<LBasis>;

/// Short description of the fixed PBW order, recorded in reports.
inline constexpr const char* kPBWOrder = "degree, graded-lex exponent, direction";

bool is_pbw_sorted(const PBWMonomial& word);
std::string pbw_to_string(const PBWMonomial& word);

/// Element of U(L^(r)) in the PBW basis.
class UElem {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  UElem() = default;
  UElem(std::size_t nvars, unsigned max_total);
  static UElem unit(std::size_t nvars, unsigned max_total);

  std::size_t nvars() const { return nvars_; }
  unsigned max_total() const { return max_total_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const PBWMonomial& w) const;
  /// Adds c times an already sorted monomial.
  void add_term(const PBWMonomial& w, const Rational& c);

  UElem operator-() const;
  UElem& operator+=(const UElem& rhs);
  UElem& operator-=(const UElem& rhs);
  friend UElem operator+(UElem a, const UElem& b) { return a += b; }
  friend UElem operator-(UElem a, const UElem& b) { return a -= b; }
  friend UElem operator*(const Rational& c, const UElem& a);
  /// Product, same as pbw_mul.
  friend UElem operator*(const UElem& a, const UElem& b);

  std::string to_string() const;
  friend bool operator==(const UElem& a, const UElem& b);

 private:
  std::size_t nvars_ = 0;
  unsigned max_total_ = 0;
  Terms terms_;
};

/// Rewrites an arbitrary word into the PBW basis of U(L^(r)), r = max_total.
///
/// Straightening swaps the first adjacent descent ba -> ab + [b, a]. A swap
/// lowers the inversion count at fixed length and a bracket term shortens the
/// word, so the pair (length, inversions) decreases lexicographically and the
/// rewriting terminates. Brackets landing outside L^(r) are dropped, which is
/// the quotient by the ideal of degrees >= r, not an approximation.
UElem pbw_normalize(const std::vector<LBasis>& word, std::size_t nvars, unsigned max_total);

UElem pbw_mul(const UElem& a, const UElem& b);

}  // namespace jetalg
