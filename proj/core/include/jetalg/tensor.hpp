#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jetalg/diff_op.hpp"
#include "jetalg/pbw.hpp"

namespace jetalg {

/// Element of D (x) U(L^(r)), stored as sum (a d^k) (x) w with the ring
/// coefficient a kept on the D side.
class TensorElem {
 public:
  using Key = std::pair<MultiIndex, PBWMonomial>;
  using Terms = std::map<Key, RingElem>;

  TensorElem() = default;
  TensorElem(ChartPtr chart, unsigned max_total);
  static TensorElem unit(const ChartPtr& chart, unsigned max_total);
  /// d (x) u.
  static TensorElem product(const DiffOp& d, const UElem& u);

  const ChartPtr& chart() const { return chart_; }
  unsigned max_total() const { return max_total_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingElem coeff(const MultiIndex& k, const PBWMonomial& w) const;
  void add_term(const MultiIndex& k, const PBWMonomial& w, const RingElem& a);

  /// The D-coefficient of a PBW monomial.
  DiffOp d_part(const PBWMonomial& w) const;

  TensorElem operator-() const;
  TensorElem& operator+=(const TensorElem& rhs);
  TensorElem& operator-=(const TensorElem& rhs);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b);

  std::string to_string() const;
  friend bool operator==(const TensorElem& a, const TensorElem& b);

 private:
  void require_compatible(const TensorElem& other) const;

  ChartPtr chart_;
  unsigned max_total_ = 0;
  Terms terms_;
};

/// (d1 (x) u1)(d2 (x) u2) = d1 d2 (x) u1 u2; the two factors commute.
TensorElem tensor_mul(const TensorElem& s, const TensorElem& t);

/// One factor of a word in the smash product A # U(V).
using AVFactor = std::variant<RingElem, VectorField>;

struct AVWord {
  std::vector<AVFactor> factors;
  const ChartPtr& chart() const;
  std::string to_string() const;
};

/// fun(f) -> f (x) 1,
/// vf(sum_i f_i d_i) -> sum_i [ f_i d_i (x) 1 + sum_{1<=|m|<=r} (d^m f_i / m!) (x) X^m d/dX_i ],
/// and a word maps to the ordered product of its factor images.
TensorElem av_to_tensor(const AVWord& w, unsigned r);

}  // namespace jetalg
