#pragma once

#include <string>
#include <vector>

#include "jetalg/chart.hpp"

namespace jetalg {

/// Vector field sum_i coeffs[i] d/dx_i on a chart, in the frame of the
/// uniformizing parameters.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(ChartPtr chart);
  VectorField(ChartPtr chart, std::vector<RingElem> coeffs);

  /// The coordinate field d/dx_i.
  static VectorField partial(ChartPtr chart, std::size_t i);

  const ChartPtr& chart() const { return chart_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<RingElem>& coeffs() const { return coeffs_; }
  const RingElem& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& rhs);
  VectorField& operator-=(const VectorField& rhs);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  /// Module structure a * v.
  friend VectorField operator*(const RingElem& a, const VectorField& v);

  std::string to_string() const;

  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  void require_same_chart(const VectorField& other) const;

  ChartPtr chart_;
  std::vector<RingElem> coeffs_;
};

/// v(f) = sum_i v_i df/dx_i.
RingElem vf_apply(const VectorField& v, const RingElem& f);
/// [v, w]_j = v(w_j) - w(v_j).
VectorField vf_bracket(const VectorField& v, const VectorField& w);

}  // namespace jetalg
