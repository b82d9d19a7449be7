#include "jetalg/vector_field.hpp"

namespace jetalg {

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)) {
  coeffs_.assign(chart_->n(), chart_->zero());
}

VectorField::VectorField(ChartPtr chart, std::vector<RingElem> coeffs)
    : chart_(std::move(chart)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != chart_->n()) throw MismatchError("vector field needs one coefficient per parameter");
  for (const auto& c : coeffs_)
    if (c.chart() != chart_) throw MismatchError("vector field coefficient on another chart");
}

VectorField VectorField::partial(ChartPtr chart, std::size_t i) {
  if (i >= chart->n()) throw DomainError("coordinate field index out of range");
  VectorField v(chart);
  v.coeffs_[i] = chart->one();
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void VectorField::require_same_chart(const VectorField& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("vector fields on different charts");
}

VectorField VectorField::operator-() const {
  VectorField v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

VectorField& VectorField::operator+=(const VectorField& rhs) {
  require_same_chart(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& rhs) {
  require_same_chart(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

VectorField operator*(const RingElem& a, const VectorField& v) {
  if (a.chart() != v.chart_) throw MismatchError("scalar and vector field on different charts");
  VectorField out = v;
  for (auto& c : out.coeffs_) c = a * c;
  return out;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += format_term(coeffs_[i].to_string(), "d/d" + (*chart_->vars())[i]);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const VectorField& a, const VectorField& b) {
  a.require_same_chart(b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

RingElem vf_apply(const VectorField& v, const RingElem& f) {
  if (v.chart() != f.chart()) throw MismatchError("vector field and function on different charts");
  RingElem sum = f.chart()->zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) sum += v[i] * re_derive(i, f);
  return sum;
}

VectorField vf_bracket(const VectorField& v, const VectorField& w) {
  if (v.chart() != w.chart()) throw MismatchError("vector fields on different charts");
  std::vector<RingElem> out;
  out.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out.push_back(vf_apply(v, w[j]) - vf_apply(w, v[j]));
  return VectorField(v.chart(), std::move(out));
}

}  // namespace jetalg
