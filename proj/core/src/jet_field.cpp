#include "jetalg/jet_field.hpp"

#include <algorithm>
#include <sstream>

namespace jetalg {

JetField::JetField(ChartPtr chart, unsigned order) : chart_(std::move(chart)), order_(order) {
  for (std::size_t i = 0; i < chart_->n(); ++i) components_.emplace_back(chart_, order_);
}

JetField::JetField(std::vector<Jet> components) : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("a jet field needs at least one component");
  chart_ = components_[0].chart();
  order_ = components_[0].order();
  if (components_.size() != chart_->n()) throw MismatchError("jet field needs one component per parameter");
  for (const auto& c : components_)
    if (c.chart() != chart_ || c.order() != order_)
      throw MismatchError("jet field components must share chart and order");
}

bool JetField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Jet& c) { return c.is_zero(); });
}

void JetField::require_compatible(const JetField& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("jet fields on different charts");
  if (order_ != other.order_) throw MismatchError("jet fields of different orders");
}

JetField JetField::operator-() const {
  JetField out = *this;
  for (auto& c : out.components_) c = -c;
  return out;
}

JetField& JetField::operator+=(const JetField& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

JetField& JetField::operator-=(const JetField& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

JetField operator*(const Rational& c, const JetField& u) {
  JetField out = u;
  for (auto& comp : out.components_) comp = c * comp;
  return out;
}

JetField operator*(const Jet& c, const JetField& u) {
  JetField out = u;
  for (auto& comp : out.components_) comp = jet_mul(c, comp);
  return out;
}

std::string JetField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '[' << components_[i].to_string() << "]*d/d" << chart_->spec().params[i];
  }
  return first ? "0" : os.str();
}

bool operator==(const JetField& a, const JetField& b) {
  a.require_compatible(b);
  for (std::size_t i = 0; i < a.components_.size(); ++i)
    if (!(a.components_[i] == b.components_[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------

JetField jf_from_pair(const RingElem& a, const VectorField& v, unsigned k) {
  if (a.chart() != v.chart()) throw MismatchError("function and vector field on different charts");
  std::vector<Jet> comps;
  for (const auto& vi : v.coeffs()) comps.push_back(jet_of_pair(a, vi, k));
  return JetField(std::move(comps));
}

namespace {

// sum_i u_i(x,0) dw/dx_i + (u_i - u_i(x,0)) dw/dt_i for a single component w.
Jet directional(const JetField& u, const Jet& w) {
  const std::size_t n = u.size();
  const unsigned k = u.order();
  const MultiIndex zero(n);
  Jet out(u.chart(), k);
  for (std::size_t i = 0; i < n; ++i) {
    const Jet& ui = u[i];
    const RingElem u0 = ui.coeff(zero);
    if (!u0.is_zero()) out += u0 * w.derive_coeffs(i);
    for (const auto& [a, ca] : ui.coeffs()) {
      if (a.is_zero()) continue;
      for (const auto& [b, cb] : w.coeffs()) {
        if (b[i] == 0) continue;
        const MultiIndex m = a + b.with(i, b[i] - 1);
        if (m.total() > k) continue;
        out.add_term(m, ca * cb * Rational(static_cast<long>(b[i])));
      }
    }
  }
  return out;
}

}  // namespace

JetField jf_bracket(const JetField& u, const JetField& w) {
  if (!u.chart() || u.chart() != w.chart()) throw MismatchError("jet fields on different charts");
  if (u.order() != w.order()) throw MismatchError("jet fields of different orders");
  std::vector<Jet> comps;
  for (std::size_t j = 0; j < u.size(); ++j) comps.push_back(directional(u, w[j]) - directional(w, u[j]));
  return JetField(std::move(comps));
}

unsigned jf_order(const JetField& u) {
  unsigned best = u.order() + 1;
  for (const auto& c : u.components()) best = std::min(best, t_order(c));
  return best;
}

VectorField jf_anchor(const JetField& u) {
  std::vector<RingElem> coeffs;
  for (const auto& c : u.components()) coeffs.push_back(eval_diagonal(c));
  return VectorField(u.chart(), std::move(coeffs));
}

JetField jf_scale(const RingElem& a, const JetField& u) {
  if (a.chart() != u.chart()) throw MismatchError("scalar and jet field on different charts");
  std::vector<Jet> comps;
  for (const auto& c : u.components()) comps.push_back(a * c);
  return JetField(std::move(comps));
}

namespace {

RingElem require_inverse(const RingElem& g) {
  auto inv = try_inverse(g);
  if (!inv) throw DomainError("element " + g.to_string() + " is not invertible on chart " + g.chart()->name());
  return *inv;
}

}  // namespace

JetField localization_partial_sum(const RingElem& g, const VectorField& v, unsigned m, unsigned k) {
  const auto& chart = g.chart();
  if (v.chart() != chart) throw MismatchError("function and vector field on different charts");
  const RingElem ginv = require_inverse(g);
  const JetField base = jf_from_pair(chart->one(), v, k);
  const Jet dg = delta(g, k);
  JetField out(chart, k);
  Jet dpow = Jet::constant(chart->one(), k);
  RingElem ginv_pow = ginv;
  for (unsigned r = 0; r <= m; ++r) {
    out += jf_scale(ginv_pow, dpow * base);
    if (t_order(dpow) > k) break;  // all further terms vanish at this order
    dpow = jet_mul(dpow, dg);
    ginv_pow *= ginv;
  }
  return out;
}

JetField localization_remainder(const RingElem& g, const VectorField& v, unsigned m, unsigned k) {
  const auto& chart = g.chart();
  if (v.chart() != chart) throw MismatchError("function and vector field on different charts");
  const RingElem ginv = require_inverse(g);
  JetField out = jf_from_pair(chart->one(), ginv * v, k);
  RingElem left = chart->one();   // 1/g^s
  RingElem right = ginv;          // g^{s-1}
  for (unsigned s = 1; s <= m + 1; ++s) {
    left *= ginv;
    right *= g;
    Rational c = binomial(m + 1, s);
    if (s % 2) c = -c;
    out += c * jf_from_pair(left, right * v, k);
  }
  return out;
}

std::vector<SmashTerm> jf_decompose(const JetField& u) {
  const auto& chart = u.chart();
  std::vector<SmashTerm> terms;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (const auto& [n, c] : u[i].coeffs()) {
      for (const auto& a : lower_set(n)) {
        Rational coeff = binomial(n, a);
        if ((n.total() + a.total()) % 2) coeff = -coeff;
        RingElem left = c * coeff;
        RingElem right = chart->one();
        for (std::size_t j = 0; j < n.size(); ++j) {
          left *= chart->param(j).pow(n[j] - a[j]);
          right *= chart->param(j).pow(a[j]);
        }
        terms.push_back(SmashTerm{std::move(left), std::move(right), i});
      }
    }
  }
  return terms;
}

JetField jf_from_terms(const ChartPtr& chart, const std::vector<SmashTerm>& terms, unsigned k) {
  JetField out(chart, k);
  for (const auto& t : terms)
    out.component(t.dir) += jet_of_pair(t.left, t.right, k);
  return out;
}

}  // namespace jetalg
