#include "jetalg/diff_op.hpp"

#include <algorithm>
#include <sstream>

namespace jetalg {

DiffOp::DiffOp(ChartPtr chart) : chart_(std::move(chart)) {}

DiffOp DiffOp::function(const RingElem& a) { return monomial(a, MultiIndex(a.chart()->n())); }

DiffOp DiffOp::identity(const ChartPtr& chart) { return function(chart->one()); }

DiffOp DiffOp::monomial(const RingElem& a, const MultiIndex& k) {
  DiffOp p(a.chart());
  p.add_term(k, a);
  return p;
}

DiffOp DiffOp::from_field(const VectorField& v) {
  DiffOp p(v.chart());
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(MultiIndex::unit(v.size(), i), v[i]);
  return p;
}

RingElem DiffOp::coeff(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? chart_->zero() : it->second;
}

void DiffOp::add_term(const MultiIndex& k, const RingElem& a) {
  if (k.size() != chart_->n()) throw MismatchError("derivative multi-index has the wrong number of variables");
  if (a.chart() != chart_) throw MismatchError("coefficient on a different chart");
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned DiffOp::order() const { return terms_.empty() ? 0 : terms_.rbegin()->first.total(); }

void DiffOp::require_same_chart(const DiffOp& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("differential operators on different charts");
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& [k, a] : out.terms_) a = -a;
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  require_same_chart(rhs);
  for (const auto& [k, a] : rhs.terms_) add_term(k, a);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
  require_same_chart(rhs);
  for (const auto& [k, a] : rhs.terms_) add_term(k, -a);
  return *this;
}

DiffOp operator*(const RingElem& a, const DiffOp& p) {
  DiffOp out(p.chart_);
  for (const auto& [k, c] : p.terms_) out.add_term(k, a * c);
  return out;
}

DiffOp operator*(const Rational& c, const DiffOp& p) {
  DiffOp out(p.chart_);
  for (const auto& [k, a] : p.terms_) out.add_term(k, a * c);
  return out;
}

DiffOp operator*(const DiffOp& p, const DiffOp& q) { return dop_mul(p, q); }

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (const auto& p : chart_->spec().params) names.push_back("d" + p);
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << format_term(it->second.to_string(), format_monomial(it->first, names));
  }
  return os.str();
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  a.require_same_chart(b);
  for (const auto& [k, c] : a.terms_)
    if (!(c == b.coeff(k))) return false;
  for (const auto& [k, c] : b.terms_)
    if (!a.terms_.count(k)) return false;
  return true;
}

DiffOp dop_mul(const DiffOp& p, const DiffOp& q) {
  if (!p.chart() || p.chart() != q.chart()) throw MismatchError("differential operators on different charts");
  DiffOp out(p.chart());
  for (const auto& [beta, b] : q.terms()) {
    // Derivatives of b are shared by every left term.
    std::map<MultiIndex, RingElem> derivs;
    for (const auto& [alpha, a] : p.terms()) {
      for (const auto& gamma : lower_set(alpha)) {
        auto it = derivs.find(gamma);
        if (it == derivs.end()) it = derivs.emplace(gamma, re_derive_multi(gamma, b)).first;
        if (it->second.is_zero()) continue;
        out.add_term(alpha - gamma + beta, a * it->second * binomial(alpha, gamma));
      }
    }
  }
  return out;
}

RingElem dop_apply(const DiffOp& p, const RingElem& f) {
  if (p.chart() != f.chart()) throw MismatchError("operator and function on different charts");
  RingElem out = f.chart()->zero();
  for (const auto& [k, a] : p.terms()) out += a * re_derive_multi(k, f);
  return out;
}

}  // namespace jetalg
