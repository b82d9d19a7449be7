#include "jetalg/lie_plus.hpp"

#include <sstream>

namespace jetalg {

namespace {

std::vector<std::string> fibre_names(std::size_t n, const std::string& var) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n == 1 ? var : var + std::to_string(i + 1));
  return names;
}

}  // namespace

std::string LBasis::to_string(const std::string& var) const {
  const auto names = fibre_names(m.size(), var);
  return format_monomial(m, names) + "*d/d" + names[dir];
}

std::vector<std::pair<LBasis, Rational>> basis_bracket(const LBasis& a, const LBasis& b, unsigned max_total) {
  std::vector<std::pair<LBasis, Rational>> out;
  if (a.m.total() + b.m.total() - 1 > max_total) return out;
  const MultiIndex sum = a.m + b.m;
  if (b.m[a.dir] > 0) {
    out.emplace_back(LBasis{sum.with(a.dir, sum[a.dir] - 1), b.dir}, Rational(static_cast<long>(b.m[a.dir])));
  }
  if (a.m[b.dir] > 0) {
    out.emplace_back(LBasis{sum.with(b.dir, sum[b.dir] - 1), a.dir}, Rational(-static_cast<long>(a.m[b.dir])));
  }
  return out;
}

std::vector<LBasis> l_basis(std::size_t n, unsigned r) {
  std::vector<LBasis> out;
  for (const auto& m : indices_up_to(n, r)) {
    if (m.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) out.push_back(LBasis{m, i});
  }
  return out;
}

// ---------------------------------------------------------------------------

LElem::LElem(std::size_t nvars, unsigned max_total) : nvars_(nvars), max_total_(max_total) {}

LElem LElem::basis(std::size_t nvars, unsigned max_total, const LBasis& b) {
  LElem e(nvars, max_total);
  e.add_term(b, Rational(1));
  return e;
}

Rational LElem::coeff(const LBasis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LElem::add_term(const LBasis& b, const Rational& c) {
  if (b.m.size() != nvars_ || b.dir >= nvars_) throw MismatchError("basis vector has the wrong number of variables");
  if (b.m.total() == 0) throw DomainError("X^0 d/dX is not in the positive part");
  if (b.m.total() > max_total_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LElem::require_compatible(const LElem& other) const {
  if (nvars_ != other.nvars_) throw MismatchError("Lie elements in different numbers of variables");
  if (max_total_ != other.max_total_) throw MismatchError("Lie elements of different truncations");
}

LElem LElem::operator-() const {
  LElem out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

LElem& LElem::operator+=(const LElem& rhs) {
  require_compatible(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

LElem& LElem::operator-=(const LElem& rhs) {
  require_compatible(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

LElem operator*(const Rational& c, const LElem& a) {
  LElem out(a.nvars_, a.max_total_);
  for (const auto& [b, v] : a.terms_) out.add_term(b, c * v);
  return out;
}

std::string LElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_term(c.to_string(), b.to_string());
  }
  return os.str();
}

bool operator==(const LElem& a, const LElem& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

LElem l_bracket(const LElem& a, const LElem& b) {
  if (a.nvars() != b.nvars() || a.max_total() != b.max_total())
    throw MismatchError("Lie elements of different shapes");
  LElem out(a.nvars(), a.max_total());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms())
      for (const auto& [bc, cc] : basis_bracket(ba, bb, a.max_total())) out.add_term(bc, ca * cb * cc);
  return out;
}

// ---------------------------------------------------------------------------

CurrentElem::CurrentElem(ChartPtr chart, unsigned max_total) : chart_(std::move(chart)), max_total_(max_total) {}

CurrentElem CurrentElem::from_l(const RingElem& a, const LElem& l) {
  if (a.chart()->n() != l.nvars()) throw MismatchError("Lie element and chart have different dimensions");
  CurrentElem out(a.chart(), l.max_total());
  for (const auto& [b, c] : l.terms()) out.add_term(b, a * c);
  return out;
}

RingElem CurrentElem::coeff(const LBasis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? chart_->zero() : it->second;
}

void CurrentElem::add_term(const LBasis& b, const RingElem& c) {
  if (b.m.size() != nvars() || b.dir >= nvars()) throw MismatchError("basis vector has the wrong number of variables");
  if (b.m.total() == 0) throw DomainError("X^0 d/dX is not in the positive part");
  if (c.chart() != chart_) throw MismatchError("coefficient on a different chart");
  if (b.m.total() > max_total_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CurrentElem::require_compatible(const CurrentElem& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("current elements on different charts");
  if (max_total_ != other.max_total_) throw MismatchError("current elements of different truncations");
}

CurrentElem CurrentElem::operator-() const {
  CurrentElem out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

CurrentElem& CurrentElem::operator+=(const CurrentElem& rhs) {
  require_compatible(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

CurrentElem& CurrentElem::operator-=(const CurrentElem& rhs) {
  require_compatible(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

CurrentElem operator*(const RingElem& a, const CurrentElem& e) {
  if (a.chart() != e.chart_) throw MismatchError("scalar and current element on different charts");
  CurrentElem out(e.chart_, e.max_total_);
  for (const auto& [b, c] : e.terms_) out.add_term(b, a * c);
  return out;
}

CurrentElem operator*(const Rational& c, const CurrentElem& e) {
  CurrentElem out(e.chart_, e.max_total_);
  for (const auto& [b, v] : e.terms_) out.add_term(b, v * c);
  return out;
}

CurrentElem CurrentElem::degree_part(unsigned d) const {
  CurrentElem out(chart_, max_total_);
  for (const auto& [b, c] : terms_)
    if (b.m.total() == d + 1) out.terms_.emplace(b, c);
  return out;
}

std::string CurrentElem::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_term(c.to_string(), b.to_string(var));
  }
  return os.str();
}

bool operator==(const CurrentElem& a, const CurrentElem& b) {
  a.require_compatible(b);
  for (const auto& [k, c] : a.terms_)
    if (!(c == b.coeff(k))) return false;
  for (const auto& [k, c] : b.terms_)
    if (!a.terms_.count(k)) return false;
  return true;
}

CurrentElem current_bracket(const CurrentElem& p, const CurrentElem& q) {
  if (!p.chart() || p.chart() != q.chart()) throw MismatchError("current elements on different charts");
  if (p.max_total() != q.max_total()) throw MismatchError("current elements of different truncations");
  CurrentElem out(p.chart(), p.max_total());
  for (const auto& [ba, ca] : p.terms())
    for (const auto& [bb, cb] : q.terms()) {
      const auto br = basis_bracket(ba, bb, p.max_total());
      if (br.empty()) continue;
      const RingElem prod = ca * cb;
      for (const auto& [bc, cc] : br) out.add_term(bc, prod * cc);
    }
  return out;
}

}  // namespace jetalg
