#include "jetalg/jet.hpp"

#include <sstream>

namespace jetalg {

Jet::Jet(ChartPtr chart, unsigned order) : chart_(std::move(chart)), order_(order) {}

Jet Jet::constant(const RingElem& g, unsigned order) {
  Jet u(g.chart(), order);
  u.add_term(MultiIndex(g.chart()->n()), g);
  return u;
}

Jet Jet::monomial(const RingElem& c, const MultiIndex& m, unsigned order) {
  Jet u(c.chart(), order);
  u.add_term(m, c);
  return u;
}

RingElem Jet::coeff(const MultiIndex& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? chart_->zero() : it->second;
}

void Jet::add_term(const MultiIndex& m, const RingElem& c) {
  if (m.size() != chart_->n()) throw MismatchError("jet monomial has the wrong number of variables");
  if (m.total() > order_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void Jet::require_compatible(const Jet& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("jets on different charts");
  if (order_ != other.order_) throw MismatchError("jets of different orders");
}

Jet Jet::operator-() const {
  Jet u = *this;
  for (auto& [m, c] : u.coeffs_) c = -c;
  return u;
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.coeffs_) add_term(m, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.coeffs_) add_term(m, -c);
  return *this;
}

Jet operator*(const RingElem& a, const Jet& u) {
  if (a.chart() != u.chart_) throw MismatchError("scalar and jet on different charts");
  Jet out(u.chart_, u.order_);
  if (a.is_zero()) return out;
  for (const auto& [m, c] : u.coeffs_) out.add_term(m, a * c);
  return out;
}

Jet operator*(const Rational& c, const Jet& u) {
  Jet out(u.chart_, u.order_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : u.coeffs_) out.add_term(m, v * c);
  return out;
}

Jet operator*(const Jet& u, const Jet& w) { return jet_mul(u, w); }

Jet Jet::truncated(unsigned order) const {
  if (order > order_) throw DomainError("cannot raise the order of a jet");
  Jet out(chart_, order);
  for (const auto& [m, c] : coeffs_)
    if (m.total() <= order) out.coeffs_.emplace(m, c);
  return out;
}

Jet Jet::partial_t(std::size_t i) const {
  if (i >= nvars()) throw DomainError("t-derivative index out of range");
  if (order_ == 0) throw DomainError("t-derivative of an order-0 jet is undefined");
  Jet out(chart_, order_ - 1);
  for (const auto& [m, c] : coeffs_) {
    if (m[i] == 0) continue;
    out.add_term(m.with(i, m[i] - 1), c * Rational(static_cast<long>(m[i])));
  }
  return out;
}

Jet Jet::derive_coeffs(std::size_t i) const {
  Jet out(chart_, order_);
  for (const auto& [m, c] : coeffs_) out.add_term(m, re_derive(i, c));
  return out;
}

std::string Jet::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars(); ++i)
    names.push_back(nvars() == 1 ? std::string(var) : std::string(var) + std::to_string(i + 1));
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string();
    if (m.is_zero()) {
      os << (coeffs_.size() > 1 && cs.find(' ') != std::string::npos ? '(' + cs + ')' : cs);
    } else {
      os << format_term(cs, format_monomial(m, names));
    }
  }
  return os.str();
}

bool operator==(const Jet& a, const Jet& b) {
  a.require_compatible(b);
  for (const auto& [m, c] : a.coeffs_)
    if (!(c == b.coeff(m))) return false;
  for (const auto& [m, c] : b.coeffs_)
    if (!a.coeffs_.count(m)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Jet jet_of(const RingElem& f, unsigned k) {
  const auto& chart = f.chart();
  const std::size_t n = chart->n();
  std::map<MultiIndex, RingElem> derivs;
  Jet out(chart, k);
  for (const auto& m : indices_up_to(n, k)) {
    RingElem d = f;
    if (!m.is_zero()) {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      d = re_derive(i, derivs.at(m.with(i, m[i] - 1)));
    }
    out.add_term(m, d * (Rational(1) / factorial(m)));
    derivs.emplace(m, std::move(d));
  }
  return out;
}

Jet jet_of_pair(const RingElem& g, const RingElem& f, unsigned k) {
  if (g.chart() != f.chart()) throw MismatchError("jet_of_pair arguments on different charts");
  return g * jet_of(f, k);
}

Jet jet_mul(const Jet& u, const Jet& w) {
  if (!u.chart() || u.chart() != w.chart()) throw MismatchError("jets on different charts");
  if (u.order() != w.order()) throw MismatchError("jets of different orders");
  const unsigned k = u.order();
  Jet out(u.chart(), k);
  for (const auto& [a, ca] : u.coeffs())
    for (const auto& [b, cb] : w.coeffs())
      if (a.total() + b.total() <= k) out.add_term(a + b, ca * cb);
  return out;
}

Jet delta(const RingElem& f, unsigned k) { return Jet::constant(f, k) - jet_of(f, k); }

unsigned t_order(const Jet& u) {
  unsigned best = u.order() + 1;
  for (const auto& [m, c] : u.coeffs()) best = std::min(best, m.total());
  return best;
}

Jet act_first_factor(std::size_t i, const Jet& u) {
  if (u.order() == 0) throw DomainError("factor action needs a jet of order >= 1");
  return u.derive_coeffs(i).truncated(u.order() - 1) - u.partial_t(i);
}

Jet act_second_factor(std::size_t i, const Jet& u) {
  if (u.order() == 0) throw DomainError("factor action needs a jet of order >= 1");
  return u.partial_t(i);
}

RingElem eval_diagonal(const Jet& u) { return u.coeff(MultiIndex(u.nvars())); }

Jet delta_monomial(const ChartPtr& chart, const MultiIndex& m, unsigned k) {
  Jet out = Jet::constant(chart->one(), k);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const Jet d = delta(chart->param(i), k);
    for (unsigned e = 0; e < m[i]; ++e) out = jet_mul(out, d);
  }
  return out;
}

namespace {

struct TaylorSides {
  Jet lhs_a, rhs_a, lhs_b, rhs_b;
};

TaylorSides taylor_sides(const RingElem& f, unsigned k) {
  const auto& chart = f.chart();
  const std::size_t n = chart->n();
  TaylorSides s{jet_of(f, k), Jet(chart, k), Jet::constant(f, k), Jet(chart, k)};
  std::map<MultiIndex, Jet> dpow;
  std::map<MultiIndex, RingElem> derivs;
  std::vector<Jet> deltas;
  for (std::size_t i = 0; i < n; ++i) deltas.push_back(delta(chart->param(i), k));
  for (const auto& m : indices_up_to(n, k)) {
    Jet dm = Jet::constant(chart->one(), k);
    RingElem d = f;
    if (!m.is_zero()) {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      const MultiIndex prev = m.with(i, m[i] - 1);
      dm = jet_mul(dpow.at(prev), deltas[i]);
      d = re_derive(i, derivs.at(prev));
    }
    const Rational inv_fact = Rational(1) / factorial(m);
    const Rational sign = (m.total() % 2) ? Rational(-1) : Rational(1);
    s.rhs_a += (sign * inv_fact) * (d * dm);
    s.rhs_b += inv_fact * jet_mul(jet_of(d, k), dm);
    dpow.emplace(m, std::move(dm));
    derivs.emplace(m, std::move(d));
  }
  return s;
}

RingElem extract(const Jet& u, const MultiIndex& m) {
  Jet cur = u;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned e = 0; e < m[i]; ++e) cur = act_first_factor(i, cur);
  return eval_diagonal(cur);
}

}  // namespace

bool taylor_identity_check(const RingElem& f, unsigned k) {
  const TaylorSides s = taylor_sides(f, k);
  return s.lhs_a == s.rhs_a && s.lhs_b == s.rhs_b;
}

bool taylor_extraction_check(const RingElem& f, unsigned k) {
  const TaylorSides s = taylor_sides(f, k);
  for (const auto& m : indices_up_to(f.chart()->n(), k)) {
    if (!(extract(s.lhs_a, m) == extract(s.rhs_a, m))) return false;
    if (!(extract(s.lhs_b, m) == extract(s.rhs_b, m))) return false;
    // f (x) 1 under d^m and the multiplication map is d^m f.
    if (!(extract(s.lhs_b, m) == re_derive_multi(m, f))) return false;
  }
  return true;
}

Jet jet_compose(const Jet& u, const std::vector<Jet>& subs) {
  if (subs.size() != u.nvars()) throw MismatchError("jet_compose needs one substitution per variable");
  if (subs.empty()) return u;
  const auto& chart = subs[0].chart();
  unsigned order = subs[0].order();
  for (const auto& s : subs) {
    if (s.chart() != chart || s.order() != order) throw MismatchError("substitutions must share chart and order");
    if (t_order(s) == 0) throw DomainError("substitution must have positive t-valuation");
  }
  if (u.chart() != chart) throw MismatchError("jet and substitutions on different charts");
  order = std::min(order, u.order());
  std::vector<Jet> trimmed;
  for (const auto& s : subs) trimmed.push_back(s.truncated(order));
  std::map<MultiIndex, Jet> powers;
  Jet out(chart, order);
  for (const auto& m : indices_up_to(u.nvars(), order)) {
    Jet p = Jet::constant(chart->one(), order);
    if (!m.is_zero()) {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      p = jet_mul(powers.at(m.with(i, m[i] - 1)), trimmed[i]);
    }
    const RingElem c = u.coeff(m);
    if (!c.is_zero()) out += c * p;
    powers.emplace(m, std::move(p));
  }
  return out;
}

Jet jet_map(const Jet& u, const RingHom& hom) {
  if (hom.source() != u.chart()) throw MismatchError("ring map source does not match the jet chart");
  if (hom.target()->n() != u.nvars()) throw MismatchError("ring map changes the number of jet variables");
  Jet out(hom.target(), u.order());
  for (const auto& [m, c] : u.coeffs()) out.add_term(m, hom(c));
  return out;
}

}  // namespace jetalg
