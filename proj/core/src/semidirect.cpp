#include "jetalg/semidirect.hpp"

#include <map>

namespace jetalg {

SemiDirectElem::SemiDirectElem(VectorField v, CurrentElem l) : v_part(std::move(v)), l_part(std::move(l)) {
  if (v_part.chart() != l_part.chart()) throw MismatchError("semidirect parts on different charts");
}

SemiDirectElem::SemiDirectElem(const ChartPtr& chart, unsigned max_total)
    : v_part(chart), l_part(chart, max_total) {}

SemiDirectElem& SemiDirectElem::operator+=(const SemiDirectElem& rhs) {
  v_part += rhs.v_part;
  l_part += rhs.l_part;
  return *this;
}

SemiDirectElem& SemiDirectElem::operator-=(const SemiDirectElem& rhs) {
  v_part -= rhs.v_part;
  l_part -= rhs.l_part;
  return *this;
}

SemiDirectElem operator*(const RingElem& a, const SemiDirectElem& p) { return {a * p.v_part, a * p.l_part}; }

std::string SemiDirectElem::to_string() const {
  return "(" + v_part.to_string() + ", " + l_part.to_string() + ")";
}

bool operator==(const SemiDirectElem& a, const SemiDirectElem& b) {
  return a.v_part == b.v_part && a.l_part == b.l_part;
}

CurrentElem vf_act(const VectorField& v, const CurrentElem& c) {
  if (v.chart() != c.chart()) throw MismatchError("vector field and current element on different charts");
  CurrentElem out(c.chart(), c.max_total());
  for (const auto& [b, coeff] : c.terms()) out.add_term(b, vf_apply(v, coeff));
  return out;
}

SemiDirectElem sd_bracket(const SemiDirectElem& p, const SemiDirectElem& q) {
  if (p.max_total() != q.max_total()) throw MismatchError("semidirect elements of different truncations");
  CurrentElem l = current_bracket(p.l_part, q.l_part);
  l += vf_act(p.v_part, q.l_part);
  l -= vf_act(q.v_part, p.l_part);
  return {vf_bracket(p.v_part, q.v_part), std::move(l)};
}

SemiDirectElem phi(const JetField& u) {
  const unsigned k = u.order();
  CurrentElem l(u.chart(), k);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (const auto& [m, c] : u[i].coeffs())
      if (!m.is_zero()) l.add_term(LBasis{m, i}, c);
  return {jf_anchor(u), std::move(l)};
}

JetField psi(const SemiDirectElem& p, unsigned k) {
  if (p.max_total() > k) throw MismatchError("truncation of the semidirect element exceeds the jet order");
  const auto& chart = p.chart();
  JetField out(chart, k);
  for (std::size_t i = 0; i < p.v_part.size(); ++i)
    out.component(i) += Jet::constant(p.v_part[i], k);
  std::map<MultiIndex, Jet> delta_powers;
  for (const auto& [b, g] : p.l_part.terms()) {
    auto it = delta_powers.find(b.m);
    if (it == delta_powers.end()) it = delta_powers.emplace(b.m, delta_monomial(chart, b.m, k)).first;
    const RingElem sg = (b.m.total() % 2) ? -g : g;
    out.component(b.dir) += sg * it->second;
  }
  return out;
}

}  // namespace jetalg
