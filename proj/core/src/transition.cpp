#include "jetalg/transition.hpp"

#include <map>

#include "jetalg/jet.hpp"
#include "jetalg/jet_field.hpp"

namespace jetalg {

namespace {

void check_fibre_index(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r) {
  if (m.size() != tp.n() || p >= tp.n()) throw MismatchError("fibre index does not match the chart dimension");
  if (m.total() == 0) throw DomainError("fibre vectors start at |m| = 1");
  if (m.total() > r) throw DomainError("fibre vector X^" + m.to_string() + " lies outside the truncation");
}

Jet jet_power(const std::vector<Jet>& base, const MultiIndex& k, const ChartPtr& chart, unsigned r) {
  Jet out = Jet::constant(chart->one(), r);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (unsigned e = 0; e < k[i]; ++e) out = jet_mul(out, base[i]);
  return out;
}

RingElem ring_power(const std::vector<RingElem>& base, const MultiIndex& k, const ChartPtr& chart) {
  RingElem out = chart->one();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i]) out *= base[i].pow(k[i]);
  return out;
}

}  // namespace

CurrentElem current_map(const CurrentElem& c, const RingHom& hom) {
  if (hom.source() != c.chart()) throw MismatchError("ring map source does not match the current element");
  if (hom.target()->n() != c.nvars()) throw MismatchError("ring map changes the fibre dimension");
  CurrentElem out(hom.target(), c.max_total());
  for (const auto& [b, a] : c.terms()) out.add_term(b, hom(a));
  return out;
}

CurrentElem transition_l(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r) {
  check_fibre_index(m, p, tp, r);
  const auto& ov = tp.overlap();
  const std::size_t n = tp.n();

  std::vector<RingElem> g;
  std::vector<Jet> g_shifted, shift;
  for (std::size_t i = 0; i < n; ++i) {
    g.push_back(tp.g(i));
    g_shifted.push_back(jet_of(g[i], r));
    shift.push_back(g_shifted[i] - Jet::constant(g[i], r));
  }
  // (dH_q/dx_p)(G(y+Y)) and its value at Y = 0.
  std::vector<Jet> h_shifted;
  std::vector<RingElem> h_at_g;
  for (std::size_t q = 0; q < n; ++q) {
    h_shifted.push_back(jet_compose(jet_map(jet_of(tp.dh(q, p), r), tp.hom_g()), shift));
    h_at_g.push_back(tp.dh_at_g(q, p));
  }

  std::vector<Jet> acc(n, Jet(ov, r));
  for (const auto& k : lower_set(m)) {
    RingElem coeff = ring_power(g, m - k, ov) * binomial(m, k);
    if ((m.total() - k.total()) % 2) coeff = -coeff;
    const Jet gk = jet_power(g_shifted, k, ov, r);
    const RingElem gk0 = ring_power(g, k, ov);
    for (std::size_t q = 0; q < n; ++q)
      acc[q] += coeff * (jet_mul(gk, h_shifted[q]) - Jet::constant(gk0 * h_at_g[q], r));
  }

  CurrentElem out(ov, r);
  for (std::size_t q = 0; q < n; ++q)
    for (const auto& [s, c] : acc[q].coeffs()) out.add_term(LBasis{s, q}, c);
  return out;
}

SemiDirectElem iso_transport(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r) {
  check_fibre_index(m, p, tp, r);
  const auto& src = tp.source();
  const auto& ov = tp.overlap();
  const RingHom& to_ov = tp.source_to_overlap();

  SemiDirectElem fibre(src, r);
  fibre.l_part.add_term(LBasis{m, p}, src->one());
  const JetField on_source = psi(fibre, r);

  // d/dx_p = sum_q (dH_q/dx_p)(G) d/dy_q, one column per source direction.
  std::vector<VectorField> chain;
  for (std::size_t d = 0; d < tp.n(); ++d) {
    std::vector<RingElem> col;
    for (std::size_t q = 0; q < tp.n(); ++q) col.push_back(tp.dh_at_g(q, d));
    chain.emplace_back(ov, std::move(col));
  }

  JetField on_overlap(ov, r);
  for (const auto& term : jf_decompose(on_source)) {
    const RingElem left = to_ov(term.left);
    const RingElem right = to_ov(term.right);
    on_overlap += jf_from_pair(left, right * chain[term.dir], r);
  }
  return phi(on_overlap);
}

CurrentElem transition_via_iso(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r) {
  return iso_transport(m, p, tp, r).l_part;
}

bool cocycle_check(const Atlas& atlas, std::size_t i, std::size_t j, std::size_t l, const MultiIndex& m,
                   std::size_t p, unsigned r) {
  const TransitionPair& tij = atlas.transition(i, j);
  const TransitionPair& tjl = atlas.transition(j, l);
  const TransitionPair& til = atlas.transition(i, l);
  const ChartPtr triple = atlas.triple_overlap(i, j, l);

  const RingHom il_to_t = RingHom::inclusion(til.overlap(), triple);
  const RingHom jl_to_t = RingHom::inclusion(tjl.overlap(), triple);
  // Coordinates of chart j as functions on the triple overlap.
  std::vector<RingElem> j_coords;
  for (const auto& img : tjl.hom_g().images()) j_coords.push_back(jl_to_t(img));
  const RingHom ij_to_t(tij.overlap(), triple, std::move(j_coords));

  const CurrentElem direct = current_map(transition_l(m, p, til, r), il_to_t);
  const CurrentElem first = transition_l(m, p, tij, r);
  CurrentElem composed(triple, r);
  for (const auto& [b, c] : first.terms())
    composed += ij_to_t(c) * current_map(transition_l(b.m, b.dir, tjl, r), jl_to_t);
  return direct == composed;
}

bool filtration_check(const TransitionPair& tp, const MultiIndex& m, std::size_t p, unsigned r) {
  const CurrentElem c = transition_l(m, p, tp, r);
  for (const auto& [b, a] : c.terms())
    if (b.m.total() < m.total()) return false;
  return true;
}

bool jacobian_quotient_check(const TransitionPair& tp, const MultiIndex& a, std::size_t p, unsigned r) {
  if (a.total() != 1) throw DomainError("the (1,1)-tensor quotient is defined for |a| = 1");
  std::size_t i = 0;
  while (a[i] == 0) ++i;
  const auto& ov = tp.overlap();
  const std::size_t n = tp.n();
  CurrentElem expected(ov, r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < n; ++q)
      expected.add_term(LBasis{MultiIndex::unit(n, j), q}, tp.dg(i, j) * tp.dh_at_g(q, p));
  return transition_l(a, p, tp, r).degree_part(0) == expected;
}

}  // namespace jetalg
