#include "jetalg/sampler.hpp"

#include <limits>

namespace jetalg {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

std::uint64_t case_seed(std::uint64_t seed, std::string_view case_id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : case_id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

long nonzero_coeff(Rng& rng, long bound) {
  long c = rng.uniform(1, bound);
  return rng.coin() ? -c : c;
}

MultiIndex random_monomial(Rng& rng, const ChartPtr& chart, unsigned max_degree, unsigned gen_factor) {
  const std::size_t n = chart->n();
  std::vector<unsigned> e(chart->num_vars(), 0);
  unsigned budget = static_cast<unsigned>(rng.uniform(0, max_degree));
  while (budget > 0 && n > 0) {
    ++e[rng.index(n)];
    --budget;
  }
  for (std::size_t j = 0; j < chart->num_gens(); ++j)
    e[n + j] = static_cast<unsigned>(rng.uniform(0, gen_factor * chart->spec().alg_gens[j].degree - 1));
  return MultiIndex(e);
}

Poly random_numerator(Rng& rng, const ChartPtr& chart, const SampleBounds& b, unsigned gen_factor) {
  Poly p(chart->vars());
  while (p.is_zero()) {
    const unsigned terms = static_cast<unsigned>(rng.uniform(1, b.max_terms));
    for (unsigned t = 0; t < terms; ++t)
      p.add_term(random_monomial(rng, chart, b.max_degree, gen_factor), Rational(nonzero_coeff(rng, b.coeff_bound)));
  }
  return p;
}

}  // namespace

RingElem random_polynomial(Rng& rng, const ChartPtr& chart, const SampleBounds& b) {
  return RingElem(chart, random_numerator(rng, chart, b, 1), 0);
}

RingElem random_element(Rng& rng, const ChartPtr& chart, const SampleBounds& b) {
  Poly num = random_numerator(rng, chart, b, 1);
  unsigned pow = 0;
  if (!chart->has_trivial_denominator() && b.max_denom_power > 0)
    pow = static_cast<unsigned>(rng.uniform(0, b.max_denom_power));
  return RingElem(chart, std::move(num), pow);
}

Poly random_raw_poly(Rng& rng, const ChartPtr& chart, const SampleBounds& b) {
  return random_numerator(rng, chart, b, 2);
}

VectorField random_field(Rng& rng, const ChartPtr& chart, const SampleBounds& b) {
  std::vector<RingElem> coeffs;
  for (std::size_t i = 0; i < chart->n(); ++i)
    coeffs.push_back(rng.uniform(0, 3) == 0 ? chart->zero() : random_element(rng, chart, b));
  return VectorField(chart, std::move(coeffs));
}

VectorField random_polynomial_field(Rng& rng, const ChartPtr& chart, const SampleBounds& b) {
  std::vector<RingElem> coeffs;
  for (std::size_t i = 0; i < chart->n(); ++i) coeffs.push_back(random_polynomial(rng, chart, b));
  return VectorField(chart, std::move(coeffs));
}

Jet random_jet(Rng& rng, const ChartPtr& chart, unsigned order, const SampleBounds& b, unsigned min_order) {
  Jet u(chart, order);
  if (min_order > order) return u;
  std::vector<MultiIndex> slots;
  for (const auto& m : indices_up_to(chart->n(), order))
    if (m.total() >= min_order) slots.push_back(m);
  const std::size_t terms = static_cast<std::size_t>(rng.uniform(1, 3));
  for (std::size_t t = 0; t < terms; ++t) u.add_term(slots[rng.index(slots.size())], random_element(rng, chart, b));
  return u;
}

JetField random_jet_field(Rng& rng, const ChartPtr& chart, unsigned order, const SampleBounds& b, unsigned min_order) {
  std::vector<Jet> comps;
  for (std::size_t i = 0; i < chart->n(); ++i) comps.push_back(random_jet(rng, chart, order, b, min_order));
  return JetField(std::move(comps));
}

LBasis random_lbasis(Rng& rng, std::size_t n, unsigned max_total) {
  const auto basis = l_basis(n, max_total);
  return basis[rng.index(basis.size())];
}

CurrentElem random_current(Rng& rng, const ChartPtr& chart, unsigned max_total, const SampleBounds& b) {
  CurrentElem c(chart, max_total);
  if (max_total == 0) return c;
  const unsigned terms = static_cast<unsigned>(rng.uniform(1, 3));
  for (unsigned t = 0; t < terms; ++t) c.add_term(random_lbasis(rng, chart->n(), max_total), random_element(rng, chart, b));
  return c;
}

SemiDirectElem random_semidirect(Rng& rng, const ChartPtr& chart, unsigned max_total, const SampleBounds& b) {
  return SemiDirectElem(random_field(rng, chart, b), random_current(rng, chart, max_total, b));
}

std::vector<LBasis> random_word(Rng& rng, std::size_t n, unsigned max_total, std::size_t length) {
  const auto basis = l_basis(n, max_total);
  std::vector<LBasis> w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(basis[rng.index(basis.size())]);
  return w;
}

AVWord random_av_word(Rng& rng, const ChartPtr& chart, std::size_t length, const SampleBounds& b) {
  AVWord w;
  for (std::size_t i = 0; i < length; ++i) {
    if (rng.coin()) {
      w.factors.emplace_back(random_element(rng, chart, b));
    } else {
      w.factors.emplace_back(random_field(rng, chart, b));
    }
  }
  return w;
}

}  // namespace jetalg
