#include "jetalg/chart.hpp"

#include <set>
#include <sstream>

namespace jetalg {

std::vector<std::string> ChartSpec::variable_names() const {
  std::vector<std::string> names = params;
  for (const auto& g : alg_gens) names.push_back(g.name);
  return names;
}

void validate_chart(const ChartSpec& spec) {
  using K = ChartError::Kind;
  if (spec.params.empty()) throw ChartError(K::Malformed, "chart '" + spec.name + "' has no parameters");
  const auto names = spec.variable_names();
  if (names.size() > MultiIndex::kMaxVars)
    throw ChartError(K::Malformed, "chart '" + spec.name + "' has too many variables");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw ChartError(K::Malformed, "duplicate variable name '" + n + "'");
  auto check_vars = [&](const Poly& p, const std::string& what) {
    if (!p.vars() || *p.vars() != names)
      throw ChartError(K::Malformed, what + " is not over the chart variables");
  };
  check_vars(spec.denominator, "denominator");
  const std::size_t n = spec.params.size();
  for (std::size_t j = 0; j < spec.alg_gens.size(); ++j) {
    const auto& gen = spec.alg_gens[j];
    check_vars(gen.rhs, "relation for '" + gen.name + "'");
    if (gen.degree < 2)
      throw ChartError(K::NonMonicRelation, "generator '" + gen.name + "' must have degree >= 2");
    for (std::size_t l = j; l < spec.alg_gens.size(); ++l)
      if (gen.rhs.degree_in(n + l) > 0)
        throw ChartError(K::NonMonicRelation, "relation for '" + gen.name + "' uses generator '" +
                                                  spec.alg_gens[l].name + "' (only earlier generators allowed)");
  }
  for (std::size_t j = 0; j < spec.alg_gens.size(); ++j) {
    if (spec.denominator.is_zero()) break;
    for (const auto& [m, c] : spec.denominator.terms())
      if (m[n + j] == 0)
        throw ChartError(K::MissingInvertibleGenerator,
                         "generator '" + spec.alg_gens[j].name + "' does not divide the denominator");
  }
  if (spec.denominator.is_zero()) throw ChartError(K::ZeroDenominator, "denominator is zero");
}

Chart::Chart(ChartSpec spec) : spec_(std::move(spec)) {
  vars_ = spec_.denominator.vars();
  rhs_powers_.resize(spec_.alg_gens.size());
}

ChartPtr Chart::create(ChartSpec spec) {
  validate_chart(spec);
  std::shared_ptr<Chart> chart(new Chart(std::move(spec)));
  // Share one variable list object between all polynomials of the chart.
  for (auto& gen : chart->spec_.alg_gens) {
    Poly p(chart->vars_);
    p += gen.rhs;
    gen.rhs = std::move(p);
  }
  for (auto& powers : chart->rhs_powers_) powers.push_back(Poly(chart->vars_, Rational(1)));
  chart->g_reduced_ = chart->reduce(chart->spec_.denominator);
  if (chart->g_reduced_.is_zero())
    throw ChartError(ChartError::Kind::ZeroDenominator, "denominator reduces to zero");
  if (chart->g_reduced_.size() == 1) chart->g_monomial_ = chart->g_reduced_.leading_term();
  chart->g_powers_.push_back(Poly(chart->vars_, Rational(1)));
  chart->g_powers_.push_back(chart->g_reduced_);
  chart->precompute_derivatives();
  return chart;
}

std::optional<std::size_t> Chart::variable_index(const std::string& name) const {
  for (std::size_t v = 0; v < vars_->size(); ++v)
    if ((*vars_)[v] == name) return v;
  return std::nullopt;
}

const Poly& Chart::rhs_power(std::size_t j, unsigned a) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (a < rhs_powers_[j].size()) return rhs_powers_[j][a];
  }
  const Poly& prev = rhs_power(j, a - 1);
  Poly next = reduce(prev * spec_.alg_gens[j].rhs);
  std::lock_guard lock(cache_mutex_);
  if (rhs_powers_[j].size() == a) rhs_powers_[j].push_back(std::move(next));
  return rhs_powers_[j][a];
}

const Poly& Chart::g_power(unsigned e) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (e < g_powers_.size()) return g_powers_[e];
  }
  const Poly& prev = g_power(e - 1);
  Poly next = reduce(prev * g_reduced_);
  std::lock_guard lock(cache_mutex_);
  if (g_powers_.size() == e) g_powers_.push_back(std::move(next));
  return g_powers_[e];
}

// Innermost generator first: rewriting y_j^d introduces only earlier
// generators, so one pass per generator suffices.
Poly Chart::reduce(const Poly& p) const {
  if (spec_.alg_gens.empty()) return p;
  Poly cur = p;
  const std::size_t n = this->n();
  for (std::size_t jj = spec_.alg_gens.size(); jj-- > 0;) {
    const std::size_t v = n + jj;
    const unsigned d = spec_.alg_gens[jj].degree;
    if (cur.degree_in(v) < d) continue;
    Poly out(vars_);
    for (const auto& [m, c] : cur.terms()) {
      if (m[v] < d) {
        out.add_term(m, c);
        continue;
      }
      const unsigned a = m[v] / d;
      const unsigned b = m[v] % d;
      const Poly& q = rhs_power(jj, a);
      const MultiIndex rest = m.with(v, b);
      for (const auto& [qm, qc] : q.terms()) out.add_term(qm + rest, qc * c);
    }
    cur = std::move(out);
  }
  return cur;
}

void Chart::normalize(Frac& f) const {
  if (f.num.is_zero()) {
    f.pow = 0;
    return;
  }
  if (f.pow == 0) return;
  if (g_monomial_) {
    const auto& [gm, gc] = *g_monomial_;
    while (f.pow > 0) {
      bool divisible = true;
      for (const auto& [m, c] : f.num.terms())
        if (!gm.leq(m)) {
          divisible = false;
          break;
        }
      if (!divisible) break;
      Poly q(vars_);
      const Rational inv = Rational(1) / gc;
      for (const auto& [m, c] : f.num.terms()) q.add_term(m - gm, c * inv);
      f.num = std::move(q);
      --f.pow;
    }
  } else if (spec_.alg_gens.empty()) {
    while (f.pow > 0) {
      auto q = f.num.exact_divide(g_reduced_);
      if (!q) break;
      f.num = std::move(*q);
      --f.pow;
    }
  }
}

Chart::Frac Chart::make(Poly num, unsigned pow) const {
  Frac f{reduce(num), pow};
  normalize(f);
  return f;
}

Chart::Frac Chart::add(const Frac& a, const Frac& b) const {
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  const unsigned s = std::max(a.pow, b.pow);
  Poly num(vars_);
  if (a.pow == b.pow) {
    num = a.num + b.num;
  } else {
    num = (a.pow == s ? a.num : reduce(a.num * g_power(s - a.pow))) +
          (b.pow == s ? b.num : reduce(b.num * g_power(s - b.pow)));
  }
  Frac f{std::move(num), s};
  normalize(f);
  return f;
}

Chart::Frac Chart::sub(const Frac& a, const Frac& b) const { return add(a, Frac{-b.num, b.pow}); }

Chart::Frac Chart::mul(const Frac& a, const Frac& b) const {
  if (a.num.is_zero() || b.num.is_zero()) return Frac{Poly(vars_), 0};
  Frac f{reduce(a.num * b.num), a.pow + b.pow};
  normalize(f);
  return f;
}

void Chart::precompute_derivatives() {
  const std::size_t n = this->n();
  const std::size_t ngen = num_gens();
  dgen_.assign(ngen, std::vector<Frac>(n));
  for (std::size_t j = 0; j < ngen; ++j) {
    const auto& gen = spec_.alg_gens[j];
    const std::size_t v = n + j;
    // 1 / y_j = (g / y_j) / g, exact because y_j divides g term by term.
    Poly g_over_y(vars_);
    for (const auto& [m, c] : spec_.denominator.terms()) g_over_y.add_term(m.with(v, m[v] - 1), c);
    const Frac inv_y = make(g_over_y, 1);
    Frac factor{Poly(vars_, Rational(1) / Rational(static_cast<long>(gen.degree))), 0};
    for (unsigned e = 1; e < gen.degree; ++e) factor = mul(factor, inv_y);
    for (std::size_t i = 0; i < n; ++i) {
      Frac num = make(gen.rhs.partial(i), 0);
      for (std::size_t l = 0; l < j; ++l) {
        Poly dq = gen.rhs.partial(n + l);
        if (dq.is_zero()) continue;
        num = add(num, mul(make(dq, 0), dgen_[l][i]));
      }
      dgen_[j][i] = mul(num, factor);
    }
  }
  dg_.assign(n, Frac{});
  for (std::size_t i = 0; i < n; ++i) {
    Frac d = make(g_reduced_.partial(i), 0);
    for (std::size_t j = 0; j < ngen; ++j) {
      Poly dp = g_reduced_.partial(n + j);
      if (dp.is_zero()) continue;
      d = add(d, mul(make(dp, 0), dgen_[j][i]));
    }
    dg_[i] = d;
  }
}

Chart::Frac Chart::derive(std::size_t i, const Frac& a) const {
  if (i >= n()) throw DomainError("derivation index out of range");
  if (a.num.is_zero()) return a;
  Frac dnum = make(a.num.partial(i), 0);
  for (std::size_t j = 0; j < num_gens(); ++j) {
    Poly dp = a.num.partial(n() + j);
    if (dp.is_zero()) continue;
    dnum = add(dnum, mul(make(dp, 0), dgen_[j][i]));
  }
  if (a.pow == 0) return dnum;
  // d(p / g^s) = dp / g^s - s p dg / g^(s+1)
  Frac first{dnum.num, dnum.pow + a.pow};
  normalize(first);
  Frac p_dg = mul(Frac{a.num * Rational(static_cast<long>(a.pow)), 0}, dg_[i]);
  Frac second{p_dg.num, p_dg.pow + a.pow + 1};
  normalize(second);
  return sub(first, second);
}

std::optional<Chart::Frac> Chart::inverse(const Frac& a) const {
  if (a.num.is_zero()) return std::nullopt;
  if (a.num.is_constant()) {
    return make(g_power(a.pow) * (Rational(1) / a.num.constant_term()), 0);
  }
  const unsigned max_e = a.num.total_degree() + 1;
  Poly raw_power(vars_, Rational(1));
  for (unsigned e = 1; e <= max_e; ++e) {
    raw_power = raw_power * spec_.denominator;
    for (const Poly* candidate : {static_cast<const Poly*>(&raw_power), &g_power(e)}) {
      if (auto h = candidate->exact_divide(a.num)) {
        Frac f{reduce(*h * g_power(a.pow)), e};
        normalize(f);
        return f;
      }
    }
  }
  return std::nullopt;
}

RingElem Chart::zero() const { return RingElem(shared_from_this(), Rational(0)); }
RingElem Chart::one() const { return RingElem(shared_from_this(), Rational(1)); }
RingElem Chart::constant(const Rational& c) const { return RingElem(shared_from_this(), c); }

RingElem Chart::param(std::size_t i) const {
  if (i >= n()) throw DomainError("parameter index out of range");
  return variable(i);
}

RingElem Chart::variable(std::size_t v) const {
  if (v >= num_vars()) throw DomainError("variable index out of range");
  return RingElem(shared_from_this(), Poly::variable(vars_, v));
}

RingElem Chart::element(Poly numerator, unsigned denom_power) const {
  return RingElem(shared_from_this(), std::move(numerator), denom_power);
}

// ---------------------------------------------------------------------------

RingElem::RingElem(ChartPtr chart, const Rational& c)
    : chart_(std::move(chart)), frac_{Poly(chart_->vars(), c), 0} {}

RingElem::RingElem(ChartPtr chart, Poly numerator, unsigned denom_power) : chart_(std::move(chart)) {
  if (!same_vars(numerator.vars(), chart_->vars()))
    throw MismatchError("numerator is not over the chart variables");
  Poly p(chart_->vars());
  p += numerator;
  frac_ = chart_->make(std::move(p), denom_power);
}

RingElem::RingElem(ChartPtr chart, Chart::Frac frac) : chart_(std::move(chart)), frac_(std::move(frac)) {}

void RingElem::require_same_chart(const RingElem& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("ring elements on different charts");
}

RingElem RingElem::operator-() const { return RingElem(chart_, Chart::Frac{-frac_.num, frac_.pow}); }

RingElem& RingElem::operator+=(const RingElem& rhs) {
  require_same_chart(rhs);
  frac_ = chart_->add(frac_, rhs.frac_);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  require_same_chart(rhs);
  frac_ = chart_->sub(frac_, rhs.frac_);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& rhs) {
  require_same_chart(rhs);
  frac_ = chart_->mul(frac_, rhs.frac_);
  return *this;
}

RingElem& RingElem::operator*=(const Rational& c) {
  frac_.num *= c;
  if (frac_.num.is_zero()) frac_.pow = 0;
  return *this;
}

RingElem RingElem::pow(unsigned e) const {
  RingElem result = chart_->one();
  RingElem base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string RingElem::to_string() const {
  if (!chart_) return "<empty>";
  if (frac_.pow == 0) return frac_.num.to_string();
  std::string num = frac_.num.to_string();
  if (frac_.num.size() > 1 || num.find('/') != std::string::npos || num.find('*') != std::string::npos)
    num = "(" + num + ")";
  const Poly& g = chart_->denominator();
  std::string den = g.to_string();
  const bool bare = g.size() == 1 && g.leading_term().second.is_one() && g.leading_term().first.total() == 1;
  if (!bare) den = "(" + den + ")";
  if (frac_.pow > 1) den += "^" + std::to_string(frac_.pow);
  return num + "/" + den;
}

bool operator==(const RingElem& a, const RingElem& b) { return re_eq(a, b); }

RingElem re_arith(char op, const RingElem& a, const RingElem& b) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    default: throw DomainError(std::string("unknown ring operation '") + op + "'");
  }
}

bool re_eq(const RingElem& a, const RingElem& b) {
  if (!a.chart() || a.chart() != b.chart()) throw MismatchError("ring elements on different charts");
  const auto& c = *a.chart();
  if (a.denom_power() == b.denom_power()) return a.numerator() == b.numerator();
  Poly lhs = c.reduce(a.numerator() * c.g_power(b.denom_power()));
  Poly rhs = c.reduce(b.numerator() * c.g_power(a.denom_power()));
  return lhs == rhs;
}

RingElem re_derive(std::size_t i, const RingElem& a) {
  if (!a.chart()) throw MismatchError("empty ring element");
  return RingElem(a.chart(), a.chart()->derive(i, a.frac()));
}

RingElem re_derive_multi(const MultiIndex& m, const RingElem& a) {
  if (m.size() != a.chart()->n()) throw MismatchError("derivative multi-index has the wrong length");
  RingElem r = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned k = 0; k < m[i]; ++k) r = re_derive(i, r);
  return r;
}

std::optional<RingElem> try_inverse(const RingElem& a) {
  auto f = a.chart()->inverse(a.frac());
  if (!f) return std::nullopt;
  return RingElem(a.chart(), std::move(*f));
}

}  // namespace jetalg
