#include "jetalg/tensor.hpp"

#include <sstream>

namespace jetalg {

TensorElem::TensorElem(ChartPtr chart, unsigned max_total) : chart_(std::move(chart)), max_total_(max_total) {}

TensorElem TensorElem::unit(const ChartPtr& chart, unsigned max_total) {
  return product(DiffOp::identity(chart), UElem::unit(chart->n(), max_total));
}

TensorElem TensorElem::product(const DiffOp& d, const UElem& u) {
  if (u.nvars() != d.chart()->n()) throw MismatchError("enveloping element and chart have different dimensions");
  TensorElem out(d.chart(), u.max_total());
  for (const auto& [k, a] : d.terms())
    for (const auto& [w, c] : u.terms()) out.add_term(k, w, a * c);
  return out;
}

RingElem TensorElem::coeff(const MultiIndex& k, const PBWMonomial& w) const {
  auto it = terms_.find(Key{k, w});
  return it == terms_.end() ? chart_->zero() : it->second;
}

void TensorElem::add_term(const MultiIndex& k, const PBWMonomial& w, const RingElem& a) {
  if (a.chart() != chart_) throw MismatchError("coefficient on a different chart");
  if (!is_pbw_sorted(w)) throw DomainError("monomial is not in PBW order");
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{k, w}, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp TensorElem::d_part(const PBWMonomial& w) const {
  DiffOp out(chart_);
  for (const auto& [key, a] : terms_)
    if (key.second == w) out.add_term(key.first, a);
  return out;
}

void TensorElem::require_compatible(const TensorElem& other) const {
  if (!chart_ || chart_ != other.chart_) throw MismatchError("tensor elements on different charts");
  if (max_total_ != other.max_total_) throw MismatchError("tensor elements of different truncations");
}

TensorElem TensorElem::operator-() const {
  TensorElem out = *this;
  for (auto& [key, a] : out.terms_) a = -a;
  return out;
}

TensorElem& TensorElem::operator+=(const TensorElem& rhs) {
  require_compatible(rhs);
  for (const auto& [key, a] : rhs.terms_) add_term(key.first, key.second, a);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& rhs) {
  require_compatible(rhs);
  for (const auto& [key, a] : rhs.terms_) add_term(key.first, key.second, -a);
  return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) { return tensor_mul(a, b); }

std::string TensorElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Group by PBW monomial so each line reads as (operator) (x) (monomial).
  std::map<PBWMonomial, DiffOp> grouped;
  for (const auto& [key, a] : terms_) {
    auto it = grouped.try_emplace(key.second, chart_).first;
    it->second.add_term(key.first, a);
  }
  for (const auto& [w, d] : grouped) {
    if (!first) os << " + ";
    first = false;
    os << '[' << d.to_string() << "] (x) " << pbw_to_string(w);
  }
  return os.str();
}

bool operator==(const TensorElem& a, const TensorElem& b) {
  a.require_compatible(b);
  for (const auto& [key, c] : a.terms_)
    if (!(c == b.coeff(key.first, key.second))) return false;
  for (const auto& [key, c] : b.terms_)
    if (!a.terms_.count(key)) return false;
  return true;
}

TensorElem tensor_mul(const TensorElem& s, const TensorElem& t) {
  if (!s.chart() || s.chart() != t.chart()) throw MismatchError("tensor elements on different charts");
  if (s.max_total() != t.max_total()) throw MismatchError("tensor elements of different truncations");
  const auto& chart = s.chart();
  const std::size_t n = chart->n();
  // Collect D-parts per PBW monomial so each operator product is formed once.
  std::map<PBWMonomial, DiffOp> left, right;
  for (const auto& [key, a] : s.terms()) left.try_emplace(key.second, chart).first->second.add_term(key.first, a);
  for (const auto& [key, a] : t.terms()) right.try_emplace(key.second, chart).first->second.add_term(key.first, a);
  TensorElem out(chart, s.max_total());
  for (const auto& [wl, dl] : left)
    for (const auto& [wr, dr] : right) {
      std::vector<LBasis> word = wl;
      word.insert(word.end(), wr.begin(), wr.end());
      const UElem u = pbw_normalize(word, n, s.max_total());
      out += TensorElem::product(dop_mul(dl, dr), u);
    }
  return out;
}

const ChartPtr& AVWord::chart() const {
  if (factors.empty()) throw DomainError("empty word has no chart");
  return std::visit([](const auto& f) -> const ChartPtr& { return f.chart(); }, factors.front());
}

std::string AVWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " | ";
    if (const auto* f = std::get_if<RingElem>(&factors[i])) {
      os << "fun:" << f->to_string();
    } else {
      const auto& v = std::get<VectorField>(factors[i]);
      os << "vf:";
      for (std::size_t j = 0; j < v.size(); ++j) os << (j ? ";" : "") << v[j].to_string();
    }
  }
  return os.str();
}

namespace {

TensorElem factor_image(const AVFactor& f, unsigned r) {
  if (const auto* a = std::get_if<RingElem>(&f)) {
    return TensorElem::product(DiffOp::function(*a), UElem::unit(a->chart()->n(), r));
  }
  const auto& v = std::get<VectorField>(f);
  const auto& chart = v.chart();
  const std::size_t n = chart->n();
  TensorElem out = TensorElem::product(DiffOp::from_field(v), UElem::unit(n, r));
  const MultiIndex zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<MultiIndex, RingElem> derivs{{zero, v[i]}};
    for (const auto& m : indices_up_to(n, r)) {
      if (m.is_zero()) continue;
      std::size_t j = 0;
      while (m[j] == 0) ++j;
      const RingElem d = re_derive(j, derivs.at(m.with(j, m[j] - 1)));
      derivs.emplace(m, d);
      out.add_term(zero, PBWMonomial{LBasis{m, i}}, d * (Rational(1) / factorial(m)));
    }
  }
  return out;
}

}  // namespace

TensorElem av_to_tensor(const AVWord& w, unsigned r) {
  const auto& chart = w.chart();
  TensorElem out = TensorElem::unit(chart, r);
  for (const auto& f : w.factors) {
    if (std::visit([](const auto& x) { return x.chart(); }, f) != chart)
      throw MismatchError("word factors on different charts");
    out = tensor_mul(out, factor_image(f, r));
  }
  return out;
}

}  // namespace jetalg
