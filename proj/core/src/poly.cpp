#include "jetalg/poly.hpp"

#include <sstream>

#include "jetalg/error.hpp"

namespace jetalg {

VarList make_var_list(std::vector<std::string> names) {
  if (names.size() > MultiIndex::kMaxVars) throw DomainError("too many variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
  return *a == *b;
}

Poly::Poly(VarList vars) : vars_(std::move(vars)) {}

Poly::Poly(VarList vars, const Rational& constant) : vars_(std::move(vars)) {
  if (!constant.is_zero()) terms_.emplace(MultiIndex(nvars()), constant);
}

Poly Poly::variable(VarList vars, std::size_t i) {
  Poly p(std::move(vars));
  if (i >= p.nvars()) throw DomainError("variable index out of range");
  p.terms_.emplace(MultiIndex::unit(p.nvars(), i), Rational(1));
  return p;
}

Poly Poly::monomial(VarList vars, const MultiIndex& m, const Rational& c) {
  Poly p(std::move(vars));
  if (m.size() != p.nvars()) throw MismatchError("monomial length does not match variable list");
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Poly::constant_term() const { return coefficient(MultiIndex(nvars())); }

Rational Poly::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Poly::Terms::value_type& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.total(); }

unsigned Poly::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

void Poly::require_same_vars(const Poly& other) const {
  if (!same_vars(vars_, other.vars_)) throw MismatchError("polynomials over different variable lists");
}

void Poly::add_term(const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_vars(rhs);
  if (!vars_) vars_ = rhs.vars_;
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_vars(rhs);
  if (!vars_) vars_ = rhs.vars_;
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b);
  Poly out(a.vars_ ? a.vars_ : b.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(vars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::shift(const MultiIndex& m) const {
  Poly out(vars_);
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + m, c);
  return out;
}

Poly Poly::partial(std::size_t i) const {
  if (i >= nvars()) throw DomainError("partial derivative index out of range");
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    out.add_term(m.with(i, m[i] - 1), c * Rational(static_cast<long>(m[i])));
  }
  return out;
}

std::optional<Poly> Poly::exact_divide(const Poly& divisor) const {
  require_same_vars(divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& [lm, lc] = divisor.leading_term();
  Poly rem = *this;
  Poly quot(vars_ ? vars_ : divisor.vars_);
  // With a single divisor, a leading term that is not divisible proves
  // the division is inexact.
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.leq(rm)) return std::nullopt;
    const MultiIndex qm = rm - lm;
    const Rational qc = rc / lc;
    quot.add_term(qm, qc);
    Poly step = divisor.shift(qm);
    step *= qc;
    rem -= step;
  }
  return quot;
}

std::string format_monomial(const MultiIndex& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names[i];
    if (m[i] > 1) os << '^' << m[i];
  }
  return first ? "1" : os.str();
}

std::string format_term(const std::string& coeff, const std::string& factor) {
  if (factor == "1") return coeff;
  if (coeff == "1") return factor;
  if (coeff == "-1") return "-" + factor;
  if (coeff.find_first_of(" /") == std::string::npos) return coeff + "*" + factor;
  return "(" + coeff + ")*" + factor;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> fallback;
  const auto& names = vars_ ? *vars_ : fallback;
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_zero()) {
      os << mag;
    } else if (mag.is_one()) {
      os << format_monomial(m, names);
    } else {
      os << mag << '*' << format_monomial(m, names);
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Poly poly_arith(char op, const Poly& p, const Poly& q) {
  switch (op) {
    case '+': return p + q;
    case '-': return p - q;
    case '*': return p * q;
    default: throw DomainError(std::string("unknown polynomial operation '") + op + "'");
  }
}

Poly poly_partial(std::size_t i, const Poly& p) { return p.partial(i); }

}  // namespace jetalg
