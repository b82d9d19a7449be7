#include "jetalg/multi_index.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "jetalg/error.hpp"

namespace jetalg {

MultiIndex::MultiIndex(std::size_t size) {
  if (size > kMaxVars) throw DomainError("too many variables for a multi-index");
  size_ = static_cast<std::uint8_t>(size);
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exponents)
    : MultiIndex(std::vector<unsigned>(exponents)) {}

MultiIndex::MultiIndex(const std::vector<unsigned>& exponents) : MultiIndex(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    total_ += exponents[i];
  }
}

MultiIndex MultiIndex::unit(std::size_t size, std::size_t i) {
  if (i >= size) throw DomainError("unit index out of range");
  MultiIndex m(size);
  m.exps_[i] = 1;
  m.total_ = 1;
  return m;
}

MultiIndex MultiIndex::with(std::size_t i, unsigned value) const {
  if (i >= size_) throw DomainError("multi-index position out of range");
  MultiIndex m = *this;
  m.total_ = m.total_ - m.exps_[i] + value;
  m.exps_[i] = static_cast<std::uint16_t>(value);
  return m;
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (size_ != other.size_) throw MismatchError("multi-index length mismatch");
  for (std::size_t i = 0; i < size_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size_ != other.size_) throw MismatchError("multi-index length mismatch");
  MultiIndex m = *this;
  for (std::size_t i = 0; i < size_; ++i) m.exps_[i] = static_cast<std::uint16_t>(m.exps_[i] + other.exps_[i]);
  m.total_ += other.total_;
  return m;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!other.leq(*this)) throw DomainError("multi-index subtraction would go negative");
  MultiIndex m = *this;
  for (std::size_t i = 0; i < size_; ++i) m.exps_[i] = static_cast<std::uint16_t>(m.exps_[i] - other.exps_[i]);
  m.total_ -= other.total_;
  return m;
}

std::vector<unsigned> MultiIndex::to_vector() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + size_);
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size_; ++i) os << (i ? "," : "") << exps_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (auto c = a.total_ <=> b.total_; c != 0) return c;
  for (std::size_t i = 0; i < a.size_; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  return std::strong_ordering::equal;
}

Rational factorial(const MultiIndex& m) {
  mpz_class result = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m[i]);
    result *= f;
  }
  return Rational(result);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) throw DomainError("binomial C(n,k) requires k <= n");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational binomial(const MultiIndex& m, const MultiIndex& k) {
  if (!k.leq(m)) throw DomainError("binomial C(m,k) requires k <= m componentwise");
  Rational result = 1;
  for (std::size_t i = 0; i < m.size(); ++i) result *= binomial(m[i], k[i]);
  return result;
}

std::vector<MultiIndex> indices_of_degree(std::size_t size, unsigned total) {
  std::vector<MultiIndex> out;
  if (size == 0) {
    if (total == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(size, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == size) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t size, unsigned max_total) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= max_total; ++d) {
    auto layer = indices_of_degree(size, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiIndex> lower_set(const MultiIndex& m) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> e(m.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == m.size()) {
      out.emplace_back(e);
      return;
    }
    for (unsigned v = 0; v <= m[pos]; ++v) {
      e[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jetalg
