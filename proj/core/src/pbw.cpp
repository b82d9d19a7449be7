#include "jetalg/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace jetalg {

bool is_pbw_sorted(const PBWMonomial& word) { return std::is_sorted(word.begin(), word.end()); }

std::string pbw_to_string(const PBWMonomial& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << " . ";
    os << '[' << word[i].to_string() << ']';
  }
  return os.str();
}

UElem::UElem(std::size_t nvars, unsigned max_total) : nvars_(nvars), max_total_(max_total) {}

UElem UElem::unit(std::size_t nvars, unsigned max_total) {
  UElem u(nvars, max_total);
  u.add_term({}, Rational(1));
  return u;
}

Rational UElem::coeff(const PBWMonomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UElem::add_term(const PBWMonomial& w, const Rational& c) {
  if (!is_pbw_sorted(w)) throw DomainError("monomial is not in PBW order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElem UElem::operator-() const {
  UElem out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

UElem& UElem::operator+=(const UElem& rhs) {
  if (nvars_ != rhs.nvars_ || max_total_ != rhs.max_total_) throw MismatchError("enveloping elements of different shapes");
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

UElem& UElem::operator-=(const UElem& rhs) {
  if (nvars_ != rhs.nvars_ || max_total_ != rhs.max_total_) throw MismatchError("enveloping elements of different shapes");
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

UElem operator*(const Rational& c, const UElem& a) {
  UElem out(a.nvars_, a.max_total_);
  for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
  return out;
}

UElem operator*(const UElem& a, const UElem& b) { return pbw_mul(a, b); }

std::string UElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_term(c.to_string(), pbw_to_string(w));
  }
  return os.str();
}

bool operator==(const UElem& a, const UElem& b) {
  return a.nvars_ == b.nvars_ && a.max_total_ == b.max_total_ && a.terms_ == b.terms_;
}

namespace {

class Straightener {
 public:
  Straightener(std::size_t nvars, unsigned max_total) : nvars_(nvars), max_total_(max_total) {}

  const UElem& normalize(const std::vector<LBasis>& word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    UElem out(nvars_, max_total_);
    auto descent = std::adjacent_find(word.begin(), word.end(), [](const LBasis& a, const LBasis& b) { return b < a; });
    if (descent == word.end()) {
      out.add_term(word, Rational(1));
    } else {
      const std::size_t i = static_cast<std::size_t>(descent - word.begin());
      std::vector<LBasis> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      out += normalize(swapped);
      for (const auto& [b, c] : basis_bracket(word[i], word[i + 1], max_total_)) {
        std::vector<LBasis> shorter(word.begin(), word.begin() + i);
        shorter.push_back(b);
        shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
        out += c * normalize(shorter);
      }
    }
    return memo_.emplace(word, std::move(out)).first->second;
  }

 private:
  std::size_t nvars_;
  unsigned max_total_;
  std::map<std::vector<LBasis>, UElem> memo_;
};

}  // namespace

UElem pbw_normalize(const std::vector<LBasis>& word, std::size_t nvars, unsigned max_total) {
  for (const auto& b : word) {
    if (b.m.size() != nvars || b.dir >= nvars) throw MismatchError("basis vector has the wrong number of variables");
    if (b.m.total() == 0 || b.m.total() > max_total) throw DomainError("word factor " + b.to_string() + " is outside the truncation");
  }
  Straightener s(nvars, max_total);
  return s.normalize(word);
}

UElem pbw_mul(const UElem& a, const UElem& b) {
  if (a.nvars() != b.nvars() || a.max_total() != b.max_total()) throw MismatchError("enveloping elements of different shapes");
  Straightener s(a.nvars(), a.max_total());
  UElem out(a.nvars(), a.max_total());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      std::vector<LBasis> word = wa;
      word.insert(word.end(), wb.begin(), wb.end());
      out += (ca * cb) * s.normalize(word);
    }
  return out;
}

}  // namespace jetalg
