#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jetalg/error.hpp"
#include "jetalg/poly.hpp"

namespace jetalg {

/// Algebraic generator y with a monic relation y^degree = rhs.
struct AlgGenSpec {
  std::string name;
  unsigned degree = 2;
  /// Polynomial over the chart variables; may only involve parameters and
  /// earlier generators.
  Poly rhs;
};

/// Presentation of a coordinate ring A = K[x, y] / (relations) localized at
/// powers of one element g.
///
/// Every polynomial in a ChartSpec is over the variable list params ++ gen names.
struct ChartSpec {
  std::string name;
  std::vector<std::string> params;
  std::vector<AlgGenSpec> alg_gens;
  Poly denominator;

  /// params followed by generator names.
  std::vector<std::string> variable_names() const;
};

class ChartError : public Error {
 public:
  enum class Kind { Malformed, NonMonicRelation, MissingInvertibleGenerator, ZeroDenominator };
  ChartError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Throws ChartError naming the first violated condition.
void validate_chart(const ChartSpec& spec);

class Chart;
class RingElem;
using ChartPtr = std::shared_ptr<const Chart>;

/// A validated chart together with the data needed for arithmetic:
/// reduction modulo the relations, powers of g, and the unique extension
/// of d/dx_i to the generators.
///
/// Irreducibility of the relations is assumed, not checked; equality tests
/// by cross-multiplication rely on the ring being a domain.
class Chart : public std::enable_shared_from_this<Chart> {
 public:
  /// Numerator over g^pow. Numerators are always relation-reduced.
  struct Frac {
    Poly num;
    unsigned pow = 0;
  };

  static ChartPtr create(ChartSpec spec);

  const ChartSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  std::size_t n() const { return spec_.params.size(); }
  std::size_t num_gens() const { return spec_.alg_gens.size(); }
  std::size_t num_vars() const { return vars_->size(); }
  const VarList& vars() const { return vars_; }
  /// Index of a parameter or generator name, if present.
  std::optional<std::size_t> variable_index(const std::string& name) const;

  /// g reduced modulo the relations.
  const Poly& denominator() const { return g_reduced_; }
  bool has_trivial_denominator() const { return g_reduced_ == Poly(vars_, Rational(1)); }

  RingElem zero() const;
  RingElem one() const;
  RingElem constant(const Rational& c) const;
  RingElem param(std::size_t i) const;
  RingElem variable(std::size_t v) const;
  RingElem element(Poly numerator, unsigned denom_power = 0) const;

  Poly reduce(const Poly& p) const;
  const Poly& g_power(unsigned e) const;

  Frac make(Poly num, unsigned pow) const;
  Frac add(const Frac& a, const Frac& b) const;
  Frac sub(const Frac& a, const Frac& b) const;
  Frac mul(const Frac& a, const Frac& b) const;
  Frac derive(std::size_t i, const Frac& a) const;
  std::optional<Frac> inverse(const Frac& a) const;
  bool is_zero(const Frac& a) const { return a.num.is_zero(); }

 private:
  explicit Chart(ChartSpec spec);
  void normalize(Frac& f) const;
  const Poly& rhs_power(std::size_t j, unsigned a) const;
  void precompute_derivatives();

  ChartSpec spec_;
  VarList vars_;
  Poly g_reduced_;
  std::optional<std::pair<MultiIndex, Rational>> g_monomial_;
  std::vector<Frac> dg_;                    // d g / d x_i
  std::vector<std::vector<Frac>> dgen_;     // [j][i] = d y_j / d x_i

  mutable std::mutex cache_mutex_;
  mutable std::deque<Poly> g_powers_;
  mutable std::vector<std::deque<Poly>> rhs_powers_;
};

/// Element of a chart ring, stored as a relation-reduced numerator over a
/// power of the chart denominator. Equality is semantic.
class RingElem {
 public:
  RingElem() = default;
  RingElem(ChartPtr chart, const Rational& c);
  RingElem(ChartPtr chart, Poly numerator, unsigned denom_power = 0);
  RingElem(ChartPtr chart, Chart::Frac frac);

  const ChartPtr& chart() const { return chart_; }
  const Poly& numerator() const { return frac_.num; }
  unsigned denom_power() const { return frac_.pow; }
  const Chart::Frac& frac() const { return frac_; }

  bool is_zero() const { return frac_.num.is_zero(); }
  /// Constant of the ground field (no x or y dependence).
  bool is_constant() const { return frac_.pow == 0 && frac_.num.is_constant(); }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const RingElem& rhs);
  RingElem& operator*=(const Rational& c);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator*(RingElem a, const Rational& c) { return a *= c; }
  friend RingElem operator*(const Rational& c, RingElem a) { return a *= c; }

  RingElem pow(unsigned e) const;

  /// Parser-compatible text, e.g. "(3/2*x^2 - 1/2)/y".
  std::string to_string() const;

  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  void require_same_chart(const RingElem& other) const;

  ChartPtr chart_;
  Chart::Frac frac_;
};

/// add / subtract / multiply on one chart; `op` is '+', '-' or '*'.
RingElem re_arith(char op, const RingElem& a, const RingElem& b);
/// Cross-multiplication equality test.
bool re_eq(const RingElem& a, const RingElem& b);
/// The unique extension of d/dx_i to the chart ring.
RingElem re_derive(std::size_t i, const RingElem& a);
/// Iterated partial derivative d^m a / dx^m.
RingElem re_derive_multi(const MultiIndex& m, const RingElem& a);
/// Multiplicative inverse when it can be exhibited as h / g^e.
std::optional<RingElem> try_inverse(const RingElem& a);

}  // namespace jetalg
