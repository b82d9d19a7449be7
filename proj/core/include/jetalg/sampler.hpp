#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "jetalg/jet_field.hpp"
#include "jetalg/lie_plus.hpp"
#include "jetalg/semidirect.hpp"
#include "jetalg/tensor.hpp"

namespace jetalg {

/// Seeded generator with portable bounded draws (the standard distributions
/// are implementation-defined, which would make reports platform-dependent).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for one case: splitmix64 of the run seed combined with an FNV-1a hash
/// of the case id, so a case can be re-run alone.
std::uint64_t case_seed(std::uint64_t seed, std::string_view case_id);

struct SampleBounds {
  unsigned max_degree = 3;      // total degree in the parameters
  long coeff_bound = 5;         // integer coefficients in [-bound, bound]
  unsigned max_terms = 4;       // terms per numerator
  unsigned max_denom_power = 2; // power of the chart denominator
};

/// Random element of the chart ring; generators appear with exponent below
/// their relation degree. Never zero.
RingElem random_element(Rng& rng, const ChartPtr& chart, const SampleBounds& b = {});
/// Random polynomial element (denominator power 0).
RingElem random_polynomial(Rng& rng, const ChartPtr& chart, const SampleBounds& b = {});
/// Unreduced polynomial over params and generators with generator exponents
/// up to twice the relation degree.
Poly random_raw_poly(Rng& rng, const ChartPtr& chart, const SampleBounds& b = {});

VectorField random_field(Rng& rng, const ChartPtr& chart, const SampleBounds& b = {});
VectorField random_polynomial_field(Rng& rng, const ChartPtr& chart, const SampleBounds& b = {});
/// Jet with a few random coefficients at orders >= min_order.
Jet random_jet(Rng& rng, const ChartPtr& chart, unsigned order, const SampleBounds& b = {}, unsigned min_order = 0);
JetField random_jet_field(Rng& rng, const ChartPtr& chart, unsigned order, const SampleBounds& b = {},
                          unsigned min_order = 0);
CurrentElem random_current(Rng& rng, const ChartPtr& chart, unsigned max_total, const SampleBounds& b = {});
SemiDirectElem random_semidirect(Rng& rng, const ChartPtr& chart, unsigned max_total, const SampleBounds& b = {});

LBasis random_lbasis(Rng& rng, std::size_t n, unsigned max_total);
std::vector<LBasis> random_word(Rng& rng, std::size_t n, unsigned max_total, std::size_t length);
/// Word of fun/vf factors.
AVWord random_av_word(Rng& rng, const ChartPtr& chart, std::size_t length, const SampleBounds& b = {});

}  // namespace jetalg
