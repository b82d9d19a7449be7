#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "jetalg/rational.hpp"

namespace jetalg {

/// Exponent vector m in Z_+^n with a length fixed at construction.
///
/// Ordering is graded lexicographic: total degree first, then the first
/// differing exponent (larger exponent on an earlier variable is larger).
class MultiIndex {
 public:
  static constexpr std::size_t kMaxVars = 8;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t size);
  MultiIndex(std::initializer_list<unsigned> exponents);
  explicit MultiIndex(const std::vector<unsigned>& exponents);

  static MultiIndex unit(std::size_t size, std::size_t i);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned total() const { return total_; }
  bool is_zero() const { return total_ == 0; }

  /// Copy with entry i replaced.
  MultiIndex with(std::size_t i, unsigned value) const;

  /// Componentwise a <= b.
  bool leq(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; throws DomainError unless other <= *this.
  MultiIndex operator-(const MultiIndex& other) const;

  std::vector<unsigned> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
  unsigned total_ = 0;
};

/// m! = prod m_i!.
Rational factorial(const MultiIndex& m);
/// prod C(m_i, k_i); throws DomainError unless k <= m componentwise.
Rational binomial(const MultiIndex& m, const MultiIndex& k);
/// Integer binomial C(n, k) for plain integers.
Rational binomial(unsigned n, unsigned k);

/// All multi-indices in `size` variables with total degree <= max_total,
/// ascending in graded lexicographic order.
std::vector<MultiIndex> indices_up_to(std::size_t size, unsigned max_total);
/// All multi-indices with total degree exactly `total`, ascending.
std::vector<MultiIndex> indices_of_degree(std::size_t size, unsigned total);
/// All k with k <= m componentwise, ascending.
std::vector<MultiIndex> lower_set(const MultiIndex& m);

}  // namespace jetalg
