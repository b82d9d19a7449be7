#pragma once

#include <string>
#include <string_view>

#include "jetalg/chart.hpp"

namespace jetalg {

/// Rejected expression text. `position` is a 0-based byte offset into the
/// source; `symbol` names the offending identifier where there is one.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownSymbol, IllegalDenominator };
  ParseError(Kind kind, std::size_t position, std::string symbol, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  const std::string& symbol() const { return symbol_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string symbol_;
};

/// Grammar, lowest precedence first, all binary operators left-associative:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] INTEGER)?
///   primary := INTEGER | NAME | '(' expr ')' | 'inv' '(' expr ')'
///
/// Rationals are written as quotients of integers, e.g. 3/4.

/// Polynomial over the given variables; division only by non-zero constants.
Poly parse_poly(std::string_view src, const VarList& vars);

/// Element of the chart ring. Division, inv() and negative exponents are
/// accepted only for elements that are invertible on the chart, i.e. that
/// divide a power of the chart denominator.
RingElem parse_expression(std::string_view src, const ChartPtr& chart);

}  // namespace jetalg
