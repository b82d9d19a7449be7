#include "jetalg/expression.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

namespace jetalg {

ParseError::ParseError(Kind kind, std::size_t position, std::string symbol, const std::string& what)
    : Error(what), kind_(kind), position_(position), symbol_(std::move(symbol)) {}

namespace {

constexpr long kMaxExponent = 4096;

struct Node {
  enum class Op { Number, Name, Add, Sub, Mul, Div, Neg, Pow, Inv };
  Op op;
  std::size_t pos = 0;
  std::string text;  // number digits or identifier
  long exponent = 0;
  std::vector<std::unique_ptr<Node>> kids;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Op op, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->op = op;
  n->pos = pos;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, "", "syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr binary(Node::Op op, std::size_t pos, NodePtr a, NodePtr b) {
    auto n = make(op, pos);
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Node::Op::Add, at, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Node::Op::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Node::Op::Mul, at, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Node::Op::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto n = make(Node::Op::Neg, at);
      n->kids.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) fail("exponent too large");
    auto n = make(Node::Op::Pow, at);
    n->exponent = negative ? -std::stol(digits) : std::stol(digits);
    n->kids.push_back(std::move(base));
    return n;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      auto n = make(Node::Op::Number, at);
      n->text = std::string(src_.substr(at, pos_ - at));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string name(src_.substr(at, pos_ - at));
      skip_ws();
      if (name == "inv" && pos_ < src_.size() && src_[pos_] == '(') {
        expect('(');
        auto n = make(Node::Op::Inv, at);
        n->kids.push_back(expr());
        expect(')');
        return n;
      }
      auto n = make(Node::Op::Name, at);
      n->text = std::move(name);
      return n;
    }
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void illegal_denominator(const Node& n, const std::string& detail) {
  throw ParseError(ParseError::Kind::IllegalDenominator, n.pos, "",
                   "illegal denominator at position " + std::to_string(n.pos) + ": " + detail);
}

[[noreturn]] void unknown_symbol(const Node& n) {
  throw ParseError(ParseError::Kind::UnknownSymbol, n.pos, n.text, "unknown symbol '" + n.text + "'");
}

Poly eval_poly(const Node& n, const VarList& vars) {
  switch (n.op) {
    case Node::Op::Number:
      return Poly(vars, Rational(mpz_class(n.text)));
    case Node::Op::Name:
      for (std::size_t i = 0; i < vars->size(); ++i)
        if ((*vars)[i] == n.text) return Poly::variable(vars, i);
      unknown_symbol(n);
    case Node::Op::Add:
      return eval_poly(*n.kids[0], vars) + eval_poly(*n.kids[1], vars);
    case Node::Op::Sub:
      return eval_poly(*n.kids[0], vars) - eval_poly(*n.kids[1], vars);
    case Node::Op::Mul:
      return eval_poly(*n.kids[0], vars) * eval_poly(*n.kids[1], vars);
    case Node::Op::Neg:
      return -eval_poly(*n.kids[0], vars);
    case Node::Op::Div: {
      const Poly d = eval_poly(*n.kids[1], vars);
      if (!d.is_constant() || d.is_zero()) illegal_denominator(n, "polynomials may only be divided by non-zero constants");
      return eval_poly(*n.kids[0], vars) * (Rational(1) / d.constant_term());
    }
    case Node::Op::Pow: {
      const Poly b = eval_poly(*n.kids[0], vars);
      if (n.exponent >= 0) return b.pow(static_cast<unsigned>(n.exponent));
      if (!b.is_constant() || b.is_zero()) illegal_denominator(n, "negative powers need a non-zero constant base");
      return Poly(vars, Rational(1) / b.constant_term()).pow(static_cast<unsigned>(-n.exponent));
    }
    case Node::Op::Inv: {
      const Poly b = eval_poly(*n.kids[0], vars);
      if (!b.is_constant() || b.is_zero()) illegal_denominator(n, "inv() of a non-constant polynomial");
      return Poly(vars, Rational(1) / b.constant_term());
    }
  }
  throw Error("unreachable expression node");
}

RingElem invert(const Node& n, const RingElem& b) {
  auto inv = try_inverse(b);
  if (!inv) illegal_denominator(n, "'" + b.to_string() + "' is not invertible on chart " + b.chart()->name());
  return *inv;
}

RingElem eval_ring(const Node& n, const ChartPtr& chart) {
  switch (n.op) {
    case Node::Op::Number:
      return chart->constant(Rational(mpz_class(n.text)));
    case Node::Op::Name: {
      auto v = chart->variable_index(n.text);
      if (!v) unknown_symbol(n);
      return chart->variable(*v);
    }
    case Node::Op::Add:
      return eval_ring(*n.kids[0], chart) + eval_ring(*n.kids[1], chart);
    case Node::Op::Sub:
      return eval_ring(*n.kids[0], chart) - eval_ring(*n.kids[1], chart);
    case Node::Op::Mul:
      return eval_ring(*n.kids[0], chart) * eval_ring(*n.kids[1], chart);
    case Node::Op::Neg:
      return -eval_ring(*n.kids[0], chart);
    case Node::Op::Div: {
      const RingElem d = eval_ring(*n.kids[1], chart);
      const RingElem a = eval_ring(*n.kids[0], chart);
      if (d.is_constant() && !d.is_zero()) return a * (Rational(1) / d.numerator().constant_term());
      return a * invert(n, d);
    }
    case Node::Op::Pow: {
      const RingElem b = eval_ring(*n.kids[0], chart);
      if (n.exponent >= 0) return b.pow(static_cast<unsigned>(n.exponent));
      return invert(n, b).pow(static_cast<unsigned>(-n.exponent));
    }
    case Node::Op::Inv:
      return invert(n, eval_ring(*n.kids[0], chart));
  }
  throw Error("unreachable expression node");
}

}  // namespace

Poly parse_poly(std::string_view src, const VarList& vars) {
  Parser p(src);
  return eval_poly(*p.parse(), vars);
}

RingElem parse_expression(std::string_view src, const ChartPtr& chart) {
  Parser p(src);
  return eval_ring(*p.parse(), chart);
}

}  // namespace jetalg
