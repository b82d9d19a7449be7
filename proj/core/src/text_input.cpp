#include "jetalg/text_input.hpp"

#include <string>
#include <vector>

#include "jetalg/expression.hpp"

namespace jetalg {

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

std::vector<Piece> split(std::string_view src, char sep, std::size_t base) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= src.size(); ++i) {
    if (i == src.size() || src[i] == sep) {
      out.push_back({src.substr(start, i - start), base + start});
      start = i + 1;
    }
  }
  return out;
}

Piece trim(Piece p) {
  while (!p.text.empty() && p.text.front() == ' ') {
    p.text.remove_prefix(1);
    ++p.offset;
  }
  while (!p.text.empty() && p.text.back() == ' ') p.text.remove_suffix(1);
  return p;
}

[[noreturn]] void syntax(std::size_t pos, const std::string& msg) {
  throw ParseError(ParseError::Kind::Syntax, pos, "", "syntax error at position " + std::to_string(pos) + ": " + msg);
}

RingElem parse_at(const Piece& p, const ChartPtr& chart) {
  try {
    return parse_expression(p.text, chart);
  } catch (const ParseError& e) {
    const std::size_t pos = p.offset + e.position();
    std::string what = e.what();
    if (e.kind() == ParseError::Kind::Syntax) what = "syntax error at position " + std::to_string(pos);
    throw ParseError(e.kind(), pos, e.symbol(), what);
  }
}

VectorField field_at(std::string_view src, std::size_t base, const ChartPtr& chart) {
  const auto parts = split(src, ';', base);
  if (parts.size() != chart->n())
    syntax(base, "expected " + std::to_string(chart->n()) + " coefficients separated by ';'");
  std::vector<RingElem> coeffs;
  for (const auto& p : parts) coeffs.push_back(parse_at(trim(p), chart));
  return VectorField(chart, std::move(coeffs));
}

}  // namespace

VectorField parse_vector_field(std::string_view src, const ChartPtr& chart) { return field_at(src, 0, chart); }

MultiIndex parse_multi_index(std::string_view src, std::size_t size) {
  const auto parts = split(src, ',', 0);
  if (parts.size() != size) syntax(0, "expected " + std::to_string(size) + " exponents separated by ','");
  std::vector<unsigned> e;
  for (const auto& raw : parts) {
    const Piece p = trim(raw);
    if (p.text.empty() || p.text.size() > 4) syntax(p.offset, "expected a small non-negative integer");
    unsigned v = 0;
    for (char ch : p.text) {
      if (ch < '0' || ch > '9') syntax(p.offset, "expected a non-negative integer");
      v = v * 10 + static_cast<unsigned>(ch - '0');
    }
    e.push_back(v);
  }
  return MultiIndex(e);
}

JetField parse_smash_pair(std::string_view src, const ChartPtr& chart, unsigned k) {
  const auto hash = src.find('#');
  if (hash == std::string_view::npos) syntax(0, "expected 'a # c1; ...'");
  const RingElem a = parse_at(trim({src.substr(0, hash), 0}), chart);
  return jf_from_pair(a, field_at(src.substr(hash + 1), hash + 1, chart), k);
}

AVWord parse_av_word(std::string_view src, const ChartPtr& chart) {
  AVWord w;
  for (const auto& raw : split(src, '|', 0)) {
    const Piece p = trim(raw);
    if (p.text.starts_with("fun:")) {
      w.factors.emplace_back(parse_at({p.text.substr(4), p.offset + 4}, chart));
    } else if (p.text.starts_with("vf:")) {
      w.factors.emplace_back(field_at(p.text.substr(3), p.offset + 3, chart));
    } else {
      syntax(p.offset, "factors start with 'fun:' or 'vf:'");
    }
  }
  return w;
}

}  // namespace jetalg
