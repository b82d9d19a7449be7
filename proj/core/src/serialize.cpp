#include "jetalg/serialize.hpp"

#include <json.hpp>

#include "jetalg/expression.hpp"
#include "jetalg/loader.hpp"

namespace jetalg {

using nlohmann::ordered_json;

namespace {

ordered_json index_json(const MultiIndex& m) { return ordered_json(m.to_vector()); }

ordered_json header(const char* kind, const ChartPtr& chart) {
  ordered_json j;
  j["kind"] = kind;
  j["chart"] = chart->name();
  return j;
}

ordered_json jet_terms(const Jet& u) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : u.coeffs()) terms.push_back({{"t", index_json(m)}, {"c", c.to_string()}});
  return terms;
}

ordered_json current_terms(const CurrentElem& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& [b, a] : c.terms())
    terms.push_back({{"m", index_json(b.m)}, {"dir", b.dir}, {"c", a.to_string()}});
  return terms;
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent); }

// Reading ------------------------------------------------------------------

[[noreturn]] void bad(const std::string& path, const std::string& msg) { throw SchemaError({{path, msg}}); }

ordered_json parse_doc(std::string_view text, const char* kind, const ChartPtr& chart) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    bad("$", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("$", "expected an object");
  if (!j.contains("kind") || j["kind"] != kind) bad("kind", std::string("expected \"") + kind + "\"");
  if (!j.contains("chart") || !j["chart"].is_string()) bad("chart", "missing chart name");
  if (j["chart"].get<std::string>() != chart->name())
    bad("chart", "document is for chart '" + j["chart"].get<std::string>() + "', not '" + chart->name() + "'");
  return j;
}

const ordered_json& member(const ordered_json& j, const std::string& path, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(path.empty() ? key : path + "." + key, "missing required field");
  return j.at(key);
}

unsigned read_unsigned(const ordered_json& j, const std::string& path, const char* key) {
  const auto& v = member(j, path, key);
  if (!v.is_number_unsigned()) bad(path.empty() ? key : path + "." + key, "expected a non-negative integer");
  return v.get<unsigned>();
}

const ordered_json& read_array(const ordered_json& j, const std::string& path, const char* key) {
  const auto& v = member(j, path, key);
  if (!v.is_array()) bad(path.empty() ? key : path + "." + key, "expected an array");
  return v;
}

MultiIndex read_index(const ordered_json& v, const std::string& path, std::size_t n) {
  if (!v.is_array() || v.size() != n) bad(path, "expected " + std::to_string(n) + " exponents");
  std::vector<unsigned> e;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) bad(path, "exponents must be non-negative integers");
    e.push_back(x.get<unsigned>());
  }
  return MultiIndex(e);
}

RingElem read_ring(const ordered_json& v, const std::string& path, const ChartPtr& chart) {
  if (!v.is_string()) bad(path, "expected an expression string");
  return parse_expression(v.get<std::string>(), chart);
}

Jet read_jet_terms(const ordered_json& terms, const std::string& path, const ChartPtr& chart, unsigned order) {
  Jet u(chart, order);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    const MultiIndex m = read_index(member(t, p, "t"), p + ".t", chart->n());
    if (m.total() > order) bad(p + ".t", "exponent exceeds the jet order");
    u.add_term(m, read_ring(member(t, p, "c"), p + ".c", chart));
  }
  return u;
}

CurrentElem read_current_terms(const ordered_json& terms, const std::string& path, const ChartPtr& chart,
                               unsigned max_total) {
  CurrentElem c(chart, max_total);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    const MultiIndex m = read_index(member(t, p, "m"), p + ".m", chart->n());
    const unsigned dir = read_unsigned(t, p, "dir");
    if (dir >= chart->n()) bad(p + ".dir", "direction out of range");
    if (m.total() == 0 || m.total() > max_total) bad(p + ".m", "|m| must lie in 1..max_total");
    c.add_term(LBasis{m, dir}, read_ring(member(t, p, "c"), p + ".c", chart));
  }
  return c;
}

}  // namespace

std::string to_json(const Jet& u, int indent) {
  ordered_json j = header("jet", u.chart());
  j["order"] = u.order();
  j["terms"] = jet_terms(u);
  return dump(j, indent);
}

std::string to_json(const JetField& u, int indent) {
  ordered_json j = header("jet_field", u.chart());
  j["order"] = u.order();
  ordered_json comps = ordered_json::array();
  for (const auto& c : u.components()) comps.push_back(jet_terms(c));
  j["components"] = comps;
  return dump(j, indent);
}

std::string to_json(const CurrentElem& c, int indent) {
  ordered_json j = header("current", c.chart());
  j["max_total"] = c.max_total();
  j["terms"] = current_terms(c);
  return dump(j, indent);
}

std::string to_json(const SemiDirectElem& p, int indent) {
  ordered_json j = header("semidirect", p.chart());
  j["max_total"] = p.max_total();
  ordered_json v = ordered_json::array();
  for (const auto& c : p.v_part.coeffs()) v.push_back(c.to_string());
  j["v"] = v;
  j["l"] = current_terms(p.l_part);
  return dump(j, indent);
}

std::string to_json(const TensorElem& s, int indent) {
  ordered_json j = header("tensor", s.chart());
  j["max_total"] = s.max_total();
  ordered_json terms = ordered_json::array();
  for (const auto& [key, a] : s.terms()) {
    ordered_json word = ordered_json::array();
    for (const auto& b : key.second) word.push_back({{"m", index_json(b.m)}, {"dir", b.dir}});
    terms.push_back({{"d", index_json(key.first)}, {"pbw", word}, {"c", a.to_string()}});
  }
  j["terms"] = terms;
  return dump(j, indent);
}

std::string to_json(const DiffOp& d, int indent) {
  ordered_json j = header("diff_op", d.chart());
  ordered_json terms = ordered_json::array();
  for (const auto& [k, a] : d.terms()) terms.push_back({{"d", index_json(k)}, {"c", a.to_string()}});
  j["terms"] = terms;
  return dump(j, indent);
}

Jet jet_from_json(std::string_view text, const ChartPtr& chart) {
  const auto j = parse_doc(text, "jet", chart);
  return read_jet_terms(read_array(j, "", "terms"), "terms", chart, read_unsigned(j, "", "order"));
}

JetField jet_field_from_json(std::string_view text, const ChartPtr& chart) {
  const auto j = parse_doc(text, "jet_field", chart);
  const unsigned order = read_unsigned(j, "", "order");
  const auto& comps = read_array(j, "", "components");
  if (comps.size() != chart->n()) bad("components", "expected one component per parameter");
  std::vector<Jet> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = "components[" + std::to_string(i) + "]";
    if (!comps[i].is_array()) bad(p, "expected an array");
    out.push_back(read_jet_terms(comps[i], p, chart, order));
  }
  return JetField(std::move(out));
}

CurrentElem current_from_json(std::string_view text, const ChartPtr& chart) {
  const auto j = parse_doc(text, "current", chart);
  return read_current_terms(read_array(j, "", "terms"), "terms", chart, read_unsigned(j, "", "max_total"));
}

SemiDirectElem semidirect_from_json(std::string_view text, const ChartPtr& chart) {
  const auto j = parse_doc(text, "semidirect", chart);
  const unsigned r = read_unsigned(j, "", "max_total");
  const auto& v = read_array(j, "", "v");
  if (v.size() != chart->n()) bad("v", "expected one coefficient per parameter");
  std::vector<RingElem> coeffs;
  for (std::size_t i = 0; i < v.size(); ++i) coeffs.push_back(read_ring(v[i], "v[" + std::to_string(i) + "]", chart));
  return SemiDirectElem(VectorField(chart, std::move(coeffs)), read_current_terms(read_array(j, "", "l"), "l", chart, r));
}

TensorElem tensor_from_json(std::string_view text, const ChartPtr& chart) {
  const auto j = parse_doc(text, "tensor", chart);
  const unsigned r = read_unsigned(j, "", "max_total");
  const auto& terms = read_array(j, "", "terms");
  TensorElem out(chart, r);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    const MultiIndex d = read_index(member(t, p, "d"), p + ".d", chart->n());
    PBWMonomial word;
    const auto& w = read_array(t, p, "pbw");
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::string wp = p + ".pbw[" + std::to_string(k) + "]";
      const MultiIndex m = read_index(member(w[k], wp, "m"), wp + ".m", chart->n());
      const unsigned dir = read_unsigned(w[k], wp, "dir");
      if (dir >= chart->n() || m.total() == 0 || m.total() > r) bad(wp, "factor outside the truncation");
      word.push_back(LBasis{m, dir});
    }
    if (!is_pbw_sorted(word)) bad(p + ".pbw", "factors are not in PBW order");
    out.add_term(d, word, read_ring(member(t, p, "c"), p + ".c", chart));
  }
  return out;
}

DiffOp diff_op_from_json(std::string_view text, const ChartPtr& chart) {
  const auto j = parse_doc(text, "diff_op", chart);
  const auto& terms = read_array(j, "", "terms");
  DiffOp out(chart);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "terms[" + std::to_string(i) + "]";
    out.add_term(read_index(member(terms[i], p, "d"), p + ".d", chart->n()),
                 read_ring(member(terms[i], p, "c"), p + ".c", chart));
  }
  return out;
}

}  // namespace jetalg
