#include "jetalg/loader.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "jetalg/expression.hpp"
#include "jetalg/fixtures.hpp"

namespace jetalg {

using nlohmann::json;

namespace {

std::string join_issues(const std::vector<SchemaError::Issue>& issues) {
  std::string out = "schema error";
  for (const auto& i : issues) out += "\n  " + i.path + ": " + i.message;
  return out;
}

std::string join_path(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

std::string index_path(const std::string& prefix, std::size_t i) { return prefix + "[" + std::to_string(i) + "]"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError({{"$", std::string("invalid JSON: ") + e.what()}});
  }
}

class Collector {
 public:
  void add(std::string path, std::string message) { issues_.push_back({std::move(path), std::move(message)}); }
  bool empty() const { return issues_.empty(); }
  void throw_if_any() const {
    if (!issues_.empty()) throw SchemaError(issues_);
  }

  const json* field(const json& obj, const std::string& prefix, const std::string& key, bool required = true) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) add(join_path(prefix, key), "missing required field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string_field(const json& obj, const std::string& prefix, const std::string& key,
                                          bool required = true) {
    const json* v = field(obj, prefix, key, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      add(join_path(prefix, key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<std::vector<std::string>> string_list(const json& obj, const std::string& prefix,
                                                      const std::string& key, bool required = true) {
    const json* v = field(obj, prefix, key, required);
    if (!v) return std::nullopt;
    if (!v->is_array()) {
      add(join_path(prefix, key), "expected an array of strings");
      return std::nullopt;
    }
    std::vector<std::string> out;
    bool ok = true;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_string()) {
        add(index_path(join_path(prefix, key), i), "expected a string");
        ok = false;
      } else {
        out.push_back((*v)[i].get<std::string>());
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  const std::vector<SchemaError::Issue>& issues() const { return issues_; }

 private:
  std::vector<SchemaError::Issue> issues_;
};

std::optional<Poly> poly_field(Collector& col, const std::string& path, const std::string& text, const VarList& vars) {
  try {
    return parse_poly(text, vars);
  } catch (const ParseError& e) {
    col.add(path, e.what());
    return std::nullopt;
  }
}

std::optional<ChartSpec> chart_spec_from(const json& obj, const std::string& prefix, Collector& col) {
  if (!obj.is_object()) {
    col.add(prefix.empty() ? "$" : prefix, "expected an object");
    return std::nullopt;
  }
  const std::size_t before = col.issues().size();
  ChartSpec spec;
  auto name = col.string_field(obj, prefix, "name");
  auto params = col.string_list(obj, prefix, "params");
  auto denominator = col.string_field(obj, prefix, "denominator");

  struct RawGen {
    std::string name;
    unsigned degree;
    std::string rhs;
  };
  std::vector<RawGen> gens;
  if (const json* g = col.field(obj, prefix, "alg_gens", false)) {
    const std::string gpath = join_path(prefix, "alg_gens");
    if (!g->is_array()) {
      col.add(gpath, "expected an array");
    } else {
      for (std::size_t i = 0; i < g->size(); ++i) {
        const std::string ipath = index_path(gpath, i);
        const json& item = (*g)[i];
        if (!item.is_object()) {
          col.add(ipath, "expected an object");
          continue;
        }
        auto gname = col.string_field(item, ipath, "name");
        auto rhs = col.string_field(item, ipath, "rhs");
        unsigned degree = 0;
        if (const json* d = col.field(item, ipath, "degree")) {
          if (!d->is_number_unsigned()) {
            col.add(join_path(ipath, "degree"), "expected a non-negative integer");
          } else {
            degree = d->get<unsigned>();
          }
        }
        if (gname && rhs) gens.push_back({*gname, degree, *rhs});
      }
    }
  }
  if (col.issues().size() != before) return std::nullopt;

  spec.name = *name;
  spec.params = *params;
  for (const auto& g : gens) spec.alg_gens.push_back(AlgGenSpec{g.name, g.degree, Poly()});
  const VarList vars = make_var_list(spec.variable_names());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto rhs = poly_field(col, join_path(index_path(join_path(prefix, "alg_gens"), i), "rhs"), gens[i].rhs, vars);
    if (rhs) spec.alg_gens[i].rhs = *rhs;
  }
  auto den = poly_field(col, join_path(prefix, "denominator"), *denominator, vars);
  if (den) spec.denominator = *den;
  if (col.issues().size() != before) return std::nullopt;
  return spec;
}

std::vector<RingElem> parse_images(Collector& col, const std::string& path, const std::vector<std::string>& texts,
                                   const ChartPtr& chart) {
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_expression(texts[i], chart));
    } catch (const ParseError& e) {
      col.add(index_path(path, i), e.what());
    }
  }
  return out;
}

}  // namespace

SchemaError::SchemaError(std::vector<Issue> issues) : Error(join_issues(issues)), issues_(std::move(issues)) {}

ChartSpec parse_chart_spec(std::string_view json_text) {
  const json doc = parse_json(json_text);
  Collector col;
  auto spec = chart_spec_from(doc, "", col);
  col.throw_if_any();
  return *spec;
}

ChartPtr parse_chart(std::string_view json_text) { return Chart::create(parse_chart_spec(json_text)); }

Atlas parse_atlas(std::string_view json_text) {
  const json doc = parse_json(json_text);
  Collector col;
  if (!doc.is_object()) {
    col.add("$", "expected an object");
    col.throw_if_any();
  }
  auto name = col.string_field(doc, "", "name");

  auto read_charts = [&](const std::string& key, bool required) {
    std::vector<ChartSpec> specs;
    const json* arr = col.field(doc, "", key, required);
    if (!arr) return specs;
    if (!arr->is_array()) {
      col.add(key, "expected an array");
      return specs;
    }
    for (std::size_t i = 0; i < arr->size(); ++i)
      if (auto s = chart_spec_from((*arr)[i], index_path(key, i), col)) specs.push_back(std::move(*s));
    return specs;
  };
  const std::vector<ChartSpec> chart_specs = read_charts("charts", true);
  const std::vector<ChartSpec> overlap_specs = read_charts("overlaps", false);
  const json* transitions = col.field(doc, "", "transitions");
  if (transitions && !transitions->is_array()) col.add("transitions", "expected an array");
  const json* triples = col.field(doc, "", "triples", false);
  if (triples && !triples->is_array()) col.add("triples", "expected an array");
  col.throw_if_any();

  // Semantic validation of each chart is delegated to Chart::create.
  std::vector<ChartPtr> charts;
  std::map<std::string, ChartPtr> by_name;
  auto register_chart = [&](const ChartSpec& spec, const std::string& path) {
    ChartPtr c = Chart::create(spec);
    if (!by_name.emplace(c->name(), c).second) col.add(path, "duplicate chart name '" + c->name() + "'");
    return c;
  };
  for (std::size_t i = 0; i < chart_specs.size(); ++i)
    charts.push_back(register_chart(chart_specs[i], index_path("charts", i)));
  for (std::size_t i = 0; i < overlap_specs.size(); ++i) register_chart(overlap_specs[i], index_path("overlaps", i));
  col.throw_if_any();

  auto lookup = [&](const std::optional<std::string>& n, const std::string& path) -> ChartPtr {
    if (!n) return nullptr;
    auto it = by_name.find(*n);
    if (it == by_name.end()) {
      col.add(path, "unknown chart '" + *n + "'");
      return nullptr;
    }
    return it->second;
  };

  std::vector<TransitionPair> pairs;
  if (transitions) {
    for (std::size_t i = 0; i < transitions->size(); ++i) {
      const std::string path = index_path("transitions", i);
      const json& t = (*transitions)[i];
      if (!t.is_object()) {
        col.add(path, "expected an object");
        continue;
      }
      ChartPtr from = lookup(col.string_field(t, path, "from"), join_path(path, "from"));
      ChartPtr to = lookup(col.string_field(t, path, "to"), join_path(path, "to"));
      ChartPtr ov = lookup(col.string_field(t, path, "overlap"), join_path(path, "overlap"));
      ChartPtr sov = lookup(col.string_field(t, path, "source_overlap"), join_path(path, "source_overlap"));
      auto g = col.string_list(t, path, "G");
      auto h = col.string_list(t, path, "H");
      auto g_gens = col.string_list(t, path, "G_gens", false);
      auto h_gens = col.string_list(t, path, "H_gens", false);
      if (!from || !to || !ov || !sov || !g || !h) continue;
      std::vector<std::string> g_all = *g, h_all = *h;
      if (g_gens) g_all.insert(g_all.end(), g_gens->begin(), g_gens->end());
      if (h_gens) h_all.insert(h_all.end(), h_gens->begin(), h_gens->end());
      if (g->size() != from->n()) col.add(join_path(path, "G"), "expected one expression per source parameter");
      if (h->size() != to->n()) col.add(join_path(path, "H"), "expected one expression per target parameter");
      if (g_all.size() != from->num_vars()) col.add(join_path(path, "G_gens"), "expected one image per source generator");
      if (h_all.size() != to->num_vars()) col.add(join_path(path, "H_gens"), "expected one image per target generator");
      const std::size_t before = col.issues().size();
      auto g_img = parse_images(col, join_path(path, "G"), g_all, ov);
      auto h_img = parse_images(col, join_path(path, "H"), h_all, sov);
      if (col.issues().size() != before || g_img.size() != from->num_vars() || h_img.size() != to->num_vars()) continue;
      pairs.emplace_back(from, to, ov, sov, std::move(g_img), std::move(h_img));
    }
  }

  std::vector<Atlas::Triple> triple_list;
  auto chart_pos = [&](const std::string& n) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < charts.size(); ++k)
      if (charts[k]->name() == n) return k;
    return std::nullopt;
  };
  if (triples) {
    for (std::size_t i = 0; i < triples->size(); ++i) {
      const std::string path = index_path("triples", i);
      const json& t = (*triples)[i];
      auto names = col.string_list(t, path, "charts");
      ChartPtr ov = lookup(col.string_field(t, path, "overlap"), join_path(path, "overlap"));
      if (!names || !ov) continue;
      if (names->size() != 3) {
        col.add(join_path(path, "charts"), "expected three chart names");
        continue;
      }
      Atlas::Triple tr{{0, 0, 0}, ov};
      bool ok = true;
      for (std::size_t k = 0; k < 3; ++k) {
        auto pos = chart_pos((*names)[k]);
        if (!pos) {
          col.add(index_path(join_path(path, "charts"), k), "unknown chart '" + (*names)[k] + "'");
          ok = false;
        } else {
          tr.charts[k] = *pos;
        }
      }
      if (ok) triple_list.push_back(std::move(tr));
    }
  }
  col.throw_if_any();

  for (const auto& tp : pairs) validate_transition(tp);
  return Atlas(*name, std::move(charts), std::move(pairs), std::move(triple_list));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ChartPtr load_chart(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') return fixtures::chart(ref.substr(1));
  return parse_chart(read_text_file(ref));
}

Atlas load_atlas(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') return fixtures::atlas(ref.substr(1));
  return parse_atlas(read_text_file(ref));
}

}  // namespace jetalg
