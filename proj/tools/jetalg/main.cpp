#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jetalg/diff_op.hpp"
#include "jetalg/expression.hpp"
#include "jetalg/fixtures.hpp"
#include "jetalg/loader.hpp"
#include "jetalg/serialize.hpp"
#include "jetalg/suites.hpp"
#include "jetalg/text_input.hpp"
#include "jetalg/transition.hpp"

namespace {

using namespace jetalg;
using nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Common {
  std::string chart;
  std::string atlas;
  unsigned order = 3;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* sub, Common& c, bool chart, bool atlas, unsigned default_order) {
  c.order = default_order;
  if (chart) sub->add_option("--chart", c.chart, "Chart file or @fixture (e.g. @elliptic)")->required();
  if (atlas) sub->add_option("--atlas", c.atlas, "Atlas file or @fixture (e.g. @p1)")->required();
  sub->add_option("--order,-k", c.order, "Jet order or truncation degree")->capture_default_str();
  sub->add_option("--seed", c.seed, "Seed for sampled inputs")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_option("--out,-o", c.out, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write '" + c.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

bool json(const Common& c) { return c.format == "json"; }

std::string field_json(const VectorField& v, int indent = 2) {
  ordered_json j;
  j["kind"] = "vector_field";
  j["chart"] = v.chart()->name();
  ordered_json coeffs = ordered_json::array();
  for (const auto& a : v.coeffs()) coeffs.push_back(a.to_string());
  j["coeffs"] = coeffs;
  return j.dump(indent);
}

/// A jet field given inline as "a # c1; c2" or as a jet_field JSON file.
JetField read_jet_field(const std::string& arg, const ChartPtr& chart, unsigned k) {
  if (arg.find('#') != std::string::npos) return parse_smash_pair(arg, chart, k);
  return jet_field_from_json(read_text_file(arg), chart);
}

DiffOp read_factor(const std::string& arg, const ChartPtr& chart) {
  if (arg.starts_with("fun:")) return DiffOp::function(parse_expression(arg.substr(4), chart));
  if (arg.starts_with("vf:")) return DiffOp::from_field(parse_vector_field(arg.substr(3), chart));
  return diff_op_from_json(read_text_file(arg), chart);
}

std::size_t chart_in(const Atlas& atlas, const std::string& name) {
  auto i = atlas.chart_index(name);
  if (!i) throw Error("atlas '" + atlas.name() + "' has no chart '" + name + "'");
  return *i;
}

std::vector<MultiIndex> fibre_indices(std::size_t n, unsigned r, const std::string& arg) {
  if (!arg.empty()) return {parse_multi_index(arg, n)};
  std::vector<MultiIndex> out;
  for (const auto& m : indices_up_to(n, std::min(3u, r)))
    if (m.total() > 0) out.push_back(m);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jet and smash-product computations on affine charts"};
  app.set_version_flag("--version", std::string("jetalg ") + jetalg::version());
  app.require_subcommand(1);

  // validate
  Common validate_opts;
  auto* validate = app.add_subcommand("validate", "Check a chart or atlas definition");
  validate->add_option("--chart", validate_opts.chart, "Chart file or @fixture");
  validate->add_option("--atlas", validate_opts.atlas, "Atlas file or @fixture");
  validate->add_option("--format", validate_opts.format)->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--out,-o", validate_opts.out);
  bool list_fixtures = false;
  validate->add_flag("--list", list_fixtures, "List built-in fixtures");

  // jet
  Common jet_opts;
  std::string jet_expr, jet_left = "1";
  auto* jet = app.add_subcommand("jet", "Jet of g (x) f in t-coordinates");
  add_common(jet, jet_opts, true, false, 3);
  jet->add_option("--expr,-f", jet_expr, "Second factor f")->required();
  jet->add_option("--left,-g", jet_left, "First factor g")->capture_default_str();

  // delta
  Common delta_opts;
  std::string delta_expr;
  auto* delta_cmd = app.add_subcommand("delta", "Jet of delta(f) = f (x) 1 - 1 (x) f");
  add_common(delta_cmd, delta_opts, true, false, 3);
  delta_cmd->add_option("--expr,-f", delta_expr, "Function f")->required();

  // bracket
  Common bracket_opts;
  std::vector<std::string> bracket_vf, bracket_jf;
  auto* bracket = app.add_subcommand("bracket", "Bracket of two vector fields or two jet fields");
  add_common(bracket, bracket_opts, true, false, 3);
  bracket->add_option("--vf", bracket_vf, "Vector field 'c1; c2; ...' (give two)")->expected(2);
  bracket->add_option("--jf", bracket_jf, "Jet field 'a # c1; ...' or jet_field JSON file (give two)")->expected(2);

  // phi / psi
  Common phi_opts;
  std::string phi_in;
  auto* phi_cmd = app.add_subcommand("phi", "Jet field to vector field plus current element");
  add_common(phi_cmd, phi_opts, true, false, 3);
  phi_cmd->add_option("--jf", phi_in, "Jet field 'a # c1; ...' or jet_field JSON file")->required();

  Common psi_opts;
  std::string psi_in;
  auto* psi_cmd = app.add_subcommand("psi", "Vector field plus current element to jet field");
  add_common(psi_cmd, psi_opts, true, false, 3);
  psi_cmd->add_option("--in", psi_in, "semidirect or current JSON file")->required();

  // localize
  Common loc_opts;
  std::string loc_vf, loc_g;
  unsigned loc_m = 1;
  auto* localize = app.add_subcommand("localize", "Expansion of 1 # (1/g) eta in powers of delta(g)");
  add_common(localize, loc_opts, true, false, 3);
  localize->add_option("--vf", loc_vf, "Vector field eta 'c1; ...'")->required();
  localize->add_option("--g", loc_g, "Invertible element g (default: the chart denominator)");
  localize->add_option("--terms,-m", loc_m, "Last power of delta(g) in the partial sum")->capture_default_str();

  // dop-mul
  Common dop_opts;
  std::vector<std::string> dop_factors;
  auto* dop = app.add_subcommand("dop-mul", "Normal-ordered product of differential operators");
  add_common(dop, dop_opts, true, false, 3);
  dop->add_option("factors", dop_factors, "Factors 'fun:f', 'vf:c1;...' or diff_op JSON files")->required();

  // av-map
  Common av_opts;
  std::string av_word;
  auto* av = app.add_subcommand("av-map", "Image of a word of functions and vector fields in D (x) U(L)");
  add_common(av, av_opts, true, false, 2);
  av->add_option("--word,-w", av_word, "Word 'fun:f | vf:c1;c2 | ...'")->required();

  // transition
  Common tr_opts;
  std::string tr_from, tr_to, tr_m, tr_method = "both";
  std::size_t tr_p = 0;
  auto* transition = app.add_subcommand("transition", "Change of chart on X^m d/dX_p");
  add_common(transition, tr_opts, false, true, 4);
  transition->add_option("--from", tr_from, "Source chart")->required();
  transition->add_option("--to", tr_to, "Target chart")->required();
  transition->add_option("--m", tr_m, "Multi-index, e.g. 2 or 1,0 (default: all |m| <= 3)");
  transition->add_option("--p", tr_p, "Fibre direction")->capture_default_str();
  transition->add_option("--method", tr_method, "formula, iso, or both (compares the two)")
      ->check(CLI::IsMember({"formula", "iso", "both"}))
      ->capture_default_str();

  // cocycle
  Common co_opts;
  std::vector<std::string> co_triple;
  std::string co_m;
  auto* cocycle = app.add_subcommand("cocycle", "Check T(i->l) = T(j->l) o T(i->j)");
  add_common(cocycle, co_opts, false, true, 4);
  cocycle->add_option("--triple", co_triple, "Three chart names i j l")->expected(3)->required();
  cocycle->add_option("--m", co_m, "Multi-index (default: all |m| <= 3)");

  // verify
  Common verify_opts;
  std::string suite;
  std::vector<std::string> verify_charts;
  std::optional<unsigned> verify_cases, verify_order;
  std::string verify_case;
  unsigned verify_threads = 0;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--chart", verify_charts, "Chart file or @fixture (repeatable; default: suite fixtures)");
  verify->add_option("--atlas", verify_opts.atlas, "Atlas file or @fixture (default: suite fixtures)");
  verify->add_option("--seed", verify_opts.seed, "Seed")->capture_default_str();
  verify->add_option("--order,-k", verify_order, "Largest jet order or truncation degree");
  verify->add_option("--cases", verify_cases, "Samples per check group");
  verify->add_option("--case", verify_case, "Run only this case id");
  verify->add_option("--threads", verify_threads, "Worker threads (0: all cores)");
  verify->add_option("--format", verify_opts.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--out,-o", verify_opts.out, "Write the report to this file");
  verify->add_flag("--verbose,-v", verbose, "List passing checks in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) {
      if (list_fixtures) {
        std::string text;
        for (const auto& n : fixtures::chart_names()) text += "chart @" + n + "\n";
        for (const auto& n : fixtures::atlas_names()) text += "atlas @" + n + "\n";
        emit(validate_opts, text);
        return kPass;
      }
      if (validate_opts.chart.empty() == validate_opts.atlas.empty()) {
        std::cerr << "validate: give exactly one of --chart or --atlas\n";
        return kInputError;
      }
      ordered_json j;
      std::string text;
      if (!validate_opts.chart.empty()) {
        const ChartPtr c = load_chart(validate_opts.chart);
        std::ostringstream os;
        os << "chart " << c->name() << ": " << c->n() << " parameter(s), " << c->num_gens()
           << " generator(s), denominator " << c->element(c->denominator()).to_string() << ": valid";
        text = os.str();
        j = {{"kind", "chart"}, {"name", c->name()}, {"params", c->spec().params}, {"valid", true}};
      } else {
        const Atlas a = load_atlas(validate_opts.atlas);
        std::ostringstream os;
        os << "atlas " << a.name() << ": " << a.size() << " chart(s), " << a.transition_keys().size()
           << " transition(s), " << a.triples().size() << " triple overlap(s): valid";
        text = os.str();
        std::vector<std::string> names;
        for (const auto& c : a.charts()) names.push_back(c->name());
        j = {{"kind", "atlas"}, {"name", a.name()}, {"charts", names}, {"valid", true}};
      }
      emit(validate_opts, json(validate_opts) ? j.dump(2) : text);
      return kPass;
    }

    if (*jet) {
      const ChartPtr c = load_chart(jet_opts.chart);
      const Jet u = jet_of_pair(parse_expression(jet_left, c), parse_expression(jet_expr, c), jet_opts.order);
      emit(jet_opts, json(jet_opts) ? to_json(u, 2) : u.to_string());
      return kPass;
    }

    if (*delta_cmd) {
      const ChartPtr c = load_chart(delta_opts.chart);
      const Jet u = delta(parse_expression(delta_expr, c), delta_opts.order);
      emit(delta_opts, json(delta_opts) ? to_json(u, 2) : u.to_string());
      return kPass;
    }

    if (*bracket) {
      const ChartPtr c = load_chart(bracket_opts.chart);
      if (bracket_vf.empty() == bracket_jf.empty()) {
        std::cerr << "bracket: give two --vf or two --jf operands\n";
        return kInputError;
      }
      if (!bracket_vf.empty()) {
        const VectorField v = vf_bracket(parse_vector_field(bracket_vf[0], c), parse_vector_field(bracket_vf[1], c));
        emit(bracket_opts, json(bracket_opts) ? field_json(v) : v.to_string());
      } else {
        const JetField u = jf_bracket(read_jet_field(bracket_jf[0], c, bracket_opts.order),
                                      read_jet_field(bracket_jf[1], c, bracket_opts.order));
        emit(bracket_opts, json(bracket_opts) ? to_json(u, 2) : u.to_string());
      }
      return kPass;
    }

    if (*phi_cmd) {
      const ChartPtr c = load_chart(phi_opts.chart);
      const SemiDirectElem p = phi(read_jet_field(phi_in, c, phi_opts.order));
      emit(phi_opts, json(phi_opts) ? to_json(p, 2) : p.to_string());
      return kPass;
    }

    if (*psi_cmd) {
      const ChartPtr c = load_chart(psi_opts.chart);
      const std::string text = read_text_file(psi_in);
      SemiDirectElem p;
      if (text.find("\"semidirect\"") != std::string::npos) {
        p = semidirect_from_json(text, c);
      } else {
        CurrentElem l = current_from_json(text, c);
        p = SemiDirectElem(VectorField(c), std::move(l));
      }
      const JetField u = psi(p, std::max(psi_opts.order, p.max_total()));
      emit(psi_opts, json(psi_opts) ? to_json(u, 2) : u.to_string());
      return kPass;
    }

    if (*localize) {
      const ChartPtr c = load_chart(loc_opts.chart);
      const RingElem g = loc_g.empty() ? c->element(c->denominator()) : parse_expression(loc_g, c);
      const auto inv_g = try_inverse(g);
      if (!inv_g) throw Error("g = " + g.to_string() + " is not invertible on chart " + c->name());
      const VectorField eta = parse_vector_field(loc_vf, c);
      const unsigned k = loc_opts.order;
      const JetField partial = localization_partial_sum(g, eta, loc_m, k);
      const JetField defect = jf_from_pair(c->one(), *inv_g * eta, k) - partial;
      const JetField remainder = localization_remainder(g, eta, loc_m, k);
      const bool order_ok = jf_order(defect) >= loc_m + 1;
      const bool closed_ok = defect == remainder;
      if (json(loc_opts)) {
        ordered_json j;
        j["kind"] = "localization";
        j["chart"] = c->name();
        j["g"] = g.to_string();
        j["m"] = loc_m;
        j["order"] = k;
        j["partial_sum"] = ordered_json::parse(to_json(partial));
        j["defect"] = ordered_json::parse(to_json(defect));
        j["defect_order"] = jf_order(defect);
        j["order_check"] = order_ok;
        j["closed_form_check"] = closed_ok;
        emit(loc_opts, j.dump(2));
      } else {
        std::ostringstream os;
        os << "partial sum: " << partial.to_string() << "\n"
           << "defect:      " << defect.to_string() << "\n"
           << "defect order " << jf_order(defect) << (order_ok ? " >= " : " < ") << loc_m + 1 << "\n"
           << "closed-form remainder " << (closed_ok ? "matches" : "differs") << "\n";
        emit(loc_opts, os.str());
      }
      return order_ok && closed_ok ? kPass : kCheckFailed;
    }

    if (*dop) {
      const ChartPtr c = load_chart(dop_opts.chart);
      DiffOp prod = DiffOp::identity(c);
      for (const auto& f : dop_factors) prod = dop_mul(prod, read_factor(f, c));
      emit(dop_opts, json(dop_opts) ? to_json(prod, 2) : prod.to_string());
      return kPass;
    }

    if (*av) {
      const ChartPtr c = load_chart(av_opts.chart);
      const TensorElem t = av_to_tensor(parse_av_word(av_word, c), av_opts.order);
      emit(av_opts, json(av_opts) ? to_json(t, 2) : t.to_string());
      return kPass;
    }

    if (*transition) {
      const Atlas a = load_atlas(tr_opts.atlas);
      const std::size_t from = chart_in(a, tr_from), to = chart_in(a, tr_to);
      if (from != to && !a.has_transition(from, to))
        throw Error("atlas '" + a.name() + "' has no transition " + tr_from + " -> " + tr_to);
      const TransitionPair& tp = a.transition(from, to);
      if (tr_p >= tp.n()) throw Error("--p must be below " + std::to_string(tp.n()));
      const unsigned r = tr_opts.order;
      bool all_ok = true;
      ordered_json results = ordered_json::array();
      std::ostringstream os;
      for (const auto& m : fibre_indices(tp.n(), r, tr_m)) {
        ordered_json rec;
        rec["m"] = m.to_vector();
        rec["p"] = tr_p;
        os << "X^" << m.to_string() << " d/dX_" << tr_p << ":\n";
        std::optional<CurrentElem> f, i;
        if (tr_method != "iso") f = transition_l(m, tr_p, tp, r);
        if (tr_method != "formula") i = transition_via_iso(m, tr_p, tp, r);
        if (f) {
          os << "  formula: " << f->to_string("Y") << "\n";
          rec["formula"] = ordered_json::parse(to_json(*f));
        }
        if (i) {
          os << "  iso:     " << i->to_string("Y") << "\n";
          rec["iso"] = ordered_json::parse(to_json(*i));
        }
        if (f && i) {
          const bool same = *f == *i;
          all_ok = all_ok && same;
          os << "  " << (same ? "PASS" : "FAIL") << " formula and iso routes agree\n";
          rec["agree"] = same;
        }
        results.push_back(rec);
      }
      if (json(tr_opts)) {
        ordered_json j;
        j["kind"] = "transition";
        j["atlas"] = a.name();
        j["from"] = tr_from;
        j["to"] = tr_to;
        j["overlap"] = tp.overlap()->name();
        j["r"] = r;
        j["method"] = tr_method;
        j["results"] = results;
        emit(tr_opts, j.dump(2));
      } else {
        emit(tr_opts, os.str());
      }
      return all_ok ? kPass : kCheckFailed;
    }

    if (*cocycle) {
      const Atlas a = load_atlas(co_opts.atlas);
      const std::size_t i = chart_in(a, co_triple[0]), j = chart_in(a, co_triple[1]), l = chart_in(a, co_triple[2]);
      const std::size_t n = a.charts()[i]->n();
      bool all_ok = true;
      ordered_json results = ordered_json::array();
      std::ostringstream os;
      for (const auto& m : fibre_indices(n, co_opts.order, co_m)) {
        for (std::size_t p = 0; p < n; ++p) {
          const bool ok = cocycle_check(a, i, j, l, m, p, co_opts.order);
          all_ok = all_ok && ok;
          os << (ok ? "PASS" : "FAIL") << " X^" << m.to_string() << " d/dX_" << p << "\n";
          results.push_back({{"m", m.to_vector()}, {"p", p}, {"status", ok ? "pass" : "fail"}});
        }
      }
      if (json(co_opts)) {
        ordered_json out;
        out["kind"] = "cocycle";
        out["atlas"] = a.name();
        out["triple"] = co_triple;
        out["r"] = co_opts.order;
        out["results"] = results;
        emit(co_opts, out.dump(2));
      } else {
        emit(co_opts, os.str());
      }
      return all_ok ? kPass : kCheckFailed;
    }

    if (*verify) {
      SuiteOptions so;
      so.seed = verify_opts.seed;
      so.charts = verify_charts;
      so.atlas = verify_opts.atlas;
      so.cases = verify_cases;
      so.order = verify_order;
      so.case_id = verify_case;
      so.threads = verify_threads;
      const Report report = run_suite(suite, so);
      emit(verify_opts, json(verify_opts) ? report.to_json() : report.to_text(verbose));
      if (!verify_opts.out.empty() && json(verify_opts)) std::cerr << report.to_text(false);
      return report.ok() ? kPass : kCheckFailed;
    }
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& issue : e.issues()) std::cerr << "  at " << issue.path << ": " << issue.message << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
