#include <gtest/gtest.h>

#include "helpers.hpp"
#include "jetalg/sampler.hpp"
#include "jetalg/serialize.hpp"
#include "jetalg/suites.hpp"

using namespace jetalg;
using namespace jetalg::test;

namespace {

ParseError parse_failure(std::string_view src, const ChartPtr& c) {
  try {
    parse_expression(src, c);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted '" << src << "'";
  return ParseError(ParseError::Kind::Syntax, 0, "", "");
}

std::string data(const std::string& rel) { return std::string(JETALG_DATA) + "/" + rel; }

}  // namespace

TEST(Expression, Examples) {
  const auto a = fixture("affine1");
  EXPECT_EQ(E(a, "x^2 + 1"), a->element(parse_poly("x^2 + 1", a->vars())));
  const auto e = fixture("elliptic");
  EXPECT_EQ(E(e, "y*y"), E(e, "x^3 - x + 1"));
  const ParseError err = parse_failure("1/(x+1)", fixture("laurent"));
  EXPECT_EQ(err.kind(), ParseError::Kind::IllegalDenominator);
}

TEST(Expression, PrecedenceAndAssociativity) {
  const auto a = fixture("affine1");
  EXPECT_EQ(E(a, "2 - 3 - 4"), a->constant(Rational(-5)));
  EXPECT_EQ(E(a, "12/3/2"), a->constant(Rational(2)));
  EXPECT_EQ(E(a, "-x^2"), -E(a, "x*x"));
  EXPECT_EQ(E(a, "2*x^3 + 3/4"), E(a, "(3 + 8*x^3)/4"));
  EXPECT_EQ(E(a, "(x+1)^2"), E(a, "x^2 + 2*x + 1"));
}

TEST(Expression, InverseForms) {
  const auto e = fixture("elliptic");
  EXPECT_EQ(E(e, "inv(y)"), E(e, "1/y"));
  EXPECT_EQ(E(e, "y^-2"), E(e, "1/(x^3 - x + 1)"));
  EXPECT_EQ(parse_failure("inv(x)", e).kind(), ParseError::Kind::IllegalDenominator);
}

TEST(Expression, Errors) {
  const auto a = fixture("affine1");
  const ParseError s = parse_failure("x + * 2", a);
  EXPECT_EQ(s.kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(s.position(), 4u);
  const ParseError u = parse_failure("x + z", a);
  EXPECT_EQ(u.kind(), ParseError::Kind::UnknownSymbol);
  EXPECT_EQ(u.symbol(), "z");
  EXPECT_EQ(parse_failure("(x + 1", a).kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_failure("x 2", a).kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_failure("", a).kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_failure("1/0", a).kind(), ParseError::Kind::IllegalDenominator);
}

TEST(TextInput, FieldsWordsAndIndices) {
  const auto a2 = fixture("affine2");
  EXPECT_EQ(parse_vector_field(" x1 ; x2^2", a2), VectorField(a2, {E(a2, "x1"), E(a2, "x2^2")}));
  EXPECT_EQ(parse_multi_index("2, 0", 2), (MultiIndex{2, 0}));
  EXPECT_THROW(parse_multi_index("2", 2), ParseError);
  const AVWord w = parse_av_word("fun:x1 | vf:1;x1", a2);
  ASSERT_EQ(w.factors.size(), 2u);
  EXPECT_EQ(parse_av_word(w.to_string(), a2).to_string(), w.to_string());
  try {
    parse_vector_field("x1; q", a2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnknownSymbol);
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Loader, ChartsFromFiles) {
  const ChartPtr e = load_chart(data("charts/elliptic.json"));
  EXPECT_EQ(e->name(), "elliptic");
  EXPECT_EQ(e->num_gens(), 1u);
  EXPECT_EQ(load_chart("@laurent")->name(), "laurent");
  EXPECT_THROW(load_chart(data("charts/no_such_chart.json")), Error);
  EXPECT_THROW(load_chart("@no_such_fixture"), Error);
}

TEST(Loader, MissingDenominatorIsASchemaError) {
  try {
    parse_chart(R"({"name":"c","params":["x"]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "denominator");
  }
}

TEST(Loader, SchemaIssuesAreItemized) {
  try {
    parse_chart(R"({"name":3,"params":"x","alg_gens":[{"name":"y"}]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_GE(e.issues().size(), 3u);
  }
  EXPECT_THROW(parse_chart("{not json"), SchemaError);
}

TEST(Loader, SemanticErrorsAreDelegated) {
  EXPECT_THROW(parse_chart(R"({"name":"c","params":["x"],"alg_gens":[{"name":"y","degree":2,"rhs":"x^3"}],"denominator":"1"})"),
               ChartError);
}

TEST(Loader, Atlases) {
  const Atlas p = load_atlas(data("atlases/p1.json"));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.transition_keys().size(), 6u);
  EXPECT_EQ(p.triples().size(), 6u);
  const Atlas s = load_atlas("@plane_shear");
  EXPECT_EQ(s.charts().front()->n(), 2u);
}

TEST(Loader, AtlasWithBadTransitionIsRejected) {
  const std::string text = R"({
    "name": "bad",
    "charts": [{"name": "A", "params": ["x"], "denominator": "1"},
               {"name": "B", "params": ["y"], "denominator": "1"}],
    "transitions": [{"from": "A", "to": "B", "overlap": "B", "source_overlap": "A", "G": ["y^2"], "H": ["x"]}],
    "triples": []
  })";
  EXPECT_THROW(parse_atlas(text), TransitionError);
}

TEST(Serialize, RoundTrips) {
  const auto e = fixture("elliptic");
  const unsigned k = 3;
  const Jet u = jet_of(E(e, "x*y + 1/y"), k);
  EXPECT_EQ(jet_from_json(to_json(u), e), u);
  const JetField jf = jf_from_pair(E(e, "x"), V(e, "y^3/2"), k) + delta(E(e, "y"), k) * jf_from_pair(e->one(), V(e, "x"), k);
  EXPECT_EQ(jet_field_from_json(to_json(jf, 2), e), jf);
  const SemiDirectElem p = phi(jf);
  EXPECT_EQ(current_from_json(to_json(p.l_part), e), p.l_part);
  EXPECT_EQ(semidirect_from_json(to_json(p), e), p);
  const TensorElem t = av_to_tensor(parse_av_word("vf:x*y | fun:1/y | vf:y", e), 2);
  EXPECT_EQ(tensor_from_json(to_json(t), e), t);
  const DiffOp d = dop_mul(DiffOp::from_field(V(e, "y")), DiffOp::from_field(V(e, "x^2")));
  EXPECT_EQ(diff_op_from_json(to_json(d), e), d);
}

TEST(Serialize, RoundTripsSampledValues) {
  const auto e = fixture("elliptic");
  for (std::uint64_t s = 0; s < 25; ++s) {
    Rng rng(s);
    const JetField u = random_jet_field(rng, e, 4);
    EXPECT_EQ(jet_field_from_json(to_json(u), e), u);
    const SemiDirectElem p = random_semidirect(rng, e, 3);
    EXPECT_EQ(semidirect_from_json(to_json(p), e), p);
  }
}

TEST(Serialize, RejectsMismatchedDocuments) {
  const auto e = fixture("elliptic");
  const std::string doc = to_json(jet_of(E(e, "y"), 2));
  EXPECT_THROW(jet_from_json(doc, fixture("laurent")), SchemaError);
  EXPECT_THROW(jet_field_from_json(doc, e), SchemaError);
  EXPECT_THROW(jet_from_json(R"({"kind":"jet","chart":"elliptic","order":1,"terms":[{"t":[2],"c":"1"}]})", e),
               SchemaError);
}

TEST(Sampler, DeterministicAndBounded) {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(11);
  for (int i = 0; i < 1000; ++i) {
    const long v = r.uniform(-3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
  }
  EXPECT_EQ(case_seed(42, "taylor/elliptic/k1/0"), case_seed(42, "taylor/elliptic/k1/0"));
  EXPECT_NE(case_seed(42, "taylor/elliptic/k1/0"), case_seed(43, "taylor/elliptic/k1/0"));
  EXPECT_NE(case_seed(42, "taylor/elliptic/k1/0"), case_seed(42, "taylor/elliptic/k1/1"));
}

TEST(Suites, ReportsAreDeterministic) {
  SuiteOptions opts;
  opts.cases = 4;
  opts.threads = 3;
  const std::string first = run_suite("smash-bracket", opts).to_json();
  opts.threads = 1;
  EXPECT_EQ(run_suite("smash-bracket", opts).to_json(), first);
  opts.seed = 7;
  EXPECT_NE(run_suite("smash-bracket", opts).to_json(), first);
}

TEST(Suites, SingleCaseRerun) {
  SuiteOptions opts;
  opts.cases = 3;
  const Report full = run_suite("jet-hom", opts);
  ASSERT_FALSE(full.checks.empty());
  const CheckRecord& pick = full.checks[5];
  opts.case_id = pick.id;
  const Report one = run_suite("jet-hom", opts);
  ASSERT_EQ(one.checks.size(), 1u);
  EXPECT_EQ(one.checks[0].id, pick.id);
  EXPECT_EQ(one.checks[0].pass, pick.pass);
  EXPECT_NE(pick.repro.find("--case " + pick.id), std::string::npos);
  opts.case_id = "jet-hom/none/0";
  EXPECT_THROW(run_suite("jet-hom", opts), SuiteError);
}

TEST(Suites, UnknownSuite) { EXPECT_THROW(run_suite("no-such-suite"), SuiteError); }

TEST(Suites, NamesCoverTheRunner) {
  const auto& names = suite_names();
  for (const char* n : {"taylor", "jet-hom", "smash-bracket", "iso-roundtrip", "iso-hom", "localization", "pbw",
                        "av-tensor", "transition", "cocycle", "all"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}

TEST(Report, JsonLayout) {
  Report r;
  r.suite = "demo";
  r.seed = 5;
  r.inputs = {"chart:affine1"};
  r.checks.push_back({"demo/a", "x = x", {{"k", "1"}}, true, "jetalg verify demo --case demo/a", ""});
  r.checks.push_back({"demo/b", "x = y", {{"k", "2"}}, false, "jetalg verify demo --case demo/b", "x != y"});
  const std::string j = r.to_json();
  EXPECT_NE(j.find("\"status\": \"fail\""), std::string::npos);
  EXPECT_NE(j.find("\"repro\": \"jetalg verify demo --case demo/b\""), std::string::npos);
  EXPECT_EQ(j.find("jetalg verify demo --case demo/a"), std::string::npos);
  EXPECT_NE(j.find("\"failed\": 1"), std::string::npos);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.to_text().find("FAIL demo/b"), std::string::npos);
}
