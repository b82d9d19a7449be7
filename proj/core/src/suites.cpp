#include "jetalg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "jetalg/expression.hpp"
#include "jetalg/fixtures.hpp"
#include "jetalg/loader.hpp"
#include "jetalg/pbw.hpp"
#include "jetalg/sampler.hpp"
#include "jetalg/transition.hpp"

namespace jetalg {

namespace {

struct CaseOutcome {
  bool pass = true;
  std::string detail;
};

struct Case {
  std::string suite;
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;
  std::function<CaseOutcome(Rng&)> run;
};

using CaseList = std::vector<Case>;

/// Collects failed expectations of one case.
class Verdict {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += what;
    pass_ = false;
  }
  template <class T>
  void expect_eq(const T& lhs, const T& rhs, const std::string& label) {
    if (!(lhs == rhs)) expect(false, label + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
  void note(const std::string& name, const std::string& value) {
    if (!inputs_.empty()) inputs_ += ", ";
    inputs_ += name + "=" + value;
  }
  CaseOutcome done() const { return {pass_, pass_ ? std::string() : "inputs: " + inputs_ + " | " + detail_}; }

 private:
  bool pass_ = true;
  std::string inputs_, detail_;
};

std::string index_tag(const MultiIndex& m) {
  std::string s;
  for (unsigned e : m.to_vector()) s += (s.empty() ? "" : "-") + std::to_string(e);
  return s;
}

std::string fmt_word(const std::vector<LBasis>& w) {
  std::string s;
  for (const auto& b : w) s += (s.empty() ? "" : " ") + b.to_string();
  return s.empty() ? "1" : s;
}

struct Builder {
  const SuiteOptions& opts;
  CaseList& cases;
  std::vector<std::string>& inputs;

  void record_input(const std::string& id) {
    if (std::find(inputs.begin(), inputs.end(), id) == inputs.end()) inputs.push_back(id);
  }

  std::vector<ChartPtr> charts(const std::vector<std::string>& defaults) {
    std::vector<ChartPtr> out;
    if (opts.charts.empty()) {
      for (const auto& n : defaults) out.push_back(fixtures::chart(n));
    } else {
      for (const auto& ref : opts.charts) out.push_back(load_chart(ref));
    }
    for (const auto& c : out) record_input("chart:" + c->name());
    return out;
  }

  std::vector<Atlas> atlases(const std::vector<std::string>& defaults) {
    std::vector<Atlas> out;
    if (opts.atlas.empty()) {
      for (const auto& n : defaults) out.push_back(fixtures::atlas(n));
    } else {
      out.push_back(load_atlas(opts.atlas));
    }
    for (const auto& a : out) record_input("atlas:" + a.name());
    return out;
  }

  unsigned count(unsigned def) const { return opts.cases.value_or(def); }
  unsigned order(unsigned def) const { return opts.order.value_or(def); }

  void add(std::string suite, std::string id, std::string statement,
           std::vector<std::pair<std::string, std::string>> params, std::function<CaseOutcome(Rng&)> run) {
    cases.push_back({std::move(suite), std::move(id), std::move(statement), std::move(params), std::move(run)});
  }
};

const std::vector<std::string> kCharts = {"affine2", "laurent", "elliptic"};

// Chart-ring derivations --------------------------------------------------

void build_derivations(Builder& b) {
  const std::string s = "derivations";
  const unsigned count = b.count(200);
  for (const auto& c : b.charts(kCharts)) {
    const std::string base = s + "/" + c->name();
    for (unsigned idx = 0; idx < count; ++idx) {
      b.add(s, base + "/leibniz/" + std::to_string(idx), "d_i(f g) = f d_i(g) + g d_i(f)", {{"chart", c->name()}},
            [c](Rng& rng) {
              Verdict v;
              const RingElem f = random_element(rng, c), g = random_element(rng, c);
              const std::size_t i = rng.index(c->n());
              v.note("f", f.to_string());
              v.note("g", g.to_string());
              v.note("i", std::to_string(i));
              v.expect_eq(re_derive(i, f * g), f * re_derive(i, g) + g * re_derive(i, f), "leibniz");
              return v.done();
            });
      b.add(s, base + "/commute/" + std::to_string(idx), "d_i d_j f = d_j d_i f", {{"chart", c->name()}},
            [c](Rng& rng) {
              Verdict v;
              const RingElem f = random_element(rng, c);
              const std::size_t i = rng.index(c->n()), j = rng.index(c->n());
              v.note("f", f.to_string());
              v.note("i", std::to_string(i));
              v.note("j", std::to_string(j));
              v.expect_eq(re_derive(i, re_derive(j, f)), re_derive(j, re_derive(i, f)), "commute");
              v.expect_eq(re_derive_multi(MultiIndex::unit(c->n(), i) + MultiIndex::unit(c->n(), j), f),
                          re_derive(i, re_derive(j, f)), "multi");
              return v.done();
            });
      b.add(s, base + "/relation/" + std::to_string(idx),
            "d_i of an unreduced polynomial P equals the chain rule sum_v (dP/dv) d_i(v)", {{"chart", c->name()}},
            [c, idx](Rng& rng) {
              Verdict v;
              Poly p = random_raw_poly(rng, c);
              if (idx == 0 && c->num_gens() > 0) {
                // The first defining relation itself, whose reduction is 0.
                const auto& gen = c->spec().alg_gens.front();
                p = Poly::variable(c->vars(), c->n()).pow(gen.degree) - gen.rhs;
              }
              v.note("P", p.to_string());
              const std::size_t i = rng.index(c->n());
              v.note("i", std::to_string(i));
              RingElem chain = c->zero();
              for (std::size_t var = 0; var < c->num_vars(); ++var)
                chain += c->element(p.partial(var)) * re_derive(i, c->variable(var));
              v.expect_eq(re_derive(i, c->element(p)), chain, "chain rule");
              return v.done();
            });
    }
  }
}

// Jets --------------------------------------------------------------------

/// Fixed inputs tried before the sampled ones: 1/g when the chart is a
/// localization, the first algebraic generator, or x^3 on a plain affine chart.
std::vector<RingElem> taylor_specials(const ChartPtr& c) {
  std::vector<RingElem> out;
  if (c->num_gens() > 0) out.push_back(c->variable(c->n()));
  if (!c->has_trivial_denominator()) out.push_back(RingElem(c, Poly(c->vars(), Rational(1)), 1));
  if (out.empty()) out.push_back(c->param(0).pow(3));
  return out;
}

void build_taylor(Builder& b) {
  const std::string s = "taylor";
  const unsigned count = b.count(100), kmax = b.order(4);
  for (const auto& c : b.charts(kCharts)) {
    const auto specials = std::make_shared<const std::vector<RingElem>>(taylor_specials(c));
    for (unsigned k = 1; k <= kmax; ++k) {
      for (unsigned idx = 0; idx < count; ++idx) {
        b.add(s, s + "/" + c->name() + "/k" + std::to_string(k) + "/" + std::to_string(idx),
              "j(1 (x) f) = sum_{|m|<=k} (d^m f / m!) t^m, and t^m coefficients are recovered by first-factor actions",
              {{"chart", c->name()}, {"k", std::to_string(k)}}, [c, k, idx, specials](Rng& rng) {
                Verdict v;
                const RingElem f = idx < specials->size() ? (*specials)[idx] : random_element(rng, c);
                v.note("f", f.to_string());
                v.expect(taylor_identity_check(f, k), "taylor identity");
                v.expect(taylor_extraction_check(f, k), "coefficient extraction");
                return v.done();
              });
      }
    }
  }
}

void build_jet_hom(Builder& b) {
  const std::string s = "jet-hom";
  const unsigned count = b.count(200), kmax = b.order(4);
  for (const auto& c : b.charts(kCharts)) {
    for (unsigned k = 1; k <= kmax; ++k) {
      for (unsigned idx = 0; idx < count; ++idx) {
        b.add(s, s + "/" + c->name() + "/k" + std::to_string(k) + "/" + std::to_string(idx),
              "j(fg) = j(f) j(g) and j(f + g) = j(f) + j(g) modulo t^(k+1)",
              {{"chart", c->name()}, {"k", std::to_string(k)}}, [c, k](Rng& rng) {
                Verdict v;
                const RingElem f = random_element(rng, c), g = random_element(rng, c);
                v.note("f", f.to_string());
                v.note("g", g.to_string());
                const Jet jf = jet_of(f, k), jg = jet_of(g, k);
                v.expect_eq(jet_of(f * g, k), jet_mul(jf, jg), "multiplicative");
                v.expect_eq(jet_of(f + g, k), jf + jg, "additive");
                return v.done();
              });
      }
    }
  }
}

void build_delta_leibniz(Builder& b) {
  const std::string s = "delta-leibniz";
  const unsigned count = b.count(200), kmax = b.order(4);
  for (const auto& c : b.charts(kCharts)) {
    for (unsigned k = 1; k <= kmax; ++k) {
      for (unsigned idx = 0; idx < count; ++idx) {
        b.add(s, s + "/" + c->name() + "/k" + std::to_string(k) + "/" + std::to_string(idx),
              "delta(fg) = (f (x) 1) delta(g) + delta(f) (1 (x) g); delta(f) has t-order >= 1 with t_i coefficient -d_i f",
              {{"chart", c->name()}, {"k", std::to_string(k)}}, [c, k](Rng& rng) {
                Verdict v;
                const RingElem f = random_element(rng, c), g = random_element(rng, c);
                v.note("f", f.to_string());
                v.note("g", g.to_string());
                const Jet df = delta(f, k);
                v.expect_eq(delta(f * g, k), jet_mul(Jet::constant(f, k), delta(g, k)) + jet_mul(df, jet_of(g, k)),
                            "leibniz");
                v.expect(t_order(df) >= 1, "t-order of delta(f) is 0");
                for (std::size_t i = 0; i < c->n(); ++i)
                  v.expect_eq(df.coeff(MultiIndex::unit(c->n(), i)), -re_derive(i, f), "degree-one coefficient");
                return v.done();
              });
      }
    }
  }
}

// Jet fields --------------------------------------------------------------

unsigned cycle_order(unsigned idx, unsigned kmax) { return 1 + idx % std::max(1u, kmax); }

void build_smash_bracket(Builder& b) {
  const std::string s = "smash-bracket";
  const unsigned count = b.count(200), kmax = b.order(4);
  const unsigned triples = std::max(1u, count / 2);
  for (const auto& c : b.charts(kCharts)) {
    const std::string base = s + "/" + c->name();
    for (unsigned idx = 0; idx < count; ++idx) {
      const unsigned k = cycle_order(idx, kmax);
      const std::vector<std::pair<std::string, std::string>> params = {{"chart", c->name()}, {"k", std::to_string(k)}};
      b.add(s, base + "/oracle/" + std::to_string(idx),
            "[a1 # g1, a2 # g2] = a1 g1(a2) # g2 - a2 g2(a1) # g1 + a1 a2 # [g1, g2]", params, [c, k](Rng& rng) {
              Verdict v;
              const RingElem a1 = random_element(rng, c), a2 = random_element(rng, c);
              const VectorField g1 = random_field(rng, c), g2 = random_field(rng, c);
              v.note("a1", a1.to_string());
              v.note("g1", g1.to_string());
              v.note("a2", a2.to_string());
              v.note("g2", g2.to_string());
              const JetField oracle = jf_from_pair(a1 * vf_apply(g1, a2), g2, k) -
                                      jf_from_pair(a2 * vf_apply(g2, a1), g1, k) +
                                      jf_from_pair(a1 * a2, vf_bracket(g1, g2), k);
              v.expect_eq(jf_bracket(jf_from_pair(a1, g1, k), jf_from_pair(a2, g2, k)), oracle, "bracket");
              return v.done();
            });
      b.add(s, base + "/ideal/" + std::to_string(idx), "ord([u, w]) >= ord(w)", params, [c, k](Rng& rng) {
        Verdict v;
        const JetField u = random_jet_field(rng, c, k);
        const unsigned m = static_cast<unsigned>(rng.uniform(0, k));
        const JetField w = random_jet_field(rng, c, k, {}, m);
        v.note("u", u.to_string());
        v.note("w", w.to_string());
        const JetField br = jf_bracket(u, w);
        v.expect(jf_order(br) >= jf_order(w),
                 "ord([u,w]) = " + std::to_string(jf_order(br)) + " < ord(w) = " + std::to_string(jf_order(w)));
        return v.done();
      });
      b.add(s, base + "/anchor/" + std::to_string(idx), "anchor([u, w]) = [anchor(u), anchor(w)]", params,
            [c, k](Rng& rng) {
              Verdict v;
              const JetField u = random_jet_field(rng, c, k), w = random_jet_field(rng, c, k);
              v.note("u", u.to_string());
              v.note("w", w.to_string());
              v.expect_eq(jf_anchor(jf_bracket(u, w)), vf_bracket(jf_anchor(u), jf_anchor(w)), "anchor");
              return v.done();
            });
    }
    for (unsigned idx = 0; idx < triples; ++idx) {
      const unsigned k = cycle_order(idx, kmax);
      b.add(s, base + "/jacobi/" + std::to_string(idx), "[u, w] = -[w, u] and the Jacobi identity",
            {{"chart", c->name()}, {"k", std::to_string(k)}}, [c, k](Rng& rng) {
              Verdict v;
              const JetField u = random_jet_field(rng, c, k), w = random_jet_field(rng, c, k),
                             z = random_jet_field(rng, c, k);
              v.note("u", u.to_string());
              v.note("w", w.to_string());
              v.note("z", z.to_string());
              v.expect_eq(jf_bracket(u, w), -jf_bracket(w, u), "antisymmetry");
              const JetField jac =
                  jf_bracket(u, jf_bracket(w, z)) + jf_bracket(w, jf_bracket(z, u)) + jf_bracket(z, jf_bracket(u, w));
              v.expect(jac.is_zero(), "jacobiator " + jac.to_string());
              return v.done();
            });
    }
  }
}

// Isomorphism ---------------------------------------------------------------

void build_iso_roundtrip(Builder& b) {
  const std::string s = "iso-roundtrip";
  const unsigned count = b.count(200), kmax = b.order(4);
  for (const auto& c : b.charts(kCharts)) {
    for (unsigned k = 1; k <= kmax; ++k) {
      for (unsigned idx = 0; idx < count; ++idx) {
        b.add(s, s + "/" + c->name() + "/k" + std::to_string(k) + "/" + std::to_string(idx),
              "psi(phi(u)) = u and phi(psi(p)) = p", {{"chart", c->name()}, {"k", std::to_string(k)}},
              [c, k](Rng& rng) {
                Verdict v;
                const JetField u = random_jet_field(rng, c, k);
                const SemiDirectElem p = random_semidirect(rng, c, k);
                v.note("u", u.to_string());
                v.note("p", p.to_string());
                v.expect_eq(psi(phi(u), k), u, "psi phi");
                v.expect_eq(phi(psi(p, k)), p, "phi psi");
                return v.done();
              });
      }
    }
  }
  // Polynomial inputs of degree <= 3 on an affine chart: the jets terminate
  // below order 6, so nothing is lost to truncation.
  const ChartPtr affine = fixtures::chart("affine2");
  if (b.opts.charts.empty()) {
    const unsigned k = 6;
    for (unsigned idx = 0; idx < std::max(1u, count / 2); ++idx) {
      b.add(s, s + "/affine2/polynomial/" + std::to_string(idx),
            "on a polynomial ring, a # g of degree <= 3 maps to currents of degree < 3 and back exactly at k = 6",
            {{"chart", "affine2"}, {"k", "6"}}, [affine, k](Rng& rng) {
              Verdict v;
              const SampleBounds bounds{3, 3, 3, 0};
              const RingElem a = random_polynomial(rng, affine, bounds);
              const VectorField g = random_polynomial_field(rng, affine, bounds);
              v.note("a", a.to_string());
              v.note("g", g.to_string());
              const JetField u = jf_from_pair(a, g, k);
              const SemiDirectElem p = phi(u);
              for (const auto& [basis, coeff] : p.l_part.terms())
                v.expect(basis.m.total() <= 3, "term " + basis.to_string() + " beyond degree 3");
              v.expect_eq(psi(p, k), u, "psi phi");
              v.expect_eq(p.v_part, a * g, "anchor");
              return v.done();
            });
    }
  }
}

void build_iso_hom(Builder& b) {
  const std::string s = "iso-hom";
  const unsigned count = b.count(100), kmax = b.order(4);
  for (const auto& c : b.charts(kCharts)) {
    const std::string base = s + "/" + c->name();
    for (unsigned idx = 0; idx < count; ++idx) {
      const unsigned k = cycle_order(idx, kmax);
      const std::vector<std::pair<std::string, std::string>> params = {{"chart", c->name()}, {"k", std::to_string(k)}};
      b.add(s, base + "/bracket/" + std::to_string(idx), "phi([u, w]) = [phi(u), phi(w)]", params, [c, k](Rng& rng) {
        Verdict v;
        const JetField u = random_jet_field(rng, c, k), w = random_jet_field(rng, c, k);
        v.note("u", u.to_string());
        v.note("w", w.to_string());
        v.expect_eq(phi(jf_bracket(u, w)), sd_bracket(phi(u), phi(w)), "bracket");
        return v.done();
      });
      b.add(s, base + "/linear/" + std::to_string(idx), "phi((a (x) 1) u) = a phi(u) and psi(a p) = (a (x) 1) psi(p)",
            params, [c, k](Rng& rng) {
              Verdict v;
              const RingElem a = random_element(rng, c);
              const JetField u = random_jet_field(rng, c, k);
              const SemiDirectElem p = random_semidirect(rng, c, k);
              v.note("a", a.to_string());
              v.note("u", u.to_string());
              v.note("p", p.to_string());
              v.expect_eq(phi(jf_scale(a, u)), a * phi(u), "phi");
              v.expect_eq(psi(a * p, k), jf_scale(a, psi(p, k)), "psi");
              return v.done();
            });
    }
  }
}

std::vector<std::pair<std::string, VectorField>> localization_fields(const ChartPtr& c, const RingElem& g) {
  const RingElem x = c->param(0);
  auto along = [&](const RingElem& f) {
    std::vector<RingElem> coeffs(c->n(), c->zero());
    coeffs[0] = f;
    return VectorField(c, coeffs);
  };
  const RingElem inv_g = *try_inverse(g);
  std::vector<std::pair<std::string, VectorField>> out = {{"e0", along(c->one())}, {"e1", along(x)}};
  if (c->num_gens() > 0) {
    const RingElem y = c->variable(c->n());
    out.emplace_back("e2", along(y));
    out.emplace_back("e3", along(x * y));
  } else {
    out.emplace_back("e2", along(x * x));
    out.emplace_back("e3", along(x * x * x + c->one()));
  }
  out.emplace_back("e4", along(inv_g));
  return out;
}

void build_localization(Builder& b) {
  const std::string s = "localization";
  const unsigned kmax = b.order(4);
  for (const auto& c : b.charts({"laurent", "elliptic"})) {
    const RingElem g = c->element(c->denominator());
    const RingElem inv_g = *try_inverse(g);
    for (const auto& [tag, eta] : localization_fields(c, g)) {
      for (unsigned k = 0; k <= kmax; ++k) {
        for (unsigned m = 0; m <= k; ++m) {
          b.add(s, s + "/" + c->name() + "/" + tag + "/k" + std::to_string(k) + "/m" + std::to_string(m),
                "1 # (1/g) eta minus sum_{r<=m} (1/g^(r+1)) delta(g)^r (1 # eta) has order >= m+1 and equals the "
                "closed-form remainder",
                {{"chart", c->name()}, {"g", g.to_string()}, {"eta", eta.to_string()}, {"k", std::to_string(k)},
                 {"m", std::to_string(m)}},
                [g, inv_g, eta = eta, k, m](Rng&) {
                  Verdict v;
                  const JetField defect = jf_from_pair(g.chart()->one(), inv_g * eta, k) -
                                          localization_partial_sum(g, eta, m, k);
                  v.expect(jf_order(defect) >= m + 1, "defect order " + std::to_string(jf_order(defect)));
                  v.expect_eq(defect, localization_remainder(g, eta, m, k), "closed form");
                  return v.done();
                });
        }
      }
    }
  }
}

// Enveloping algebras -----------------------------------------------------

void build_pbw(Builder& b) {
  const std::string s = "pbw";
  const unsigned count = b.count(200), r = b.order(3);
  for (std::size_t n : {1u, 2u}) {
    b.record_input("L(" + std::to_string(n) + "," + std::to_string(r) + ")");
    for (unsigned idx = 0; idx < count; ++idx) {
      b.add(s, s + "/n" + std::to_string(n) + "/r" + std::to_string(r) + "/" + std::to_string(idx),
            "PBW normal forms are fixed by normalization and the product of normal forms is associative",
            {{"n", std::to_string(n)}, {"r", std::to_string(r)}}, [n, r](Rng& rng) {
              Verdict v;
              const std::size_t len = static_cast<std::size_t>(rng.uniform(2, 5));
              const auto word = random_word(rng, n, r, len);
              v.note("word", fmt_word(word));
              const UElem nf = pbw_normalize(word, n, r);
              for (const auto& [mono, coeff] : nf.terms()) {
                v.expect(is_pbw_sorted(mono), "unsorted monomial " + pbw_to_string(mono));
                UElem single(n, r);
                single.add_term(mono, Rational(1));
                v.expect_eq(pbw_normalize(mono, n, r), single, "idempotence");
              }
              const std::size_t i = rng.index(len + 1), j = rng.index(len + 1);
              const std::size_t lo = std::min(i, j), hi = std::max(i, j);
              const std::vector<LBasis> w1(word.begin(), word.begin() + lo), w2(word.begin() + lo, word.begin() + hi),
                  w3(word.begin() + hi, word.end());
              const UElem a = pbw_normalize(w1, n, r), bb = pbw_normalize(w2, n, r), cc = pbw_normalize(w3, n, r);
              const UElem left = pbw_mul(pbw_mul(a, bb), cc), right = pbw_mul(a, pbw_mul(bb, cc));
              v.expect_eq(left, right, "associativity");
              v.expect_eq(left, nf, "split product");
              return v.done();
            });
    }
  }
}

void build_av_tensor(Builder& b) {
  const std::string s = "av-tensor";
  const unsigned count = b.count(100), rmax = b.order(3);
  for (const auto& c : b.charts(kCharts)) {
    for (unsigned r = 1; r <= rmax; ++r) {
      for (unsigned idx = 0; idx < count; ++idx) {
        b.add(s, s + "/" + c->name() + "/r" + std::to_string(r) + "/" + std::to_string(idx),
              "the image of a 3-factor word is the product of the factor images; eta f - f eta maps to eta(f) and "
              "eta mu - mu eta maps to [eta, mu]",
              {{"chart", c->name()}, {"r", std::to_string(r)}}, [c, r](Rng& rng) {
                Verdict v;
                const AVWord w = random_av_word(rng, c, 3);
                const RingElem f = random_element(rng, c);
                const VectorField eta = random_field(rng, c), mu = random_field(rng, c);
                v.note("word", w.to_string());
                v.note("f", f.to_string());
                v.note("eta", eta.to_string());
                v.note("mu", mu.to_string());
                auto image = [&](std::vector<AVFactor> factors) { return av_to_tensor(AVWord{std::move(factors)}, r); };
                v.expect_eq(av_to_tensor(w, r),
                            tensor_mul(image({w.factors[0]}), tensor_mul(image({w.factors[1]}), image({w.factors[2]}))),
                            "multiplicative");
                v.expect_eq(image({eta, f}) - image({f, eta}), image({vf_apply(eta, f)}), "leibniz relation");
                v.expect_eq(image({eta, mu}) - image({mu, eta}), image({vf_bracket(eta, mu)}), "commutator");
                return v.done();
              });
      }
    }
  }
}

// Atlas -------------------------------------------------------------------

const std::vector<std::string> kAtlases = {"p1", "plane_shear"};

CurrentElem basis_current(const ChartPtr& c, const MultiIndex& m, std::size_t p, unsigned r) {
  CurrentElem e(c, r);
  e.add_term(LBasis{m, p}, c->one());
  return e;
}

void build_transition(Builder& b) {
  const std::string s = "transition";
  const unsigned r = b.order(4);
  const unsigned mmax = std::min(3u, r);
  for (const auto& atlas : b.atlases(kAtlases)) {
    const auto shared = std::make_shared<const Atlas>(atlas);
    const std::size_t n = atlas.charts().front()->n();
    std::vector<std::pair<std::size_t, std::size_t>> pairs = atlas.transition_keys();
    for (std::size_t i = 0; i < atlas.size(); ++i) pairs.emplace_back(i, i);
    for (const auto& [from, to] : pairs) {
      const std::string pair_tag = atlas.charts()[from]->name() + "-" + atlas.charts()[to]->name();
      for (const auto& m : indices_up_to(n, mmax)) {
        if (m.total() == 0) continue;
        for (std::size_t p = 0; p < n; ++p) {
          b.add(s, s + "/" + atlas.name() + "/" + pair_tag + "/m" + index_tag(m) + "/p" + std::to_string(p),
                "the closed-form change of chart on X^m d/dX_p agrees with transport through psi and phi, has no "
                "terms below degree |m|-1, and reduces to the Jacobian action in degree 0",
                {{"atlas", atlas.name()}, {"from", atlas.charts()[from]->name()}, {"to", atlas.charts()[to]->name()},
                 {"m", index_tag(m)}, {"p", std::to_string(p)}, {"r", std::to_string(r)}},
                [shared, from = from, to = to, m, p, r](Rng&) {
                  Verdict v;
                  const TransitionPair& tp = shared->transition(from, to);
                  const CurrentElem formula = transition_l(m, p, tp, r);
                  const SemiDirectElem iso = iso_transport(m, p, tp, r);
                  v.expect_eq(formula, iso.l_part, "formula vs iso");
                  v.expect(iso.v_part.is_zero(), "iso route has a vector-field part " + iso.v_part.to_string());
                  v.expect(filtration_check(tp, m, p, r), "filtration");
                  if (m.total() == 1) v.expect(jacobian_quotient_check(tp, m, p, r), "jacobian quotient");
                  if (from == to) v.expect_eq(formula, basis_current(tp.overlap(), m, p, r), "identity transition");
                  return v.done();
                });
        }
      }
    }
  }
}

void build_cocycle(Builder& b) {
  const std::string s = "cocycle";
  const unsigned r = b.order(4);
  const unsigned mmax = std::min(3u, r);
  for (const auto& atlas : b.atlases(kAtlases)) {
    const auto shared = std::make_shared<const Atlas>(atlas);
    const std::size_t n = atlas.charts().front()->n();
    auto linked = [&](std::size_t a, std::size_t c) { return a == c || atlas.has_transition(a, c); };
    for (std::size_t i = 0; i < atlas.size(); ++i)
      for (std::size_t j = 0; j < atlas.size(); ++j)
        for (std::size_t l = 0; l < atlas.size(); ++l) {
          if (!linked(i, j) || !linked(j, l) || !linked(i, l)) continue;
          const std::string tag = atlas.charts()[i]->name() + "-" + atlas.charts()[j]->name() + "-" +
                                  atlas.charts()[l]->name();
          for (const auto& m : indices_up_to(n, mmax)) {
            if (m.total() == 0) continue;
            for (std::size_t p = 0; p < n; ++p) {
              b.add(s, s + "/" + atlas.name() + "/" + tag + "/m" + index_tag(m) + "/p" + std::to_string(p),
                    "T(i->l) = T(j->l) o T(i->j) on X^m d/dX_p over the triple overlap",
                    {{"atlas", atlas.name()}, {"triple", tag}, {"m", index_tag(m)}, {"p", std::to_string(p)},
                     {"r", std::to_string(r)}},
                    [shared, i, j, l, m, p, r](Rng&) {
                      Verdict v;
                      v.expect(cocycle_check(*shared, i, j, l, m, p, r), "cocycle mismatch");
                      return v.done();
                    });
            }
          }
        }
    // Negative control: replacing a transition by the naive identity of
    // coordinates must break the cocycle condition.
    if (atlas.size() >= 3 && atlas.has_transition(0, 1) && linked(1, 2) && linked(0, 2) &&
        atlas.charts()[0]->num_gens() == 0) {
      const TransitionPair& tp = atlas.transition(0, 1);
      std::vector<RingElem> g_images, h_images;
      for (std::size_t q = 0; q < n; ++q) {
        g_images.push_back(tp.overlap()->param(q));
        h_images.push_back(tp.source_overlap()->param(q));
      }
      const TransitionPair naive(tp.source(), tp.target(), tp.overlap(), tp.source_overlap(), g_images, h_images);
      const auto broken = std::make_shared<const Atlas>(atlas.with_transition(0, 1, naive));
      b.add(s, s + "/" + atlas.name() + "/negative-control",
            "with T(0->1) replaced by the naive identity of coordinates the cocycle check reports a mismatch",
            {{"atlas", atlas.name()}, {"r", std::to_string(r)}}, [broken, n, r](Rng&) {
              Verdict v;
              bool detected = false;
              for (std::size_t p = 0; p < n && !detected; ++p)
                detected = !cocycle_check(*broken, 0, 1, 2, MultiIndex::unit(n, p), p, r);
              v.expect(detected, "mismatch not detected");
              return v.done();
            });
    }
  }
}

using BuildFn = void (*)(Builder&);

const std::vector<std::pair<std::string, BuildFn>>& registry() {
  static const std::vector<std::pair<std::string, BuildFn>> r = {
      {"derivations", build_derivations},     {"taylor", build_taylor},
      {"jet-hom", build_jet_hom},             {"delta-leibniz", build_delta_leibniz},
      {"smash-bracket", build_smash_bracket}, {"iso-roundtrip", build_iso_roundtrip},
      {"iso-hom", build_iso_hom},             {"localization", build_localization},
      {"pbw", build_pbw},                     {"av-tensor", build_av_tensor},
      {"transition", build_transition},       {"cocycle", build_cocycle},
  };
  return r;
}

std::string repro_command(const Case& c, const SuiteOptions& opts) {
  std::ostringstream out;
  out << "jetalg verify " << c.suite << " --seed " << opts.seed;
  for (const auto& ref : opts.charts) out << " --chart " << ref;
  if (!opts.atlas.empty()) out << " --atlas " << opts.atlas;
  if (opts.cases) out << " --cases " << *opts.cases;
  if (opts.order) out << " --order " << *opts.order;
  out << " --case " << c.id;
  return out.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  Report report;
  report.suite = name;
  report.seed = opts.seed;
  CaseList cases;
  Builder builder{opts, cases, report.inputs};
  bool known = false;
  for (const auto& [suite, fn] : registry()) {
    if (name == suite || name == "all") {
      fn(builder);
      known = true;
    }
  }
  if (!known) throw SuiteError("unknown suite '" + name + "'");

  if (!opts.case_id.empty()) {
    std::erase_if(cases, [&](const Case& c) { return c.id != opts.case_id; });
    if (cases.empty()) throw SuiteError("no case '" + opts.case_id + "' in suite '" + name + "'");
  }

  std::vector<CaseOutcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      Rng rng(case_seed(opts.seed, cases[i].id));
      try {
        outcomes[i] = cases[i].run(rng);
      } catch (const std::exception& e) {
        outcomes[i] = {false, std::string("exception: ") + e.what()};
      }
    }
  };
  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < cases.size(); ++i) {
    CheckRecord rec;
    rec.id = cases[i].id;
    rec.statement = cases[i].statement;
    rec.params = cases[i].params;
    rec.pass = outcomes[i].pass;
    rec.detail = outcomes[i].detail;
    rec.repro = repro_command(cases[i], opts);
    report.checks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace jetalg
