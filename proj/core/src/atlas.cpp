#include "jetalg/atlas.hpp"

namespace jetalg {

namespace {

void require_same_variables(const ChartPtr& chart, const ChartPtr& presentation, const char* role) {
  if (*chart->vars() != *presentation->vars())
    throw TransitionError(TransitionError::Kind::Malformed,
                          std::string(role) + " '" + presentation->name() + "' must use the variables of chart '" +
                              chart->name() + "'");
}

RingHom make_hom(const ChartPtr& source, const ChartPtr& target, std::vector<RingElem> images, const char* what) {
  try {
    return RingHom(source, target, std::move(images));
  } catch (const Error& e) {
    throw TransitionError(TransitionError::Kind::Malformed, std::string(what) + ": " + e.what());
  }
}

}  // namespace

TransitionPair::TransitionPair(ChartPtr source, ChartPtr target, ChartPtr overlap, ChartPtr source_overlap,
                               std::vector<RingElem> g_images, std::vector<RingElem> h_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      overlap_(std::move(overlap)),
      source_overlap_(std::move(source_overlap)),
      hom_g_(make_hom(source_overlap_, overlap_, g_images, "x = G(y)")),
      hom_h_(make_hom(overlap_, source_overlap_, std::move(h_images), "y = H(x)")),
      source_to_overlap_(make_hom(source_, overlap_, std::move(g_images), "x = G(y) on the source chart")) {
  if (source_->n() != target_->n())
    throw TransitionError(TransitionError::Kind::Malformed, "charts of a transition must have the same dimension");
  require_same_variables(source_, source_overlap_, "source overlap");
  require_same_variables(target_, overlap_, "overlap");
}

TransitionPair TransitionPair::identity(const ChartPtr& chart) {
  std::vector<RingElem> vars;
  for (std::size_t v = 0; v < chart->num_vars(); ++v) vars.push_back(chart->variable(v));
  return TransitionPair(chart, chart, chart, chart, vars, vars);
}

RingElem TransitionPair::dg(std::size_t i, std::size_t j) const { return re_derive(j, g(i)); }

RingElem TransitionPair::dh(std::size_t q, std::size_t p) const { return re_derive(p, h(q)); }

RingElem TransitionPair::dh_at_g(std::size_t q, std::size_t p) const { return hom_g_(dh(q, p)); }

void validate_transition(const TransitionPair& tp) {
  const auto& ov = tp.overlap();
  const auto& sov = tp.source_overlap();
  for (std::size_t v = 0; v < ov->num_vars(); ++v)
    if (!(tp.hom_g()(tp.hom_h()(ov->variable(v))) == ov->variable(v)))
      throw TransitionError(TransitionError::Kind::InverseCheckFailed,
                            "H(G(y)) differs from y in variable '" + (*ov->vars())[v] + "'");
  for (std::size_t v = 0; v < sov->num_vars(); ++v)
    if (!(tp.hom_h()(tp.hom_g()(sov->variable(v))) == sov->variable(v)))
      throw TransitionError(TransitionError::Kind::InverseCheckFailed,
                            "G(H(x)) differs from x in variable '" + (*sov->vars())[v] + "'");
  if (!tp.hom_g().respects_relations() || !tp.hom_h().respects_relations() || !tp.source_to_overlap().respects_relations())
    throw TransitionError(TransitionError::Kind::RelationsViolated, "transition does not respect the chart relations");
  const std::size_t n = tp.n();
  std::vector<std::vector<RingElem>> dg(n), dhg(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      dg[a].push_back(tp.dg(a, b));
      dhg[a].push_back(tp.dh_at_g(a, b));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      RingElem left = ov->zero(), right = ov->zero();
      for (std::size_t c = 0; c < n; ++c) {
        left += dg[a][c] * dhg[c][b];
        right += dhg[a][c] * dg[c][b];
      }
      const RingElem expected = ov->constant(Rational(a == b ? 1 : 0));
      if (!(left == expected) || !(right == expected))
        throw TransitionError(TransitionError::Kind::JacobianNotInvertible,
                              "Jacobians of G and H are not mutually inverse");
    }
}

// ---------------------------------------------------------------------------

Atlas::Atlas(std::string name, std::vector<ChartPtr> charts, std::vector<TransitionPair> transitions,
             std::vector<Triple> triples)
    : name_(std::move(name)), charts_(std::move(charts)), triples_(std::move(triples)) {
  for (const auto& c : charts_) identities_.push_back(TransitionPair::identity(c));
  for (auto& tp : transitions) {
    auto from = chart_index(tp.source()->name());
    auto to = chart_index(tp.target()->name());
    if (!from || !to || charts_[*from] != tp.source() || charts_[*to] != tp.target())
      throw TransitionError(TransitionError::Kind::Malformed, "transition between charts outside the atlas");
    if (*from == *to) throw TransitionError(TransitionError::Kind::Malformed, "self-transitions are implicit");
    if (!transitions_.emplace(std::make_pair(*from, *to), std::move(tp)).second)
      throw TransitionError(TransitionError::Kind::Malformed, "duplicate transition");
  }
  for (const auto& t : triples_)
    for (auto idx : t.charts)
      if (idx >= charts_.size()) throw TransitionError(TransitionError::Kind::Malformed, "triple names an unknown chart");
}

std::optional<std::size_t> Atlas::chart_index(const std::string& name) const {
  for (std::size_t i = 0; i < charts_.size(); ++i)
    if (charts_[i]->name() == name) return i;
  return std::nullopt;
}

bool Atlas::has_transition(std::size_t from, std::size_t to) const {
  return from < charts_.size() && to < charts_.size() && (from == to || transitions_.count({from, to}));
}

const TransitionPair& Atlas::transition(std::size_t from, std::size_t to) const {
  if (from >= charts_.size() || to >= charts_.size()) throw DomainError("chart index out of range");
  if (from == to) return identities_[from];
  auto it = transitions_.find({from, to});
  if (it == transitions_.end())
    throw DomainError("missing transition " + charts_[from]->name() + " -> " + charts_[to]->name());
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> Atlas::transition_keys() const {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, tp] : transitions_) keys.push_back(k);
  return keys;
}

ChartPtr Atlas::triple_overlap(std::size_t i, std::size_t j, std::size_t l) const {
  for (const auto& t : triples_)
    if (t.charts == std::array<std::size_t, 3>{i, j, l}) return t.overlap;
  if (i == j) return transition(j, l).overlap();
  if (j == l) return transition(i, j).overlap();
  if (l == i) return transition(j, i).overlap();
  throw DomainError("no triple overlap declared for charts " + charts_.at(i)->name() + ", " + charts_.at(j)->name() +
                    ", " + charts_.at(l)->name());
}

Atlas Atlas::with_transition(std::size_t from, std::size_t to, TransitionPair tp) const {
  Atlas copy = *this;
  auto it = copy.transitions_.find({from, to});
  if (it == copy.transitions_.end()) throw DomainError("no transition to replace");
  it->second = std::move(tp);
  return copy;
}

}  // namespace jetalg
