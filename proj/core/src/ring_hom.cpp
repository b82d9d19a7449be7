#include "jetalg/ring_hom.hpp"

namespace jetalg {

RingHom::RingHom(ChartPtr source, ChartPtr target, std::vector<RingElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->num_vars())
    throw MismatchError("ring map needs one image per source variable");
  for (const auto& img : images_)
    if (img.chart() != target_) throw MismatchError("ring map image is not on the target chart");
  RingElem g = apply(source_->spec().denominator);
  auto inv = try_inverse(g);
  if (!inv)
    throw DomainError("denominator of '" + source_->name() + "' is not invertible on '" + target_->name() + "'");
  inv_denominator_ = *inv;
}

RingHom RingHom::from_names(ChartPtr source, ChartPtr target, const std::map<std::string, RingElem>& images) {
  std::vector<RingElem> ordered;
  for (const auto& name : *source->vars()) {
    auto it = images.find(name);
    if (it == images.end()) throw DomainError("no image given for variable '" + name + "'");
    ordered.push_back(it->second);
  }
  return RingHom(std::move(source), std::move(target), std::move(ordered));
}

RingHom RingHom::inclusion(ChartPtr source, ChartPtr target) {
  std::vector<RingElem> ordered;
  for (const auto& name : *source->vars()) {
    auto v = target->variable_index(name);
    if (!v) throw DomainError("variable '" + name + "' of '" + source->name() + "' is missing on '" + target->name() + "'");
    ordered.push_back(target->variable(*v));
  }
  return RingHom(std::move(source), std::move(target), std::move(ordered));
}

RingElem RingHom::apply(const Poly& p) const {
  std::vector<std::vector<RingElem>> powers(images_.size());
  auto power = [&](std::size_t v, unsigned e) -> const RingElem& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(target_->one());
    while (cache.size() <= e) cache.push_back(cache.back() * images_[v]);
    return cache[e];
  };
  RingElem sum = target_->zero();
  for (const auto& [m, c] : p.terms()) {
    RingElem term = target_->constant(c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v]) term *= power(v, m[v]);
    sum += term;
  }
  return sum;
}

RingElem RingHom::operator()(const RingElem& a) const {
  if (a.chart() != source_) throw MismatchError("ring map applied to an element of another chart");
  RingElem out = apply(a.numerator());
  if (a.denom_power() > 0) out *= inv_denominator_.pow(a.denom_power());
  return out;
}

bool RingHom::respects_relations() const {
  const std::size_t n = source_->n();
  for (std::size_t j = 0; j < source_->num_gens(); ++j) {
    const auto& gen = source_->spec().alg_gens[j];
    if (!(images_[n + j].pow(gen.degree) == apply(gen.rhs))) return false;
  }
  return true;
}

}  // namespace jetalg
