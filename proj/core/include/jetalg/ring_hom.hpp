#pragma once

#include <map>
#include <string>
#include <vector>

#include "jetalg/chart.hpp"

namespace jetalg {

/// Algebra map between chart rings determined by the images of the source
/// variables (parameters, then generators). The image of the source
/// denominator must be invertible in the target.
class RingHom {
 public:
  RingHom(ChartPtr source, ChartPtr target, std::vector<RingElem> images);

  /// Images looked up by source variable name.
  static RingHom from_names(ChartPtr source, ChartPtr target, const std::map<std::string, RingElem>& images);
  /// Sends every source variable to the target variable of the same name.
  static RingHom inclusion(ChartPtr source, ChartPtr target);

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const std::vector<RingElem>& images() const { return images_; }

  RingElem operator()(const RingElem& a) const;
  RingElem apply(const Poly& p) const;

  /// True when the images of the generators satisfy the source relations.
  bool respects_relations() const;

 private:
  ChartPtr source_;
  ChartPtr target_;
  std::vector<RingElem> images_;
  RingElem inv_denominator_;
};

}  // namespace jetalg
