#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetalg/chart.hpp"
#include "jetalg/ring_hom.hpp"

namespace jetalg {

class TransitionError : public Error {
 public:
  enum class Kind { Malformed, InverseCheckFailed, JacobianNotInvertible, RelationsViolated };
  TransitionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Change of coordinates between a source chart U1 (parameters x) and a
/// target chart U2 (parameters y) on their common overlap.
///
/// The overlap is given twice: `overlap` uses the variables of U2 and holds
/// x = G(y); `source_overlap` uses the variables of U1 and holds y = H(x).
/// Both are localizations of the respective chart, so each chart includes
/// into its presentation by variable name.
class TransitionPair {
 public:
  /// g_images: images of the U1 variables (parameters then generators) on
  /// `overlap`; h_images: images of the U2 variables on `source_overlap`.
  TransitionPair(ChartPtr source, ChartPtr target, ChartPtr overlap, ChartPtr source_overlap,
                 std::vector<RingElem> g_images, std::vector<RingElem> h_images);

  /// x = y on the chart itself.
  static TransitionPair identity(const ChartPtr& chart);

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const ChartPtr& overlap() const { return overlap_; }
  const ChartPtr& source_overlap() const { return source_overlap_; }
  std::size_t n() const { return source_->n(); }

  /// source_overlap -> overlap, x -> G(y).
  const RingHom& hom_g() const { return hom_g_; }
  /// overlap -> source_overlap, y -> H(x).
  const RingHom& hom_h() const { return hom_h_; }
  /// source chart -> overlap, x -> G(y).
  const RingHom& source_to_overlap() const { return source_to_overlap_; }

  /// G_i on the overlap.
  const RingElem& g(std::size_t i) const { return hom_g_.images()[i]; }
  /// H_j on the source overlap.
  const RingElem& h(std::size_t j) const { return hom_h_.images()[j]; }
  /// dG_i/dy_j on the overlap.
  RingElem dg(std::size_t i, std::size_t j) const;
  /// dH_q/dx_p on the source overlap.
  RingElem dh(std::size_t q, std::size_t p) const;
  /// (dH_q/dx_p)(G(y)) on the overlap.
  RingElem dh_at_g(std::size_t q, std::size_t p) const;

 private:
  ChartPtr source_, target_, overlap_, source_overlap_;
  RingHom hom_g_, hom_h_, source_to_overlap_;
};

/// Checks H(G) = id and G(H) = id on all variables, mutual inverse Jacobians,
/// and that both maps respect the defining relations. Throws TransitionError.
void validate_transition(const TransitionPair& tp);

/// Charts, transitions keyed by ordered pairs of chart indices, and the rings
/// used for triple overlaps.
class Atlas {
 public:
  struct Triple {
    std::array<std::size_t, 3> charts;
    ChartPtr overlap;  // presented in the variables of the third chart
  };

  Atlas(std::string name, std::vector<ChartPtr> charts, std::vector<TransitionPair> transitions,
        std::vector<Triple> triples);

  const std::string& name() const { return name_; }
  const std::vector<ChartPtr>& charts() const { return charts_; }
  std::size_t size() const { return charts_.size(); }
  std::optional<std::size_t> chart_index(const std::string& name) const;

  bool has_transition(std::size_t from, std::size_t to) const;
  /// Stored transition, or the identity when from == to.
  const TransitionPair& transition(std::size_t from, std::size_t to) const;
  /// Ordered pairs with a stored transition.
  std::vector<std::pair<std::size_t, std::size_t>> transition_keys() const;

  /// Ring for the triple overlap of (i, j, l) in the variables of chart l.
  /// Falls back to a pairwise overlap when two of the indices coincide.
  ChartPtr triple_overlap(std::size_t i, std::size_t j, std::size_t l) const;
  const std::vector<Triple>& triples() const { return triples_; }

  /// Copy with one transition replaced (used for negative controls).
  Atlas with_transition(std::size_t from, std::size_t to, TransitionPair tp) const;

 private:
  std::string name_;
  std::vector<ChartPtr> charts_;
  std::map<std::pair<std::size_t, std::size_t>, TransitionPair> transitions_;
  std::vector<TransitionPair> identities_;
  std::vector<Triple> triples_;
};

}  // namespace jetalg
