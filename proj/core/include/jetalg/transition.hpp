#pragma once

#include "jetalg/atlas.hpp"
#include "jetalg/lie_plus.hpp"
#include "jetalg/semidirect.hpp"

namespace jetalg {

/// Applies a ring map to every coefficient of a current element.
CurrentElem current_map(const CurrentElem& c, const RingHom& hom);

/// Image of the fibre vector X^m d/dX_p under the change of chart, as a
/// current element on the overlap truncated at |s| <= r:
///
///   sum_{0<=k<=m} (-1)^{|m-k|} C(m,k) G(y)^{m-k}
///     sum_q ( G(y+Y)^k (dH_q/dx_p)(G(y+Y)) - G(y)^k (dH_q/dx_p)(G(y)) ) d/dY_q
///
/// Shifted arguments are truncated Taylor expansions composed through
/// t_i -> G_i(y+Y) - G_i(y). Requires 1 <= |m| <= r.
CurrentElem transition_l(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r);

/// Independent route to the same change of chart: psi on the source chart,
/// decomposition into a # eta terms, change of variables x -> G(y) with
/// d/dx_p -> sum_q (dH_q/dx_p)(G) d/dy_q in the second factor, re-expansion
/// as jets on the overlap, then phi. Returns the full semidirect image; its
/// vector-field part is zero.
SemiDirectElem iso_transport(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r);

/// The current-algebra part of iso_transport.
CurrentElem transition_via_iso(const MultiIndex& m, std::size_t p, const TransitionPair& tp, unsigned r);

/// Compares T(i->l) with T(j->l) o T(i->j) on X^m d/dX_p over the triple
/// overlap of (i, j, l), truncated at r.
bool cocycle_check(const Atlas& atlas, std::size_t i, std::size_t j, std::size_t l, const MultiIndex& m,
                   std::size_t p, unsigned r);

/// True when every Y^s coefficient of transition_l(m, p) with |s| < |m| is zero.
bool filtration_check(const TransitionPair& tp, const MultiIndex& m, std::size_t p, unsigned r);

/// For |a| = 1 (a = e_i): the degree-0 part of transition_l(a, p) equals
/// sum_{j,q} (dG_i/dy_j) (dH_q/dx_p)(G) Y_j d/dY_q.
bool jacobian_quotient_check(const TransitionPair& tp, const MultiIndex& a, std::size_t p, unsigned r);

}  // namespace jetalg
