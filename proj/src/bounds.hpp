#pragma once

#include <utility>
#include <vector>

#include "euler_engine.hpp"
#include "pgroup.hpp"
#include "series.hpp"

namespace asw {

/// Upper bound on the local discriminant exponent over a place with conductor
/// exponent f_exp: sum_{i=0}^{e-1} ceil(f/p^i) (|p^iG| - |p^{i+1}G|).
Int disc_exponent_bound(const GroupDesc& g, long f_exp);

/// Degree form of the discriminant norm bound for a squareful conductor given
/// as (place degree, exponent) pairs:
/// floor( m~_G * deg(f) + (|pG| - 1) * deg(squarefree part of f) ).
Int disc_norm_bound_deg(const GroupDesc& g,
                        const std::vector<std::pair<int, int>>& conductor);

struct ExponentSummary {
  Rational lower;       // a_p(G) (1 - delta)
  Rational conjecture;  // a_p(G)
  Rational upper;       // d_p(G)
};

ExponentSummary exponent_summary(const GroupDesc& g);

/// Discriminant-count series for G = Z/p: since all p-1 nontrivial characters
/// share the conductor, d = f^{p-1} exactly, so the conductor series is
/// re-indexed by the factor p-1.
SeriesT z_series_cyclic_p(unsigned q, unsigned p, int N,
                          const GlobalSeriesOptions& opt = {});

}  // namespace asw
