#pragma once

#include "altmot/motive.hpp"
#include "altmot/symfunc.hpp"

namespace altmot::pipeline
{

inline constexpr int kMaxDegree = 20;

/// Alternating part of e_c of the compactified genus-one moduli space.
struct MainResult
{
  int n = 0;
  MotiveClass interior;
  MotiveClass boundary;
  /// interior + boundary, normalized.
  MotiveClass total;
  Realization realization;
};

/// Cached boundary Alt-series covering at least `min_degree` (and never less
/// than kDefaultMaxDegree). Built once per degree, thread-safe.
const AltSeries &boundary_alt_cached(int min_degree);

/// interior_Ac(n) plus the boundary coefficient at t^n. 1 ≤ n ≤ kMaxDegree.
MainResult main_theorem(int n);

} // namespace altmot::pipeline
