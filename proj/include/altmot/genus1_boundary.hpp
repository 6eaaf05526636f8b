#pragma once

#include "altmot/genus0.hpp"
#include "altmot/symfunc.hpp"

namespace altmot::genus1
{

/// Terms of the genus-one boundary formula
///   b₁ = (a₁ + necklace + correction) ∘ (h₁ + b₀′).
struct BoundaryAssembly
{
  int max_degree = 0;
  SymSeries necklace{0};
  SymSeries correction{0};
  /// a₁ + necklace + correction.
  SymSeries inner_sum{0};
  /// inner_sum ∘ (h₁ + b₀′).
  SymSeries composed{0};
};

/// -½ Σ_{n≥1} φ(n)/n · log(1 - ψ_n(a₀″)), truncated at the degree of a0_pp.
SymSeries necklace_from(const SymSeries &a0_pp);
/// (ȧ₀² + ȧ₀ + ¼ψ₂(a₀″)) / (1 - ψ₂(a₀″)).
SymSeries correction_from(const SymSeries &a0_pp, const SymSeries &a0_dot);

SymSeries necklace_series(const genus0::Genus0Tables &tables);
SymSeries correction_series(const genus0::Genus0Tables &tables);
SymSeries necklace_series(int max_degree);
SymSeries correction_series(int max_degree);

/// h₁ + b₀′, the argument of every outer plethysm.
SymSeries tree_insertion(const genus0::Genus0Tables &tables);

/// Alt((necklace + correction) ∘ (h₁ + b₀′)), computed through the
/// composition and checked against Alt(necklace + correction). A mismatch
/// throws std::logic_error.
AltSeries boundary_alt(const genus0::Genus0Tables &tables);
AltSeries boundary_alt(int max_degree);

/// (a1 + necklace + correction) ∘ (h₁ + b₀′). a1 must share the truncation
/// degree of the tables.
BoundaryAssembly assemble(const genus0::Genus0Tables &tables, const SymSeries &a1);
SymSeries b1_series(const genus0::Genus0Tables &tables, const SymSeries &a1);
SymSeries b1_series(int max_degree, const SymSeries &a1);

/// Σ_n A_c(M_{1,n}) e_n: a symmetric function whose Alt-series is the
/// interior series and which has no other isotypic parts.
SymSeries interior_a1(int max_degree);

} // namespace altmot::genus1
