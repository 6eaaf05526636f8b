#pragma once

#include <map>
#include <vector>

#include "altmot/symfunc.hpp"

namespace altmot::genus0
{

/// Number of closed points of degree d on the projective line over F_q, as a
/// polynomial in q = L: (1/d) Σ_{e|d} μ(d/e)(L^e + 1).
MotiveClass closed_point_count(int d);

/// a₀ = Σ_{n=3}^{N} ch_n(e_c(M_{0,n})) from the twisted point count.
///
/// For a cycle type λ with a_d cycles of length d, the number of labeled
/// configurations of n distinct points on P¹ fixed by Frobenius∘σ is
/// ∏_d d^{a_d} m_d (m_d - 1) ⋯ (m_d - a_d + 1), m_d = closed_point_count(d):
/// each d-cycle picks a closed point of degree d and one of its d geometric
/// points. PGL₂ acts freely for n ≥ 3 and |PGL₂(F_q)| = q³ - q, so the
/// coefficient of p_λ is that product divided by (q³ - q) z_λ. The division
/// is checked to be exact.
SymSeries a0_series(int max_degree);

/// Cyclic Lie characteristic
/// (1 - p₁) Σ_n μ(n)/n log(1 - p_n) + h₁ - h₂, truncated.
SymSeries ch_lie(int max_degree);

/// Solution of b₀′ = a₀′ ∘ (h₁ + b₀′), built degree by degree.
SymSeries b0_prime(int max_degree);

/// Everything the boundary computation needs, each at the truncation degree
/// at which it is exact. a0 is carried two degrees beyond `max_degree` so
/// that its second derivatives are exact up to `max_degree`.
struct Genus0Tables
{
  int max_degree = 0;
  SymSeries a0{0};       // truncated at max_degree + 2
  SymSeries a0_prime{0}; // max_degree + 1
  SymSeries a0_pp{0};    // max_degree
  SymSeries a0_dot{0};   // ∂a₀/∂p₂, max_degree
  SymSeries b0_prime{0}; // max_degree
  SymSeries ch_lie{0};   // max_degree
};

Genus0Tables build_tables(int max_degree);

/// Schur multiplicities of H^i(M_{0,n}) for i = 0..n-3, read off from the
/// L-graded degree-n part of a₀ via purity and Poincaré duality:
/// H^i = (-1)^i · [coefficient of L^{n-3-i}].
std::vector<std::map<Partition, mpq_class>> poincare_schur(int n);

struct RowViolation
{
  int n;
  int i;
  Partition lambda;
};

/// Schur constituents of H^i(M_{0,n}) with more than i+1 rows.
std::vector<RowViolation> row_bound_violations(int n);

inline constexpr int kMaxPoincareN = 10;

} // namespace altmot::genus0
