#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altmot/combinatorics.hpp"
#include "altmot/symfunc.hpp"

namespace altmot::fiber
{

/// Basis class of H•(E) in one tensor slot. α, β span H¹ with α·β = p.
enum class Slot : std::uint8_t { one = 0, alpha = 1, beta = 2, point = 3 };

using Word = std::uint32_t;

/// Exact model of H•(E^{n-1}) = H•(E)^{⊗(n-1)} for the configuration
/// (0, x₂, …, x_n) of n points on an elliptic curve modulo translation.
///
/// A basis word stores slot s (coordinate x_{s+2}) in bits 2s..2s+1. The
/// pure tensor u₂ ⊗ ⋯ ⊗ u_n stands for the ordered product
/// pr₂*u₂ · pr₃*u₃ ⋯ pr_n*u_n, so products carry Koszul signs.
class FiberAlgebra
{
public:
  explicit FiberAlgebra(int points);

  int points() const noexcept { return points_; }
  int slots() const noexcept { return points_ - 1; }
  Word dimension() const noexcept { return Word{1} << (2 * slots()); }

  static Slot slot(Word w, int s) { return static_cast<Slot>((w >> (2 * s)) & 3u); }
  static Word with_slot(Word w, int s, Slot v)
  {
    return (w & ~(Word{3} << (2 * s))) | (static_cast<Word>(v) << (2 * s));
  }
  static int slot_degree(Slot v) { return v == Slot::one ? 0 : (v == Slot::point ? 2 : 1); }
  static int slot_weight(Slot v) { return v == Slot::alpha ? 1 : (v == Slot::beta ? -1 : 0); }

  int degree(Word w) const;
  /// SL₂ weight: α counts +1, β counts -1.
  int weight(Word w) const;

  /// Product of two basis words: (sign, word), or nullopt when it vanishes.
  std::optional<std::pair<int, Word>> multiply(Word a, Word b) const;

  std::string word_name(Word w) const;

private:
  int points_;
};

using IntVector = std::map<Word, std::int64_t>;
using RatVector = std::map<Word, mpq_class>;

/// Sparse exact integer matrix acting on a FiberAlgebra, stored by columns.
class ActionMatrix
{
public:
  using Column = std::vector<std::pair<Word, std::int64_t>>;

  ActionMatrix() = default;
  explicit ActionMatrix(std::vector<Column> columns) : columns_(std::move(columns)) {}
  static ActionMatrix identity(Word dimension);

  Word dimension() const noexcept { return static_cast<Word>(columns_.size()); }
  const Column &column(Word w) const { return columns_.at(w); }
  std::int64_t entry(Word row, Word col) const;

  IntVector apply(const IntVector &v) const;
  RatVector apply(const RatVector &v) const;
  /// (*this) ∘ rhs: apply rhs first.
  ActionMatrix after(const ActionMatrix &rhs) const;

  friend bool operator==(const ActionMatrix &a, const ActionMatrix &b);

private:
  std::vector<Column> columns_;
};

/// Pullback action σ ↦ σ* of S_n on H•(E^{n-1}), generated by adjacent
/// transpositions. σ* is an anti-homomorphism: (στ)* = τ*σ*.
class FiberAction
{
public:
  explicit FiberAction(int n);

  int n() const noexcept { return algebra_.points(); }
  const FiberAlgebra &algebra() const noexcept { return algebra_; }
  /// Matrix of (i i+1)*, 1 ≤ i ≤ n-1.
  const ActionMatrix &generator(int i) const;

  /// σ* applied to a vector, composed from the generator matrices.
  IntVector apply(const Permutation &sigma, const IntVector &v) const;
  RatVector apply(const Permutation &sigma, const RatVector &v) const;
  ActionMatrix matrix(const Permutation &sigma) const;

  /// Trace of σ* on the (degree, weight) graded pieces.
  std::map<std::pair<int, int>, std::int64_t> graded_trace(const Permutation &sigma) const;

private:
  FiberAlgebra algebra_;
  std::vector<ActionMatrix> generators_;
};

/// Shared cached action for n points (1 ≤ n ≤ kMaxFiberPoints).
const FiberAction &fiber_action(int n);

inline constexpr int kMaxFiberPoints = 7;
inline constexpr int kMaxOpenStratumPoints = 6;

/// Matrix of the generator (i i+1)* on the n-point fiber algebra.
///
/// For i ≥ 2 this swaps slots i-1 and i with the Koszul sign. For (1 2) it
/// is the algebra map induced by τ(0, x₂, x₃, …) = (0, -x₂, x₃ - x₂, …):
/// ζ ↦ -ζ in slot 2 and ζ ↦ -pr₂*ζ + pr_k*ζ for k ≥ 3 on H¹, extended
/// multiplicatively.
const ActionMatrix &action_matrix(int n, int i);

/// Image of the alternating projector (1/n!) Σ sgn(σ) σ*.
struct AlternatingComponent
{
  int n = 0;
  /// (cohomological degree, SL₂ weight) -> dimension of the image.
  std::map<std::pair<int, int>, int> dims;
  /// Echelon basis of the image.
  std::vector<RatVector> basis;

  int total() const;
};

/// Exact rank computation: the projector is factored over the cosets of the
/// point stabilizers, applied blockwise and reduced by Gaussian elimination.
AlternatingComponent alternating_component(int n);

/// Same dimensions through the character formula Σ_μ sgn(μ)/z_μ tr(σ_μ*).
std::map<std::pair<int, int>, mpq_class> alternating_dims_by_trace(int n);

/// Σ_n-equivariant class of e_c of the open stratum D°_n ⊂ E^{n-1}, as
/// virtual characters attached to the local systems Sym^k ⊗ L^j.
struct EquivariantClass
{
  int n = 0;
  /// cycle type -> (degree c, weight w) -> trace of σ on the e_c pieces
  /// (signed by (-1)^c).
  std::map<Partition, std::map<std::pair<int, int>, mpq_class>> traces;
  /// (k, j) -> cycle type -> character value of the Sym^k ⊗ L^j multiplicity.
  std::map<std::pair<int, int>, std::map<Partition, mpq_class>> characters;

  /// ⟨sgn, χ_{k,j}⟩ for every (k, j) present.
  std::map<std::pair<int, int>, mpq_class> alternating_part() const;
  /// ch_n of the (k, j) character as a symmetric function of degree n.
  SymSeries characteristic(int k, int j, int max_degree) const;
};

/// Equivariant inclusion–exclusion over the σ-stable flats of the
/// diagonal/zero-section arrangement, weighted by the Möbius function of the
/// σ-stable subposet. 1 ≤ n ≤ kMaxOpenStratumPoints.
EquivariantClass ec_open_stratum(int n);

/// e_c(M_{1,1}, Sym^k R¹π_*Q): L for k = 0, 0 for k odd, -S[k+2] - 1 otherwise.
MotiveClass es_ec(int k);

/// A_c(M_{1,n}) = (-1)^{n-1} e_c(M_{1,1}, Sym^{n-1}), normalized.
MotiveClass interior_Ac(int n);

/// Σ_{n=1}^{N} A_c(M_{1,n}) t^n.
AltSeries a1_alternating(int max_degree);

/// Full a₁ up to degree max_degree ≤ kMaxOpenStratumPoints from the fiber
/// classes: Σ_n Σ_{k,j} ch(χ_{k,j}) · e_c(M_{1,1}, Sym^k) · L^j.
SymSeries a1_small(int max_degree);

} // namespace altmot::fiber
