#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "altmot/combinatorics.hpp"
#include "altmot/symfunc.hpp"

// Brute-force computations that share no code path with the engine they
// check. They are slow and only meant for small inputs.
namespace altmot::oracle
{

/// p(n) from Euler's pentagonal number recurrence.
std::int64_t pentagonal_partition_count(int n);

/// n! / ∏ hook lengths.
std::int64_t hook_length_dimension(const Partition &lambda);

/// μ(0̂, P) in Π_n by the defining recursion μ(0̂,P) = -Σ_{Q<P} μ(0̂,Q),
/// with blocks compared by brute force. Keyed by the sorted block list.
std::map<std::vector<std::vector<int>>, std::int64_t> partition_lattice_mobius(int n);

/// dim M_k - 1 with dim M_k = #{(a, b) : 4a + 6b = k}; 0 for k < 12 odd or
/// non-positive.
int cusp_dimension_by_monomials(int k);

/// Finite field F_{p^e} with elements encoded as base-p digit vectors.
class PrimeField
{
public:
  PrimeField(int p, int e);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  /// a^(p^r).
  std::uint64_t frobenius(std::uint64_t a, int r) const;
  /// Elements fixed by x ↦ x^(p^r).
  std::vector<std::uint64_t> fixed_points(int r) const;

private:
  std::vector<int> digits(std::uint64_t a) const;
  std::uint64_t encode(const std::vector<int> &d) const;

  int p_;
  int e_;
  std::uint64_t size_;
  std::vector<int> modulus_; // monic, degree e, low to high
  std::vector<std::vector<int>> frob_; // matrix of x ↦ x^p, columns = images of basis
};

/// Number of labeled n-point configurations on P¹ over the algebraic closure
/// of F_q with x_{σ(i)} = Frob_q(x_i), for σ of the given cycle type.
/// q = p^m must be a prime power.
std::int64_t twisted_configuration_count(int p, int m, const Partition &cycle_type);

/// Lagrange interpolation of the values at distinct integer nodes.
std::vector<mpq_class> interpolate(const std::vector<std::pair<int, mpq_class>> &points);

/// Polynomial in four commuting variables, keyed by exponent vector.
using Poly4 = std::map<std::array<int, 4>, mpq_class>;

/// Monomial expansion of Σ c_λ p_λ (degree n only) in four variables.
Poly4 expand_power_sums(const std::map<Partition, mpq_class> &component);
/// h₂[h₂] by substituting the monomials of h₂ into h₂.
Poly4 h2_of_h2_by_substitution();
/// h₄ + s₂₂ from semistandard tableaux.
Poly4 h4_plus_s22_by_tableaux();

/// Hodge–Deligne polynomial of configurations of n-1 distinct points on
/// E∖{0}: ∏_{i=1}^{n-1} ([E] - i), [E] = 1 - x - y + xy. Keyed by (x, y)
/// exponents.
std::map<std::pair<int, int>, mpq_class> open_stratum_polynomial(int n);

} // namespace altmot::oracle
