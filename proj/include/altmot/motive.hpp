#pragma once

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace altmot
{

/// num/den in canonical form (mpq_class(num, den) does not reduce).
inline mpq_class rational(long num, long den)
{
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Element of the coefficient ring: a rational combination of Lefschetz
/// powers L^j and cusp-form symbols S[k]·L^j (k even, k ≥ 2).
///
/// The unit 1 is identified with L^0. Symbols S[2] may be stored as
/// produced; normalized() rewrites them through S[2] = -L - 1, and equality
/// compares normalized forms.
class MotiveClass
{
public:
  using TateTerms = std::map<int, mpq_class>;
  using CuspTerms = std::map<std::pair<int, int>, mpq_class>; // (k, j) -> coefficient

  MotiveClass() = default;
  MotiveClass(const mpq_class &c); // NOLINT: scalars embed as c·L^0
  MotiveClass(int c) : MotiveClass(mpq_class(c)) {} // NOLINT

  /// coeff · L^j.
  static MotiveClass lefschetz(int j = 1, const mpq_class &coeff = 1);
  /// coeff · S[k] · L^j. Throws std::invalid_argument unless k is even and ≥ 2.
  static MotiveClass cusp(int k, int j = 0, const mpq_class &coeff = 1);

  const TateTerms &tate_terms() const noexcept { return tate_; }
  const CuspTerms &cusp_terms() const noexcept { return cusp_; }
  mpq_class tate_coeff(int j) const;
  mpq_class cusp_coeff(int k, int j = 0) const;

  bool is_zero() const noexcept { return tate_.empty() && cusp_.empty(); }
  bool is_tate_only() const noexcept { return cusp_.empty(); }
  /// True for a pure rational multiple of L^0.
  bool is_scalar() const noexcept;
  /// Highest L-power over all terms (Tate and cusp), -1 for zero.
  int max_lefschetz_degree() const noexcept;

  MotiveClass normalized() const;

  MotiveClass &operator+=(const MotiveClass &rhs);
  MotiveClass &operator-=(const MotiveClass &rhs);
  MotiveClass &operator*=(const MotiveClass &rhs);
  MotiveClass &operator*=(const mpq_class &c);

  friend MotiveClass operator+(MotiveClass a, const MotiveClass &b) { return a += b; }
  friend MotiveClass operator-(MotiveClass a, const MotiveClass &b) { return a -= b; }
  friend MotiveClass operator*(const MotiveClass &a, const MotiveClass &b);
  friend MotiveClass operator*(MotiveClass a, const mpq_class &c) { return a *= c; }
  friend MotiveClass operator*(const mpq_class &c, MotiveClass a) { return a *= c; }
  MotiveClass operator-() const;

  /// Equality in the Grothendieck group (after normalization).
  friend bool operator==(const MotiveClass &a, const MotiveClass &b);

  /// Adds c·L^j in place; faster than building a temporary class.
  void add_tate(int j, const mpq_class &c);
  void add_cusp(int k, int j, const mpq_class &c);

  /// Accumulates a·b into *this.
  void add_product(const MotiveClass &a, const MotiveClass &b);

  std::string to_string() const;

private:
  TateTerms tate_;
  CuspTerms cusp_;
};

/// Adams operation ψ^k: L^j ↦ L^{jk}. Throws std::domain_error on cusp symbols.
MotiveClass adams(const MotiveClass &a, int k);

/// Dimension of the space of level-one cusp forms of weight k.
int dim_cusp_forms(int k);

struct Realization
{
  mpq_class rank;
  /// (p, q) -> multiplicity; zero multiplicities are dropped.
  std::map<std::pair<int, int>, mpq_class> hodge;

  friend bool operator==(const Realization &, const Realization &) = default;
};

/// Rank and Hodge numbers: L^j ↦ (j, j); S[k]·L^j ↦ dim S_k copies each of
/// (k-1+j, j) and (j, k-1+j).
Realization realize(const MotiveClass &a);

} // namespace altmot
