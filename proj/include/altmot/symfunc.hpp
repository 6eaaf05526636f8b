#pragma once

#include <map>
#include <string>
#include <vector>

#include "altmot/combinatorics.hpp"
#include "altmot/motive.hpp"

namespace altmot
{

inline constexpr int kDefaultMaxDegree = 14;

/// Degree-truncated symmetric function series with MotiveClass coefficients,
/// stored in the power-sum basis: Σ_λ c_λ p_λ over |λ| ≤ max_degree.
///
/// Binary operations require equal truncation degrees and throw
/// std::invalid_argument otherwise. Operations that lose information at the
/// top (p-derivatives) return a series with a smaller truncation degree.
class SymSeries
{
public:
  using Component = std::map<Partition, MotiveClass>;

  explicit SymSeries(int max_degree = kDefaultMaxDegree);

  static SymSeries scalar(const MotiveClass &c, int max_degree);
  static SymSeries power_sum(const Partition &lambda, int max_degree, const MotiveClass &coeff = 1);
  static SymSeries p(int k, int max_degree) { return power_sum(Partition{k}, max_degree); }
  static SymSeries h(int k, int max_degree);
  static SymSeries e(int k, int max_degree);
  static SymSeries schur(const Partition &lambda, int max_degree);

  int max_degree() const noexcept { return max_degree_; }
  const Component &component(int n) const;
  const std::vector<Component> &components() const noexcept { return terms_; }
  MotiveClass coefficient(const Partition &lambda) const;
  MotiveClass constant_term() const { return coefficient(Partition{}); }

  /// Adds c·p_λ; terms above the truncation degree are dropped silently.
  void add_term(const Partition &lambda, const MotiveClass &c);

  bool is_zero() const noexcept;
  /// Lowest degree carrying a nonzero term, or -1 for the zero series.
  int min_degree() const noexcept;
  bool is_tate_only() const noexcept;
  std::size_t term_count() const noexcept;

  /// Same series with terms above `degree` discarded.
  SymSeries truncated(int degree) const;
  /// Only the degree-n component.
  SymSeries degree_part(int n) const;

  SymSeries &operator+=(const SymSeries &rhs);
  SymSeries &operator-=(const SymSeries &rhs);
  SymSeries &operator*=(const MotiveClass &c);

  friend SymSeries operator+(SymSeries a, const SymSeries &b) { return a += b; }
  friend SymSeries operator-(SymSeries a, const SymSeries &b) { return a -= b; }
  friend SymSeries operator*(const SymSeries &a, const SymSeries &b);
  friend SymSeries operator*(SymSeries a, const MotiveClass &c) { return a *= c; }
  friend SymSeries operator*(const MotiveClass &c, SymSeries a) { return a *= c; }
  SymSeries operator-() const;

  friend bool operator==(const SymSeries &a, const SymSeries &b);

private:
  int max_degree_;
  std::vector<Component> terms_;
};

/// Graded product, truncated.
SymSeries mul(const SymSeries &f, const SymSeries &g);

/// ⟨f_n, g_n⟩ with ⟨p_λ, p_μ⟩ = δ_{λμ} z_λ.
MotiveClass inner(const SymSeries &f, const SymSeries &g, int n);

/// Formal partial derivative ∂f/∂p_k. The result is truncated at
/// max_degree - k.
SymSeries p_derivative(const SymSeries &f, int k);

/// p_k ∘ g: p_i ↦ p_{ik} and coefficients through ψ^k.
SymSeries adams_plethysm(int k, const SymSeries &g);

/// Plethysm f ∘ g. g must have zero constant term and Tate-only
/// coefficients; the coefficients of f are carried along unchanged.
SymSeries plethysm(const SymSeries &f, const SymSeries &g);

/// log(1 - g) = -Σ_{m≥1} g^m / m.
SymSeries log1m(const SymSeries &g);
/// 1/(1 - g) = Σ_{m≥0} g^m.
SymSeries geom(const SymSeries &g);
/// f / g for g with constant term exactly 1.
SymSeries divide(const SymSeries &f, const SymSeries &g);

/// Schur coefficients of the degree-n component: λ ↦ ⟨f_n, s_λ⟩.
std::map<Partition, MotiveClass> to_schur(const SymSeries &f, int n);
/// Inverse of to_schur for a single degree.
SymSeries from_schur(const std::map<Partition, MotiveClass> &schur, int max_degree);

/// The involution ω (tensoring with the sign representation):
/// p_λ ↦ (-1)^{e(λ)} p_λ.
SymSeries omega(const SymSeries &f);

/// Rank (dimension) functional on the degree-n component: ⟨f_n, h_1^n⟩.
MotiveClass rank_of(const SymSeries &f, int n);

/// One-variable power series Σ_n c_n t^n with MotiveClass coefficients.
class AltSeries
{
public:
  explicit AltSeries(int max_degree = kDefaultMaxDegree);
  AltSeries(int max_degree, std::vector<MotiveClass> coeffs);

  int max_degree() const noexcept { return max_degree_; }
  const MotiveClass &operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  void set(int n, MotiveClass c);
  const std::vector<MotiveClass> &coefficients() const noexcept { return coeffs_; }

  AltSeries &operator+=(const AltSeries &rhs);
  friend AltSeries operator+(AltSeries a, const AltSeries &b) { return a += b; }
  friend AltSeries operator*(const AltSeries &a, const AltSeries &b);
  friend bool operator==(const AltSeries &a, const AltSeries &b);

  std::string to_string() const;

private:
  int max_degree_;
  std::vector<MotiveClass> coeffs_;
};

/// Alt(f) = Σ_n ⟨s_{1^n}, f_n⟩ t^n, using ⟨s_{1^n}, p_λ⟩ = (-1)^{e(λ)}.
AltSeries alt(const SymSeries &f);

/// AltSeries with coeffs[n] at t^n; entries beyond max_degree are ignored.
AltSeries alt_from_rationals(int max_degree, const std::vector<mpq_class> &coeffs);

} // namespace altmot
