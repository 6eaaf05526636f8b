#include "altmot/genus0.hpp"

#include <stdexcept>

namespace altmot::genus0
{

namespace
{

// Dense polynomial in L, index = power.
using Poly = std::vector<mpq_class>;

void trim(Poly &p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Exact division; throws when the remainder is nonzero.
Poly poly_divexact(Poly num, const Poly &den)
{
  trim(num);
  if (den.empty())
    throw std::logic_error("division by the zero polynomial");
  if (num.empty())
    return {};
  if (num.size() < den.size())
    throw std::logic_error("non-exact polynomial division");
  Poly quot(num.size() - den.size() + 1, mpq_class(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const mpq_class c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty())
    throw std::logic_error("non-exact polynomial division in the twisted point count");
  trim(quot);
  return quot;
}

Poly closed_points(int d)
{
  Poly out(static_cast<std::size_t>(d) + 1, mpq_class(0));
  for (auto e : divisors(d)) {
    const int mu = moebius(d / e);
    out[static_cast<std::size_t>(e)] += mu;
    out[0] += mu;
  }
  for (auto &c : out)
    c /= d;
  trim(out);
  return out;
}

MotiveClass to_class(const Poly &p)
{
  MotiveClass out;
  for (std::size_t j = 0; j < p.size(); ++j)
    out.add_tate(static_cast<int>(j), p[j]);
  return out;
}

SymSeries with_truncation(const SymSeries &s, int degree)
{
  SymSeries out(degree);
  for (int n = 0; n <= std::min(degree, s.max_degree()); ++n)
    for (const auto &[lambda, c] : s.component(n))
      out.add_term(lambda, c);
  return out;
}

} // namespace

MotiveClass closed_point_count(int d)
{
  if (d < 1)
    throw std::invalid_argument("closed_point_count: degree must be positive");
  return to_class(closed_points(d));
}

SymSeries a0_series(int max_degree)
{
  if (max_degree < 3)
    throw std::invalid_argument("a0_series: minimum degree 3");
  const Poly pgl2 = {0, -1, 0, 1}; // q³ - q
  std::vector<Poly> m(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 1; d <= max_degree; ++d)
    m[static_cast<std::size_t>(d)] = closed_points(d);

  SymSeries out(max_degree);
  for (int n = 3; n <= max_degree; ++n)
    for (const auto &lambda : partitions_of(n)) {
      Poly count = {1};
      for (int d = 1; d <= n; ++d) {
        const int cycles = lambda.multiplicity(d);
        for (int i = 0; i < cycles; ++i) {
          Poly factor = m[static_cast<std::size_t>(d)];
          factor.resize(std::max<std::size_t>(factor.size(), 1), mpq_class(0));
          factor[0] -= i;
          for (auto &c : factor)
            c *= d;
          count = poly_mul(count, factor);
        }
      }
      Poly quotient = poly_divexact(count, pgl2);
      const mpq_class inv_z = mpq_class(1) / mpq_class(z_of(lambda));
      for (auto &c : quotient)
        c *= inv_z;
      out.add_term(lambda, to_class(quotient));
    }
  return out;
}

SymSeries ch_lie(int max_degree)
{
  if (max_degree < 3)
    throw std::invalid_argument("ch_lie: minimum degree 3");
  const int N = max_degree;
  SymSeries sum(N);
  for (int n = 1; n <= N; ++n) {
    const int mu = moebius(n);
    if (mu == 0)
      continue;
    sum += log1m(SymSeries::p(n, N)) * MotiveClass(rational(mu, n));
  }
  SymSeries one_minus_p1 = SymSeries::scalar(1, N) - SymSeries::p(1, N);
  return one_minus_p1 * sum + SymSeries::h(1, N) - SymSeries::h(2, N);
}

SymSeries b0_prime(int max_degree)
{
  if (max_degree < 2)
    throw std::invalid_argument("b0_prime: minimum degree 2");
  const int N = max_degree;
  const SymSeries a0p = p_derivative(a0_series(std::max(N + 1, 3)), 1).truncated(N);

  // The degree-m part of a₀′ ∘ (h₁ + b) only involves b in degrees < m.
  SymSeries b(1);
  for (int m = 2; m <= N; ++m) {
    const SymSeries inner = SymSeries::h(1, m) + with_truncation(b, m);
    b = plethysm(a0p.truncated(m), inner);
  }
  const SymSeries check = plethysm(a0p, SymSeries::h(1, N) + b);
  if (!(check == b))
    throw std::logic_error("b0_prime: fixed-point recursion did not converge");
  return b;
}

Genus0Tables build_tables(int max_degree)
{
  if (max_degree < 3)
    throw std::invalid_argument("build_tables: minimum degree 3");
  Genus0Tables t;
  t.max_degree = max_degree;
  t.a0 = a0_series(max_degree + 2);
  t.a0_prime = p_derivative(t.a0, 1);
  t.a0_pp = p_derivative(t.a0_prime, 1);
  t.a0_dot = p_derivative(t.a0, 2);
  t.b0_prime = b0_prime(max_degree);
  t.ch_lie = ch_lie(max_degree);
  return t;
}

std::vector<std::map<Partition, mpq_class>> poincare_schur(int n)
{
  if (n < 3 || n > kMaxPoincareN)
    throw std::out_of_range("poincare_schur: n must lie in [3, " + std::to_string(kMaxPoincareN) + "]");
  const int d = n - 3;
  const SymSeries a0 = a0_series(n);

  // Split the degree-n component by powers of L.
  std::vector<SymSeries> layers(static_cast<std::size_t>(d) + 1, SymSeries(n));
  for (const auto &[lambda, c] : a0.component(n)) {
    if (!c.is_tate_only())
      throw std::logic_error("a0 carries non-Tate coefficients");
    for (const auto &[j, v] : c.tate_terms()) {
      if (j < 0 || j > d)
        throw std::logic_error("a0 L-degree outside [0, n-3]");
      layers[static_cast<std::size_t>(j)].add_term(lambda, MotiveClass(v));
    }
  }

  std::vector<std::map<Partition, mpq_class>> out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    const int sign = (i % 2 == 0) ? 1 : -1;
    for (const auto &[lambda, c] : to_schur(layers[static_cast<std::size_t>(d - i)], n))
      out[static_cast<std::size_t>(i)].emplace(lambda, c.tate_coeff(0) * sign);
  }
  return out;
}

std::vector<RowViolation> row_bound_violations(int n)
{
  std::vector<RowViolation> out;
  const auto table = poincare_schur(n);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (const auto &[lambda, mult] : table[i])
      if (mult != 0 && lambda.length() > static_cast<int>(i) + 1)
        out.push_back({n, static_cast<int>(i), lambda});
  return out;
}

} // namespace altmot::genus0
