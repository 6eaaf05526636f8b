#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altmot/genus0.hpp"
#include "altmot/oracles.hpp"

using namespace altmot;

namespace
{

const MotiveClass L = MotiveClass::lefschetz();

} // namespace

TEST_CASE("closed_point_count")
{
  CHECK(genus0::closed_point_count(1) == L + 1);
  CHECK(genus0::closed_point_count(2) == (MotiveClass::lefschetz(2) - L) * mpq_class(1, 2));
  CHECK(genus0::closed_point_count(3) == (MotiveClass::lefschetz(3) - L) * mpq_class(1, 3));
  CHECK_THROWS_AS(genus0::closed_point_count(0), std::invalid_argument);
}

TEST_CASE("a0 examples")
{
  const SymSeries a0 = genus0::a0_series(6);
  CHECK(a0.degree_part(3) == SymSeries::h(3, 6));
  CHECK(a0.coefficient({1, 1, 1, 1}) * MotiveClass(24) == L - 2);
  CHECK(a0.coefficient({2, 1, 1}) * MotiveClass(4) == L);
  CHECK(a0.degree_part(4) == SymSeries::schur({4}, 6) * L - SymSeries::schur({2, 2}, 6));
  CHECK(rank_of(a0, 5) == MotiveClass::lefschetz(2) - L * MotiveClass(5) + 6);
  CHECK(a0.is_tate_only());
  CHECK_THROWS_AS(genus0::a0_series(2), std::invalid_argument);

  for (int n = 3; n <= 6; ++n)
    for (const auto &[lambda, c] : a0.component(n))
      CHECK(c.max_lefschetz_degree() <= n - 3);
}

TEST_CASE("a0 agrees with brute-force twisted point counts")
{
  const SymSeries a0 = genus0::a0_series(5);
  for (int n = 4; n <= 5; ++n)
    for (const auto &lambda : partitions_of(n)) {
      std::vector<std::pair<int, mpq_class>> points;
      for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        int q = 1;
        for (int i = 0; i < m; ++i)
          q *= p;
        const mpq_class count(oracle::twisted_configuration_count(p, m, lambda));
        points.emplace_back(q, count / (mpq_class(q) * q * q - q));
      }
      const auto poly = oracle::interpolate(points);
      MotiveClass want;
      for (std::size_t j = 0; j < poly.size(); ++j)
        want.add_tate(static_cast<int>(j), poly[j]);
      CHECK(a0.coefficient(lambda) * MotiveClass(mpq_class(z_of(lambda))) == want);
    }
}

TEST_CASE("ch_lie")
{
  const int N = 10;
  const SymSeries lie = genus0::ch_lie(N);
  CHECK(omega(lie.degree_part(3)) == SymSeries::h(3, N));
  CHECK(rank_of(omega(lie), 4) == 2);
  for (int n = 3; n <= N; ++n) {
    mpz_class fact = 1;
    for (int i = 2; i <= n - 2; ++i)
      fact *= i;
    CHECK(rank_of(lie, n) == MotiveClass(mpq_class(fact)));
  }

  // Σ (-1)^{n-3} ω(Lie_n) = -(1 + p1) Σ μ(n)/n log(1 + p_n) + h1 + e2.
  SymSeries signed_sum(N);
  for (int n = 3; n <= N; ++n)
    signed_sum += omega(lie.degree_part(n)) * MotiveClass(n % 2 == 1 ? 1 : -1);
  SymSeries logs(N);
  for (int n = 1; n <= N; ++n)
    if (moebius(n) != 0)
      logs += log1m(-SymSeries::p(n, N)) * MotiveClass(rational(moebius(n), n));
  const SymSeries rhs = -mul(SymSeries::scalar(1, N) + SymSeries::p(1, N), logs) + SymSeries::h(1, N) + SymSeries::e(2, N);
  CHECK(signed_sum == rhs);

  // Second derivatives used by the boundary computation.
  const SymSeries d11 = p_derivative(p_derivative(signed_sum, 1), 1);
  const SymSeries p1 = SymSeries::p(1, N - 2);
  CHECK(d11 == mul(p1, geom(-p1)));
  const SymSeries d2 = p_derivative(signed_sum, 2);
  const SymSeries p2 = SymSeries::p(2, N - 2);
  CHECK(d2 == mul(SymSeries::p(1, N - 2) - p2, geom(-p2)) * MotiveClass(mpq_class(1, 2)));
}

TEST_CASE("b0_prime")
{
  const int N = 8;
  const SymSeries b = genus0::b0_prime(N);
  CHECK(b.degree_part(2) == SymSeries::h(2, N));
  CHECK(b.degree_part(3) == SymSeries::h(3, N) * (L + 1));
  CHECK(rank_of(b, 4) == MotiveClass::lefschetz(2) + L * MotiveClass(5) + 1);

  // Fixed point equation b0' = a0' ∘ (h1 + b0').
  const SymSeries a0p = p_derivative(genus0::a0_series(N + 1), 1);
  CHECK(plethysm(a0p, SymSeries::h(1, N) + b) == b);

  for (int n = 2; n <= N; ++n)
    for (const auto &[lambda, c] : b.component(n)) {
      const int top = n - 2;
      CHECK(c.max_lefschetz_degree() <= top);
      for (int j = 0; j <= top; ++j)
        CHECK(c.tate_coeff(j) == c.tate_coeff(top - j));
    }
}

TEST_CASE("poincare_schur")
{
  const auto h4 = genus0::poincare_schur(4);
  REQUIRE(h4.size() == 2);
  CHECK(h4[0] == std::map<Partition, mpq_class>{{Partition{4}, 1}});
  CHECK(h4[1] == std::map<Partition, mpq_class>{{Partition{2, 2}, 1}});

  const auto h5 = genus0::poincare_schur(5);
  REQUIRE(h5.size() == 3);
  CHECK(h5[0] == std::map<Partition, mpq_class>{{Partition{5}, 1}});
  mpq_class rank1 = 0;
  for (const auto &[lambda, m] : h5[1])
    rank1 += m * oracle::hook_length_dimension(lambda);
  CHECK(rank1 == 5);

  for (int n = 3; n <= 8; ++n)
    CHECK(genus0::row_bound_violations(n).empty());
  CHECK_THROWS_AS(genus0::poincare_schur(11), std::out_of_range);
}

TEST_CASE("build_tables truncations")
{
  const auto t = genus0::build_tables(8);
  CHECK(t.a0.max_degree() == 10);
  CHECK(t.a0_prime.max_degree() == 9);
  CHECK(t.a0_pp.max_degree() == 8);
  CHECK(t.a0_dot.max_degree() == 8);
  CHECK(t.b0_prime.max_degree() == 8);
  CHECK(t.a0_pp == p_derivative(p_derivative(genus0::a0_series(10), 1), 1));

  // Alt(a0'') = t/(1+t).
  std::vector<mpq_class> want(9, 0);
  for (int n = 1; n <= 8; ++n)
    want[static_cast<std::size_t>(n)] = n % 2 == 1 ? 1 : -1;
  CHECK(alt(t.a0_pp) == alt_from_rationals(8, want));
}
