#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altmot/oracles.hpp"
#include "altmot/symfunc.hpp"
#include "altmot/testing.hpp"

using namespace altmot;

namespace
{

const MotiveClass L = MotiveClass::lefschetz();

SymSeries pl(const Partition &lambda, int N, const MotiveClass &c = 1) { return SymSeries::power_sum(lambda, N, c); }

} // namespace

TEST_CASE("h, e and Schur functions")
{
  const int N = 6;
  CHECK(SymSeries::h(2, N) == pl({1, 1}, N, mpq_class(1, 2)) + pl({2}, N, mpq_class(1, 2)));
  CHECK(SymSeries::e(2, N) == pl({1, 1}, N, mpq_class(1, 2)) - pl({2}, N, mpq_class(1, 2)));
  CHECK(SymSeries::schur({1, 1, 1}, N) == SymSeries::e(3, N));
  CHECK(SymSeries::schur({4}, N) == SymSeries::h(4, N));
  CHECK(SymSeries::h(1, N) * SymSeries::h(1, N) == SymSeries::h(2, N) + SymSeries::e(2, N));
  CHECK(SymSeries::h(0, N) == SymSeries::scalar(1, N));
  CHECK_THROWS_AS(SymSeries::h(7, N), std::invalid_argument);
}

TEST_CASE("products and truncation")
{
  const int N = 3;
  CHECK(mul(SymSeries::p(1, N), SymSeries::p(1, N)) == pl({1, 1}, N));
  CHECK(mul(pl({1, 1}, N), pl({2}, N)).is_zero());
  CHECK_THROWS_AS(SymSeries::p(1, 3) + SymSeries::p(1, 4), std::invalid_argument);
  CHECK(pl({2, 1}, 5).truncated(2).is_zero());
  CHECK(pl({2, 1}, 5).min_degree() == 3);
  CHECK(SymSeries(5).min_degree() == -1);
}

TEST_CASE("inner product")
{
  for (int n = 1; n <= 6; ++n) {
    for (const auto &lambda : partitions_of(n))
      CHECK(inner(pl(lambda, n), pl(lambda, n), n) == MotiveClass(mpq_class(z_of(lambda))));
    for (const auto &a : partitions_of(n))
      for (const auto &b : partitions_of(n))
        CHECK(inner(SymSeries::schur(a, n), SymSeries::schur(b, n), n) == MotiveClass(a == b ? 1 : 0));
    CHECK(rank_of(SymSeries::schur(Partition::column(n), n), n) == 1);
  }
  CHECK(rank_of(SymSeries::schur({2, 1}, 3), 3) == 2);
}

TEST_CASE("Schur basis round trip")
{
  testing::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const SymSeries f = testing::random_series(rng, 8, n, n, 3);
    CHECK(from_schur(to_schur(f, n), 8) == f);
  }
}

TEST_CASE("p_derivative")
{
  const SymSeries d = p_derivative(pl({1, 1, 1}, 5), 1);
  CHECK(d.max_degree() == 4);
  CHECK(d == pl({1, 1}, 4, 3));
  CHECK(p_derivative(pl({2, 2, 1}, 6), 2) == pl({2, 1}, 4, 2));
  CHECK(p_derivative(pl({3}, 6), 1).is_zero());

  // Adjointness: ⟨p_k f, g⟩ = ⟨f, k ∂g/∂p_k⟩.
  testing::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    const SymSeries f = testing::random_series(rng, 8, n, n);
    const SymSeries g = testing::random_series(rng, 8, n + k, n + k);
    const MotiveClass lhs = inner(mul(SymSeries::p(k, 8), f), g, n + k);
    const MotiveClass rhs = inner(f.truncated(8 - k), p_derivative(g, k) * MotiveClass(k), n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("plethysm")
{
  const int N = 8;
  CHECK(plethysm(SymSeries::p(2, N), SymSeries::p(3, N)) == SymSeries::p(6, N));
  CHECK(plethysm(SymSeries::p(2, N), SymSeries::p(1, N) * L) == pl({2}, N, MotiveClass::lefschetz(2)));
  CHECK(plethysm(SymSeries::p(1, N) * MotiveClass::cusp(12), SymSeries::p(2, N)) == pl({2}, N, MotiveClass::cusp(12)));

  const SymSeries h22 = plethysm(SymSeries::h(2, N), SymSeries::h(2, N));
  CHECK(h22 == SymSeries::h(4, N) + SymSeries::schur({2, 2}, N));
  std::map<Partition, mpq_class> part;
  for (const auto &[lambda, c] : h22.component(4))
    part[lambda] = c.tate_coeff(0);
  CHECK(oracle::expand_power_sums(part) == oracle::h2_of_h2_by_substitution());
  CHECK(oracle::h2_of_h2_by_substitution() == oracle::h4_plus_s22_by_tableaux());

  CHECK_THROWS_AS(plethysm(SymSeries::p(1, N), SymSeries::scalar(1, N)), std::invalid_argument);
  CHECK_THROWS_AS(plethysm(SymSeries::p(1, N), SymSeries::p(1, N) * MotiveClass::cusp(12)), std::domain_error);
  CHECK_THROWS_AS(plethysm(SymSeries::p(1, N), SymSeries::p(1, N - 1)), std::invalid_argument);

  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const int M = 6;
    const SymSeries f = testing::random_series(rng, M, 1, 3);
    const SymSeries g = testing::random_series(rng, M, 1, 3);
    const SymSeries h = testing::random_series(rng, M, 1, 2);
    CHECK(plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h)));
    CHECK(plethysm(f + g, h) == plethysm(f, h) + plethysm(g, h));
    CHECK(plethysm(mul(f, g), h) == mul(plethysm(f, h), plethysm(g, h)));
  }
}

TEST_CASE("geom, log1m and divide")
{
  const int N = 3;
  const SymSeries p1 = SymSeries::p(1, N);
  CHECK(geom(p1) == SymSeries::scalar(1, N) + p1 + pl({1, 1}, N) + pl({1, 1, 1}, N));
  CHECK(log1m(SymSeries(N)).is_zero());
  CHECK(log1m(p1) == -(p1 + pl({1, 1}, N, mpq_class(1, 2)) + pl({1, 1, 1}, N, mpq_class(1, 3))));

  testing::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const int M = 6;
    const SymSeries g = testing::random_series(rng, M, 1, 3);
    const SymSeries one = SymSeries::scalar(1, M);
    CHECK(mul(geom(g), one - g) == one);
    const SymSeries f = testing::random_series(rng, M, 0, 3);
    CHECK(mul(divide(f, one + g), one + g) == f);
  }
}

TEST_CASE("omega and alt")
{
  const int N = 8;
  CHECK(omega(SymSeries::h(3, N)) == SymSeries::e(3, N));
  for (int n = 2; n <= N; ++n)
    CHECK(alt(SymSeries::h(n, N)).coefficients()[static_cast<std::size_t>(n)].is_zero());
  CHECK(alt(SymSeries::e(5, N))[5] == 1);

  // p1/(1+p1) has alternating part t/(1+t).
  const SymSeries p1 = SymSeries::p(1, N);
  const AltSeries a = alt(mul(p1, geom(-p1)));
  std::vector<mpq_class> want(N + 1, 0);
  for (int n = 1; n <= N; ++n)
    want[static_cast<std::size_t>(n)] = n % 2 == 1 ? 1 : -1;
  CHECK(a == alt_from_rationals(N, want));

  testing::Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const SymSeries f = testing::random_series(rng, N, 0, 4);
    const SymSeries g = testing::random_series(rng, N, 0, 4);
    CHECK(alt(mul(f, g)) == alt(f) * alt(g));
    CHECK(alt(f + g) == alt(f) + alt(g));
  }
}

TEST_CASE("p_k composed with a sign-free series has no alternating part")
{
  testing::Rng rng(26);
  const int N = 12;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % (N / n));
    const SymSeries f = testing::random_sign_free(rng, n, N);
    CHECK(alt(adams_plethysm(k, f)) == AltSeries(N));
  }
}
