#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altmot/genus1_boundary.hpp"
#include "altmot/genus1_fiber.hpp"

using namespace altmot;

namespace
{

const MotiveClass L = MotiveClass::lefschetz();

AltSeries alternating_sign(int N, const mpq_class &scale, int ratio)
{
  // scale · t / (1 - ratio·t)
  std::vector<mpq_class> c(static_cast<std::size_t>(N) + 1, 0);
  mpq_class v = scale;
  for (int n = 1; n <= N; ++n, v *= ratio)
    c[static_cast<std::size_t>(n)] = v;
  return alt_from_rationals(N, c);
}

// Drops cusp symbols of weights without cusp forms.
MotiveClass without_empty_cusp(const MotiveClass &c)
{
  const MotiveClass n = c.normalized();
  MotiveClass out;
  for (const auto &[j, q] : n.tate_terms())
    out.add_tate(j, q);
  for (const auto &[kj, q] : n.cusp_terms())
    if (dim_cusp_forms(kj.first) > 0)
      out.add_cusp(kj.first, kj.second, q);
  return out;
}

} // namespace

TEST_CASE("zero inputs")
{
  const SymSeries zero(8);
  CHECK(genus1::necklace_from(zero).is_zero());
  CHECK(genus1::correction_from(zero, zero).is_zero());
  CHECK_THROWS_AS(genus1::correction_from(zero, SymSeries(7)), std::invalid_argument);
}

TEST_CASE("alternating parts of the necklace and correction terms")
{
  const int N = 12;
  const auto tables = genus0::build_tables(N);
  const SymSeries neck = genus1::necklace_series(tables);
  const SymSeries corr = genus1::correction_series(tables);
  CHECK(alt(neck) == alternating_sign(N, mpq_class(1, 2), -1));
  CHECK(alt(neck * MotiveClass(2)) == alternating_sign(N, 1, -1));
  CHECK(alt(corr) == alternating_sign(N, mpq_class(1, 2), 1));

  std::vector<mpq_class> odd(N + 1, 0);
  for (int n = 1; n <= N; n += 2)
    odd[static_cast<std::size_t>(n)] = 1;
  CHECK(alt(neck + corr) == alt_from_rationals(N, odd));
  CHECK(genus1::boundary_alt(tables) == alt_from_rationals(N, odd));

  CHECK(neck.is_tate_only());
  CHECK(corr.is_tate_only());
}

TEST_CASE("necklace in degree 2")
{
  // log(1 - a0'') and log(1 - ψ2 a0'') give ½A₂ + ¼p₁² + ¼p₂, where A₂ is the
  // degree-2 part of a0''. Only the p₁⁴ term of a₀ contributes to the rank of
  // A₂: 12 · (L - 2)/24 · 2 = L - 2.
  const SymSeries neck = genus1::necklace_series(6);
  CHECK(rank_of(neck, 2) == (L - 1) * mpq_class(1, 2));
  CHECK(neck.degree_part(1) == SymSeries::p(1, 6) * mpq_class(1, 2));
}

TEST_CASE("composition with h1 + b0' keeps the alternating part")
{
  const int N = 10;
  const auto tables = genus0::build_tables(N);
  const SymSeries inner = genus1::necklace_series(tables) + genus1::correction_series(tables);
  for (int n = 1; n <= N; ++n) {
    const SymSeries part = inner.degree_part(n);
    CHECK(alt(plethysm(part, genus1::tree_insertion(tables))) == alt(part));
  }
}

TEST_CASE("b1 from the small fiber computation")
{
  const int N = fiber::kMaxOpenStratumPoints;
  const auto tables = genus0::build_tables(N);
  const SymSeries a1 = fiber::a1_small(N);
  const SymSeries b1 = genus1::b1_series(tables, a1);
  CHECK(b1.degree_part(1) == SymSeries::p(1, N) * (L + 1));

  const auto parts = genus1::assemble(tables, a1);
  CHECK(parts.composed == b1);
  CHECK(parts.inner_sum == a1 + parts.necklace + parts.correction);

  for (int n = 1; n <= 4; ++n)
    for (const auto &[lambda, c0] : b1.component(n)) {
      const MotiveClass c = without_empty_cusp(c0);
      CHECK(c.is_tate_only());
      const int top = n;
      CHECK(c.max_lefschetz_degree() <= top);
      for (int j = 0; j <= top; ++j)
        CHECK(c.tate_coeff(j) == c.tate_coeff(top - j));
    }

  std::vector<mpq_class> betti;
  const MotiveClass rank3 = without_empty_cusp(rank_of(b1, 3));
  for (int j = 0; j <= 3; ++j)
    betti.push_back(rank3.tate_coeff(j));
  CHECK(betti == std::vector<mpq_class>{1, 5, 5, 1});
  std::vector<mpq_class> betti4;
  const MotiveClass rank4 = without_empty_cusp(rank_of(b1, 4));
  for (int j = 0; j <= 4; ++j)
    betti4.push_back(rank4.tate_coeff(j));
  CHECK(betti4 == std::vector<mpq_class>{1, 12, 23, 12, 1});
}

TEST_CASE("alternating part of b1")
{
  const int N = 12;
  const SymSeries b1 = genus1::b1_series(N, genus1::interior_a1(N));
  const AltSeries a = alt(b1);
  CHECK(a[1] == L + 1);
  for (int n = 2; n <= N; ++n) {
    const MotiveClass want = n % 2 == 1 ? -MotiveClass::cusp(n + 1) : MotiveClass();
    CHECK(without_empty_cusp(a[n]) == without_empty_cusp(want));
  }
  CHECK(alt(genus1::interior_a1(N)) == fiber::a1_alternating(N));
}
