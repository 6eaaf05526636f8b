#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altmot/motive.hpp"
#include "altmot/oracles.hpp"
#include "altmot/testing.hpp"

using namespace altmot;

namespace
{

const MotiveClass L = MotiveClass::lefschetz();

} // namespace

TEST_CASE("ring arithmetic")
{
  CHECK(L * L == MotiveClass::lefschetz(2));
  CHECK((-MotiveClass::cusp(12) - 1) + 1 == -MotiveClass::cusp(12));
  CHECK((L + 1) * (L - 1) == MotiveClass::lefschetz(2) - 1);
  CHECK(MotiveClass::cusp(12) * L == MotiveClass::cusp(12, 1));
  CHECK((L - L).is_zero());
  CHECK(MotiveClass(1) == MotiveClass::lefschetz(0));
  CHECK(MotiveClass(mpq_class(3, 2)).is_scalar());
  CHECK(!L.is_scalar());
  CHECK(MotiveClass::cusp(16, 2).max_lefschetz_degree() == 2);
  CHECK_THROWS_AS(MotiveClass::cusp(12) * MotiveClass::cusp(16), std::domain_error);
  CHECK_THROWS_AS(MotiveClass::cusp(3), std::invalid_argument);
  CHECK_THROWS_AS(MotiveClass::lefschetz(-1), std::invalid_argument);
}

TEST_CASE("S[2] normalizes to -L - 1")
{
  const MotiveClass s2 = MotiveClass::cusp(2);
  CHECK(s2 == -L - 1);
  CHECK(s2.normalized().is_tate_only());
  CHECK(s2.normalized() == s2.normalized().normalized());
  CHECK(!MotiveClass::cusp(4).is_zero());
}

TEST_CASE("adams")
{
  CHECK(adams(L, 2) == MotiveClass::lefschetz(2));
  CHECK(adams(3 + L, 3) == 3 + MotiveClass::lefschetz(3));
  CHECK_THROWS_AS(adams(MotiveClass::cusp(12), 2), std::domain_error);

  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const MotiveClass a = testing::random_tate_class(rng, 3);
    const MotiveClass b = testing::random_tate_class(rng, 3);
    const int j = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 4);
    CHECK(adams(adams(a, j), k) == adams(a, j * k));
    CHECK(adams(a * b, k) == adams(a, k) * adams(b, k));
    CHECK(adams(a + b, k) == adams(a, k) + adams(b, k));
  }
}

TEST_CASE("dim_cusp_forms")
{
  CHECK(dim_cusp_forms(12) == 1);
  CHECK(dim_cusp_forms(26) == 1);
  CHECK(dim_cusp_forms(24) == 2);
  CHECK(dim_cusp_forms(4) == 0);
  CHECK(dim_cusp_forms(2) == 0);
  CHECK(dim_cusp_forms(13) == 0);
  for (int k = 0; k <= 120; ++k)
    CHECK(dim_cusp_forms(k) == oracle::cusp_dimension_by_monomials(k));
}

TEST_CASE("realize")
{
  const Realization r = realize(L);
  CHECK(r.rank == 1);
  CHECK(r.hodge == std::map<std::pair<int, int>, mpq_class>{{{1, 1}, 1}});

  const Realization s = realize(-MotiveClass::cusp(12));
  CHECK(s.rank == -2);
  CHECK(s.hodge == std::map<std::pair<int, int>, mpq_class>{{{11, 0}, -1}, {{0, 11}, -1}});

  CHECK(realize(MotiveClass::cusp(14)).rank == 0);
  CHECK(realize(MotiveClass::cusp(14)).hodge.empty());
  CHECK(realize(MotiveClass::cusp(24, 1)).hodge.at({24, 1}) == 2);
  CHECK(realize(MotiveClass::cusp(2)).rank == -2);

  testing::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const MotiveClass a = testing::random_tate_class(rng, 3);
    const MotiveClass b = testing::random_tate_class(rng, 3);
    CHECK(realize(a * b).rank == realize(a).rank * realize(b).rank);
    CHECK(realize(a + b).rank == realize(a).rank + realize(b).rank);
  }
}

TEST_CASE("to_string")
{
  CHECK(MotiveClass().to_string() == "0");
  CHECK((-MotiveClass::cusp(12)).to_string().find("S[12]") != std::string::npos);
}
