#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altmot/genus1_fiber.hpp"
#include "altmot/json_io.hpp"
#include "altmot/pipeline.hpp"
#include "altmot/testing.hpp"

using namespace altmot;

namespace
{

const MotiveClass L = MotiveClass::lefschetz();

} // namespace

TEST_CASE("main_theorem examples")
{
  const auto r11 = pipeline::main_theorem(11);
  CHECK(r11.total == -MotiveClass::cusp(12));
  CHECK(r11.interior == -MotiveClass::cusp(12) - 1);
  CHECK(r11.boundary == 1);
  CHECK(r11.realization.rank == -2);
  CHECK(r11.realization.hodge == std::map<std::pair<int, int>, mpq_class>{{{11, 0}, -1}, {{0, 11}, -1}});

  const auto r13 = pipeline::main_theorem(13);
  CHECK(r13.total == -MotiveClass::cusp(14));
  CHECK(r13.realization.rank == 0);

  CHECK(pipeline::main_theorem(10).total.is_zero());
  CHECK(pipeline::main_theorem(1).total == L + 1);
  CHECK(pipeline::main_theorem(15).total == -MotiveClass::cusp(16));
  CHECK(pipeline::main_theorem(15).realization.rank == -2);

  CHECK_THROWS_AS(pipeline::main_theorem(0), std::out_of_range);
  CHECK_THROWS_AS(pipeline::main_theorem(21), std::out_of_range);
}

TEST_CASE("main_theorem within the default truncation")
{
  for (int n = 1; n <= kDefaultMaxDegree; ++n) {
    const auto r = pipeline::main_theorem(n);
    CHECK(r.n == n);
    CHECK(r.total == r.interior + r.boundary);
    CHECK(r.interior == fiber::interior_Ac(n));
    CHECK(r.boundary == (n % 2 == 1 ? 1 : 0));
    if (n >= 2)
      CHECK(r.total.is_tate_only() == (n % 2 == 0));
    if (n >= 2 && n % 2 == 1)
      CHECK(r.total == -MotiveClass::cusp(n + 1));
    CHECK(r.realization == realize(r.total));
  }
  CHECK(pipeline::boundary_alt_cached(3).max_degree() == kDefaultMaxDegree);
  CHECK(&pipeline::boundary_alt_cached(3) == &pipeline::boundary_alt_cached(3));
}

TEST_CASE("rational strings")
{
  CHECK(json::rational_to_string(3) == "3/1");
  CHECK(json::rational_to_string(mpq_class(-1, 2)) == "-1/2");
  CHECK(json::rational_from_string("3") == 3);
  CHECK(json::rational_from_string("6/4") == mpq_class(3, 2));
  CHECK(json::rational_from_string("-6/4").get_den() == 2);
  CHECK_THROWS_AS(json::rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(json::rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("JSON round trips")
{
  const MotiveClass c = -MotiveClass::cusp(12, 1) + L * mpq_class(2, 3) - 1;
  const auto j = json::to_json(c);
  CHECK(j.at("tate").is_array());
  CHECK(j.at("cusp").at(0).at(0) == 12);
  CHECK(json::motive_from_json(j) == c);
  CHECK_THROWS_AS(json::motive_from_json(json::json::parse(R"({"tate": [], "cusp": [[3, 0, "1"]]})")),
                  std::invalid_argument);

  testing::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const SymSeries f = testing::random_series(rng, 6, 0, 6);
    CHECK(json::symseries_from_json(json::to_json(f)) == f);
    CHECK(json::symseries_from_json(json::to_json(f, json::Basis::schur)) == f);
    const MotiveClass m = testing::random_tate_class(rng, 4) + MotiveClass::cusp(16, 1, rng() % 5);
    CHECK(json::motive_from_json(json::to_json(m)) == m);
    CHECK(json::motive_from_json(json::json::parse(json::to_json(m).dump())) == m);
  }
}

TEST_CASE("AltSeries and envelope")
{
  const AltSeries a = pipeline::boundary_alt_cached(14);
  const auto j = json::to_json(a);
  CHECK(j.at("max_degree") == a.max_degree());
  CHECK(j.at("coefficients").size() == static_cast<std::size_t>(a.max_degree()) + 1);
  CHECK(j.at("coefficients").at(3).at("degree") == 3);

  const auto env = json::envelope("boundary", 14, j);
  CHECK(env.at("schema_version") == json::kSchemaVersion);
  CHECK(env.at("command") == "boundary");
  CHECK(env.at("max_degree") == 14);
  CHECK(env.at("result") == j);

  const auto r = json::to_json(realize(-MotiveClass::cusp(12)));
  CHECK(r.dump().find("-2/1") != std::string::npos);
}
