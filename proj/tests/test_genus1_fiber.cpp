#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altmot/genus1_fiber.hpp"
#include "altmot/oracles.hpp"
#include "altmot/testing.hpp"

using namespace altmot;
using namespace altmot::fiber;

namespace
{

const MotiveClass L = MotiveClass::lefschetz();

Word word(std::initializer_list<Slot> slots)
{
  Word w = 0;
  int s = 0;
  for (Slot v : slots)
    w = FiberAlgebra::with_slot(w, s++, v);
  return w;
}

} // namespace

TEST_CASE("fiber algebra products")
{
  const FiberAlgebra a(2);
  CHECK(a.dimension() == 4);
  const Word al = word({Slot::alpha}), be = word({Slot::beta}), pt = word({Slot::point});
  CHECK(a.multiply(al, be) == std::pair{1, pt});
  CHECK(a.multiply(be, al) == std::pair{-1, pt});
  CHECK(!a.multiply(al, al));
  CHECK(!a.multiply(pt, al));

  const FiberAlgebra b(3);
  const Word x = word({Slot::alpha, Slot::one}), y = word({Slot::one, Slot::alpha});
  CHECK(b.multiply(x, y) == std::pair{1, word({Slot::alpha, Slot::alpha})});
  CHECK(b.multiply(y, x) == std::pair{-1, word({Slot::alpha, Slot::alpha})});
  CHECK(b.degree(word({Slot::point, Slot::beta})) == 3);
  CHECK(b.weight(word({Slot::beta, Slot::beta})) == -2);
  CHECK_THROWS_AS(FiberAlgebra(16), std::out_of_range);
}

TEST_CASE("graded commutativity and associativity")
{
  testing::Rng rng(31);
  const FiberAlgebra a(5);
  auto pick = [&] { return static_cast<Word>(rng() % a.dimension()); };
  for (int i = 0; i < 100; ++i) {
    const Word u = pick(), v = pick(), w = pick();
    const auto uv = a.multiply(u, v), vu = a.multiply(v, u);
    REQUIRE(uv.has_value() == vu.has_value());
    if (uv) {
      const int koszul = (a.degree(u) * a.degree(v)) % 2 == 0 ? 1 : -1;
      CHECK(uv->second == vu->second);
      CHECK(uv->first == koszul * vu->first);
    }
    std::optional<std::pair<int, Word>> left, right;
    if (uv)
      if (auto r = a.multiply(uv->second, w))
        left = std::pair{uv->first * r->first, r->second};
    if (auto vw = a.multiply(v, w))
      if (auto r = a.multiply(u, vw->second))
        right = std::pair{vw->first * r->first, r->second};
    CHECK(left == right);
  }
}

TEST_CASE("(1 2) on two points")
{
  const ActionMatrix &m = action_matrix(2, 1);
  for (Word r = 0; r < 4; ++r)
    for (Word c = 0; c < 4; ++c) {
      const std::int64_t want = r != c ? 0 : (r == 0 || r == 3 ? 1 : -1);
      CHECK(m.entry(r, c) == want);
    }
  CHECK_THROWS_AS(action_matrix(3, 3), std::out_of_range);
  CHECK_THROWS_AS(action_matrix(1, 1), std::out_of_range);
}

TEST_CASE("Coxeter relations")
{
  for (int n = 2; n <= 5; ++n) {
    const FiberAction &act = fiber_action(n);
    const ActionMatrix id = ActionMatrix::identity(act.algebra().dimension());
    for (int i = 1; i < n; ++i) {
      const ActionMatrix &s = act.generator(i);
      CHECK(s.after(s) == id);
      for (int j = i + 1; j < n; ++j) {
        const ActionMatrix &t = act.generator(j);
        if (j == i + 1) {
          const ActionMatrix st = s.after(t);
          CHECK(st.after(st).after(st) == id);
        } else {
          CHECK(s.after(t) == t.after(s));
        }
      }
    }
  }
}

TEST_CASE("pullback is an anti-homomorphism preserving the grading")
{
  testing::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const FiberAction &act = fiber_action(n);
    const Permutation s = testing::random_permutation(rng, n);
    const Permutation t = testing::random_permutation(rng, n);
    CHECK(act.matrix(s.compose(t)) == act.matrix(t).after(act.matrix(s)));

    const ActionMatrix m = act.matrix(s);
    const FiberAlgebra &a = act.algebra();
    for (Word c = 0; c < a.dimension(); ++c)
      for (const auto &[r, v] : m.column(c)) {
        CHECK(a.degree(r) == a.degree(c));
        CHECK(a.weight(r) == a.weight(c));
      }
  }
}

TEST_CASE("alternating component")
{
  const auto two = alternating_component(2);
  CHECK(two.dims == std::map<std::pair<int, int>, int>{{{1, 1}, 1}, {{1, -1}, 1}});
  CHECK(two.total() == 2);
  CHECK(two.basis.size() == 2);

  for (int n = 2; n <= 6; ++n) {
    const auto exact = alternating_component(n);
    std::map<std::pair<int, int>, mpq_class> as_rational;
    for (const auto &[key, d] : exact.dims)
      as_rational[key] = d;
    CHECK(as_rational == alternating_dims_by_trace(n));

    // Every basis vector is anti-invariant.
    const FiberAction &act = fiber_action(n);
    for (const auto &v : exact.basis)
      for (int i = 1; i < n; ++i) {
        RatVector neg;
        for (const auto &[w, c] : v)
          neg[w] = -c;
        CHECK(act.generator(i).apply(v) == neg);
      }
  }
}

TEST_CASE("open stratum")
{
  const auto two = ec_open_stratum(2);
  const Partition id{1, 1}, swap{2};
  const auto &chi00 = two.characters.at({0, 1});
  CHECK(chi00.at(id) == 1);
  CHECK(chi00.at(swap) == 1);
  const auto &chi10 = two.characters.at({1, 0});
  CHECK(chi10.at(id) == -1);
  CHECK(chi10.at(swap) == 1);

  for (int n = 1; n <= kMaxOpenStratumPoints; ++n) {
    const auto cls = ec_open_stratum(n);
    std::map<std::pair<int, int>, mpq_class> poly;
    for (const auto &[cw, v] : cls.traces.at(Partition::column(n)))
      if (v != 0)
        poly[{(cw.first + cw.second) / 2, (cw.first - cw.second) / 2}] += v;
    std::erase_if(poly, [](const auto &kv) { return kv.second == 0; });
    CHECK(poly == oracle::open_stratum_polynomial(n));

    for (const auto &[mu, tr] : cls.traces)
      for (const auto &[cw, v] : tr) {
        const auto mirror = tr.find({cw.first, -cw.second});
        CHECK((mirror == tr.end() ? mpq_class(0) : mirror->second) == v);
      }

    // Characters are virtual: integral multiplicities of every irreducible.
    for (const auto &[kj, chi] : cls.characters)
      for (const auto &lambda : partitions_of(n)) {
        mpq_class m = 0;
        for (const auto &[mu, v] : chi)
          m += v * character(lambda, mu) / mpq_class(z_of(mu));
        CHECK(m.get_den() == 1);
      }
  }
  CHECK_THROWS_AS(ec_open_stratum(7), std::out_of_range);
  CHECK_THROWS_AS(ec_open_stratum(0), std::out_of_range);
}

TEST_CASE("es_ec and interior_Ac")
{
  CHECK(es_ec(0) == L);
  CHECK(es_ec(3) == 0);
  CHECK(es_ec(10) == -MotiveClass::cusp(12) - 1);
  CHECK_THROWS_AS(es_ec(-1), std::invalid_argument);

  CHECK(interior_Ac(1) == L);
  CHECK(interior_Ac(4) == 0);
  CHECK(interior_Ac(11) == -MotiveClass::cusp(12) - 1);
  CHECK(realize(interior_Ac(3)).rank == -1);
  CHECK_THROWS_AS(interior_Ac(0), std::invalid_argument);

  const AltSeries a = a1_alternating(12);
  for (int n = 1; n <= 12; ++n)
    CHECK(a[n] == interior_Ac(n));
}

TEST_CASE("a1_small matches the interior alternating part")
{
  const SymSeries a1 = a1_small(kMaxOpenStratumPoints);
  CHECK(a1.degree_part(1) == SymSeries::p(1, kMaxOpenStratumPoints) * L);
  const AltSeries a = alt(a1);
  for (int n = 1; n <= kMaxOpenStratumPoints; ++n)
    CHECK(a[n] == interior_Ac(n));
  CHECK_THROWS_AS(a1_small(7), std::out_of_range);
}
