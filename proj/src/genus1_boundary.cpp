#include "altmot/genus1_boundary.hpp"

#include <stdexcept>

#include "altmot/genus1_fiber.hpp"

namespace altmot::genus1
{

SymSeries necklace_from(const SymSeries &a0_pp)
{
  const int N = a0_pp.max_degree();
  SymSeries sum(N);
  for (int n = 1; n <= N; ++n) {
    const SymSeries psi = adams_plethysm(n, a0_pp);
    if (psi.is_zero())
      continue;
    sum += log1m(psi) * MotiveClass(rational(euler_phi(n), n));
  }
  return sum * MotiveClass(mpq_class(-1, 2));
}

SymSeries correction_from(const SymSeries &a0_pp, const SymSeries &a0_dot)
{
  const int N = a0_pp.max_degree();
  if (a0_dot.max_degree() != N)
    throw std::invalid_argument("correction_from: truncation degrees differ");
  const SymSeries psi2 = adams_plethysm(2, a0_pp);
  const SymSeries numerator = a0_dot * a0_dot + a0_dot + psi2 * MotiveClass(mpq_class(1, 4));
  return numerator * geom(psi2);
}

SymSeries necklace_series(const genus0::Genus0Tables &tables) { return necklace_from(tables.a0_pp); }

SymSeries correction_series(const genus0::Genus0Tables &tables)
{
  return correction_from(tables.a0_pp, tables.a0_dot);
}

SymSeries necklace_series(int max_degree)
{
  return necklace_series(genus0::build_tables(max_degree));
}

SymSeries correction_series(int max_degree)
{
  return correction_series(genus0::build_tables(max_degree));
}

SymSeries tree_insertion(const genus0::Genus0Tables &tables)
{
  return SymSeries::h(1, tables.max_degree) + tables.b0_prime;
}

AltSeries boundary_alt(const genus0::Genus0Tables &tables)
{
  const SymSeries inner = necklace_series(tables) + correction_series(tables);
  const AltSeries direct = alt(inner);
  const AltSeries composed = alt(plethysm(inner, tree_insertion(tables)));
  if (!(direct == composed))
    throw std::logic_error("boundary_alt: composition with h1 + b0' changed the alternating part");
  return composed;
}

AltSeries boundary_alt(int max_degree) { return boundary_alt(genus0::build_tables(max_degree)); }

BoundaryAssembly assemble(const genus0::Genus0Tables &tables, const SymSeries &a1)
{
  if (a1.max_degree() != tables.max_degree)
    throw std::invalid_argument("assemble: a1 truncation differs from the tables");
  BoundaryAssembly out;
  out.max_degree = tables.max_degree;
  out.necklace = necklace_series(tables);
  out.correction = correction_series(tables);
  out.inner_sum = a1 + out.necklace + out.correction;
  out.composed = plethysm(out.inner_sum, tree_insertion(tables));
  return out;
}

SymSeries b1_series(const genus0::Genus0Tables &tables, const SymSeries &a1)
{
  return plethysm(a1 + necklace_series(tables) + correction_series(tables), tree_insertion(tables));
}

SymSeries b1_series(int max_degree, const SymSeries &a1)
{
  return b1_series(genus0::build_tables(max_degree), a1);
}

SymSeries interior_a1(int max_degree)
{
  SymSeries out(max_degree);
  for (int n = 1; n <= max_degree; ++n) {
    const MotiveClass c = fiber::interior_Ac(n);
    if (!c.is_zero())
      out += SymSeries::e(n, max_degree) * c;
  }
  return out;
}

} // namespace altmot::genus1
