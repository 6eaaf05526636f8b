#include "altmot/testing.hpp"

#include <algorithm>
#include <numeric>

namespace altmot::testing
{

namespace
{

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

} // namespace

Partition random_partition(Rng &rng, int n)
{
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int part = uniform(rng, 1, left);
    parts.push_back(part);
    left -= part;
  }
  return Partition(parts);
}

MotiveClass random_tate_class(Rng &rng, int max_power)
{
  MotiveClass c;
  for (int j = 0; j <= max_power; ++j)
    if (uniform(rng, 0, 2) != 0)
      c.add_tate(j, rational(uniform(rng, -4, 4), uniform(rng, 1, 3)));
  return c;
}

SymSeries random_series(Rng &rng, int max_degree, int min_degree, int max_term_degree, int terms_per_degree)
{
  SymSeries f(max_degree);
  for (int n = min_degree; n <= std::min(max_term_degree, max_degree); ++n)
    for (int t = 0; t < terms_per_degree; ++t)
      f.add_term(random_partition(rng, n), random_tate_class(rng));
  return f;
}

SymSeries random_sign_free(Rng &rng, int n, int max_degree)
{
  std::map<Partition, MotiveClass> schur;
  const Partition sign_label(std::vector<int>(static_cast<std::size_t>(n), 1));
  for (const auto &lambda : partitions_of(n))
    if (!(lambda == sign_label) && uniform(rng, 0, 1) == 1)
      schur[lambda] = MotiveClass(uniform(rng, -3, 3));
  return from_schur(schur, max_degree);
}

Permutation random_permutation(Rng &rng, int n)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

} // namespace altmot::testing
