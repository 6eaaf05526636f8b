#include "altmot/pipeline.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "altmot/genus1_boundary.hpp"
#include "altmot/genus1_fiber.hpp"

namespace altmot::pipeline
{

const AltSeries &boundary_alt_cached(int min_degree)
{
  if (min_degree > kMaxDegree)
    throw std::out_of_range("degree above " + std::to_string(kMaxDegree));
  static std::mutex mutex;
  static std::map<int, AltSeries> cache;
  std::lock_guard lock(mutex);
  auto it = cache.lower_bound(min_degree);
  if (it != cache.end())
    return it->second;
  const int degree = std::max(min_degree, kDefaultMaxDegree);
  return cache.emplace(degree, genus1::boundary_alt(degree)).first->second;
}

MainResult main_theorem(int n)
{
  if (n < 1 || n > kMaxDegree)
    throw std::out_of_range("main_theorem: n must lie in [1, " + std::to_string(kMaxDegree) + "]");
  MainResult r;
  r.n = n;
  r.interior = fiber::interior_Ac(n);
  r.boundary = boundary_alt_cached(n)[n];
  r.total = (r.interior + r.boundary).normalized();
  r.realization = realize(r.total);
  return r;
}

} // namespace altmot::pipeline
