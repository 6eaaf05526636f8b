#include "altmot/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace altmot::oracle
{

std::int64_t pentagonal_partition_count(int n)
{
  if (n < 0)
    return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m)
        break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m)
        s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

std::int64_t hook_length_dimension(const Partition &lambda)
{
  const auto &rows = lambda.parts();
  mpz_class num = 1;
  for (int i = 2; i <= lambda.size(); ++i)
    num *= i;
  mpz_class den = 1;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < rows[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < rows.size(); ++s)
        if (rows[s] > c)
          ++below;
      den *= rows[r] - c - 1 + below + 1;
    }
  return mpz_class(num / den).get_si();
}

namespace
{

using Blocks = std::vector<std::vector<int>>;

void all_set_partitions(int n, int next, Blocks &current, std::vector<Blocks> &out)
{
  if (next > n) {
    Blocks b = current;
    for (auto &blk : b)
      std::sort(blk.begin(), blk.end());
    std::sort(b.begin(), b.end());
    out.push_back(std::move(b));
    return;
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    current[i].push_back(next);
    all_set_partitions(n, next + 1, current, out);
    current[i].pop_back();
  }
  current.push_back({next});
  all_set_partitions(n, next + 1, current, out);
  current.pop_back();
}

bool finer_or_equal(const Blocks &a, const Blocks &b)
{
  for (const auto &blk : a) {
    bool inside = false;
    for (const auto &big : b)
      if (std::includes(big.begin(), big.end(), blk.begin(), blk.end()))
        inside = true;
    if (!inside)
      return false;
  }
  return true;
}

} // namespace

std::map<Blocks, std::int64_t> partition_lattice_mobius(int n)
{
  std::vector<Blocks> all;
  Blocks current;
  all_set_partitions(n, 1, current, all);
  // Process by decreasing number of blocks so lower elements come first.
  std::sort(all.begin(), all.end(), [](const Blocks &a, const Blocks &b) { return a.size() > b.size(); });
  std::map<Blocks, std::int64_t> mu;
  for (const auto &p : all) {
    if (static_cast<int>(p.size()) == n) {
      mu[p] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (const auto &[q, v] : mu)
      if (q != p && finer_or_equal(q, p))
        s += v;
    mu[p] = -s;
  }
  return mu;
}

int cusp_dimension_by_monomials(int k)
{
  if (k < 4 || k % 2 != 0)
    return 0;
  int count = 0;
  for (int a = 0; 4 * a <= k; ++a)
    if ((k - 4 * a) % 6 == 0)
      ++count;
  return count - 1;
}

namespace
{

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int> &m, int p)
{
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool divides(const std::vector<int> &d, const std::vector<int> &f, int p)
{
  const auto r = poly_mod(f, d, p);
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

bool irreducible(const std::vector<int> &f, int p)
{
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
    g[static_cast<std::size_t>(d)] = 1;
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i)
      total *= p;
    for (std::int64_t code = 0; code < total; ++code) {
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      if (divides(g, f, p))
        return false;
    }
  }
  return true;
}

} // namespace

PrimeField::PrimeField(int p, int e) : p_(p), e_(e), size_(1)
{
  if (p < 2 || e < 1)
    throw std::invalid_argument("PrimeField: bad parameters");
  for (int i = 0; i < e; ++i)
    size_ *= static_cast<std::uint64_t>(p);
  std::vector<int> f(static_cast<std::size_t>(e) + 1, 0);
  f[static_cast<std::size_t>(e)] = 1;
  for (std::uint64_t code = 0;; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < e; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    if (f[0] != 0 && irreducible(f, p))
      break;
  }
  modulus_ = f;

  // Column j holds (x^j)^p.
  frob_.assign(static_cast<std::size_t>(e), {});
  for (int j = 0; j < e; ++j) {
    std::vector<int> mono(static_cast<std::size_t>(j) * static_cast<std::size_t>(p) + 1, 0);
    mono.back() = 1;
    auto r = poly_mod(mono, modulus_, p);
    r.resize(static_cast<std::size_t>(e), 0);
    frob_[static_cast<std::size_t>(j)] = r;
  }
}

std::vector<int> PrimeField::digits(std::uint64_t a) const
{
  std::vector<int> d(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<std::uint64_t>(p_));
    a /= static_cast<std::uint64_t>(p_);
  }
  return d;
}

std::uint64_t PrimeField::encode(const std::vector<int> &d) const
{
  std::uint64_t a = 0;
  for (int i = e_ - 1; i >= 0; --i)
    a = a * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(((d[static_cast<std::size_t>(i)] % p_) + p_) % p_);
  return a;
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const
{
  auto x = digits(a);
  const auto y = digits(b);
  for (int i = 0; i < e_; ++i)
    x[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
  return encode(x);
}

std::uint64_t PrimeField::multiply(std::uint64_t a, std::uint64_t b) const
{
  const auto x = digits(a);
  const auto y = digits(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j)
      prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p_;
  auto r = poly_mod(prod, modulus_, p_);
  r.resize(static_cast<std::size_t>(e_), 0);
  return encode(r);
}

std::uint64_t PrimeField::frobenius(std::uint64_t a, int r) const
{
  auto x = digits(a);
  for (int step = 0; step < r; ++step) {
    std::vector<int> y(static_cast<std::size_t>(e_), 0);
    for (int j = 0; j < e_; ++j) {
      const int c = x[static_cast<std::size_t>(j)];
      if (c == 0)
        continue;
      for (int i = 0; i < e_; ++i)
        y[static_cast<std::size_t>(i)] = (y[static_cast<std::size_t>(i)] + c * frob_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) % p_;
    }
    x = std::move(y);
  }
  return encode(x);
}

std::vector<std::uint64_t> PrimeField::fixed_points(int r) const
{
  // Kernel of Frob^r - 1 over F_p by Gaussian elimination on the matrix
  // whose column j is Frob^r(x^j) - x^j.
  const std::size_t e = static_cast<std::size_t>(e_);
  std::vector<std::vector<int>> cols(e);
  for (std::size_t j = 0; j < e; ++j) {
    std::uint64_t basis = 1;
    for (std::size_t t = 0; t < j; ++t)
      basis *= static_cast<std::uint64_t>(p_);
    auto img = digits(frobenius(basis, r));
    img[j] = ((img[j] - 1) % p_ + p_) % p_;
    cols[j] = img;
  }
  // Row-reduce the e×e matrix A (A[i][j] = cols[j][i]).
  std::vector<std::vector<int>> A(e, std::vector<int>(e));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j)
      A[i][j] = cols[j][i];
  auto inv = [&](int a) {
    for (int b = 1; b < p_; ++b)
      if ((a * b) % p_ == 1)
        return b;
    throw std::logic_error("no inverse mod p");
  };
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < e && row < e; ++c) {
    std::size_t sel = row;
    while (sel < e && A[sel][c] == 0)
      ++sel;
    if (sel == e)
      continue;
    std::swap(A[sel], A[row]);
    const int iv = inv(A[row][c]);
    for (auto &x : A[row])
      x = (x * iv) % p_;
    for (std::size_t i = 0; i < e; ++i)
      if (i != row && A[i][c] != 0) {
        const int f = A[i][c];
        for (std::size_t j = 0; j < e; ++j)
          A[i][j] = ((A[i][j] - f * A[row][j]) % p_ + p_) % p_;
      }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(e, false);
  for (int c : pivot_col)
    is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<int>> kernel;
  for (std::size_t f = 0; f < e; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<int> v(e, 0);
    v[f] = 1;
    for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2)
      v[static_cast<std::size_t>(pivot_col[r2])] = (p_ - A[r2][f]) % p_;
    kernel.push_back(v);
  }
  // Enumerate all F_p-combinations of the kernel basis.
  std::vector<std::uint64_t> out;
  std::vector<int> coeff(kernel.size(), 0);
  while (true) {
    std::vector<int> v(e, 0);
    for (std::size_t k = 0; k < kernel.size(); ++k)
      for (std::size_t i = 0; i < e; ++i)
        v[i] += coeff[k] * kernel[k][i];
    out.push_back(encode(v));
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p_)
      coeff[k++] = 0;
    if (k == coeff.size())
      break;
  }
  return out;
}

std::int64_t twisted_configuration_count(int p, int m, const Partition &cycle_type)
{
  int L = 1;
  for (int d : cycle_type.parts())
    L = std::lcm(L, d);
  const PrimeField field(p, m * L);
  const std::uint64_t infinity = field.size();

  std::map<int, std::vector<std::uint64_t>> points;
  for (int d : cycle_type.parts())
    if (!points.count(d)) {
      auto pts = field.fixed_points(m * d);
      pts.push_back(infinity);
      points.emplace(d, std::move(pts));
    }

  const auto &cycles = cycle_type.parts();
  std::set<std::uint64_t> used;
  std::int64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t c) {
    if (c == cycles.size()) {
      ++count;
      return;
    }
    const int d = cycles[c];
    for (std::uint64_t y : points.at(d)) {
      std::vector<std::uint64_t> orbit;
      std::uint64_t x = y;
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        if (used.count(x) || std::find(orbit.begin(), orbit.end(), x) != orbit.end())
          ok = false;
        orbit.push_back(x);
        x = (x == infinity) ? infinity : field.frobenius(x, m);
      }
      if (!ok)
        continue;
      for (auto o : orbit)
        used.insert(o);
      place(c + 1);
      for (auto o : orbit)
        used.erase(o);
    }
  };
  place(0);
  return count;
}

std::vector<mpq_class> interpolate(const std::vector<std::pair<int, mpq_class>> &points)
{
  std::vector<mpq_class> out(points.size(), mpq_class(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Basis polynomial ∏_{j≠i} (x - x_j)/(x_i - x_j).
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i)
        continue;
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * points[j].first;
      }
      basis = std::move(next);
      denom *= points[i].first - points[j].first;
    }
    for (std::size_t t = 0; t < basis.size(); ++t)
      out[t] += points[i].second * basis[t] / denom;
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

namespace
{

Poly4 poly_mul(const Poly4 &a, const Poly4 &b)
{
  Poly4 out;
  for (const auto &[ea, ca] : a)
    for (const auto &[eb, cb] : b) {
      std::array<int, 4> e{};
      for (int i = 0; i < 4; ++i)
        e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

std::array<int, 4> unit(int i, int power)
{
  std::array<int, 4> e{};
  e[static_cast<std::size_t>(i)] = power;
  return e;
}

} // namespace

Poly4 expand_power_sums(const std::map<Partition, mpq_class> &component)
{
  Poly4 out;
  for (const auto &[lambda, c] : component) {
    Poly4 term{{std::array<int, 4>{}, c}};
    for (int k : lambda.parts()) {
      Poly4 pk;
      for (int i = 0; i < 4; ++i)
        pk[unit(i, k)] += 1;
      term = poly_mul(term, pk);
    }
    for (const auto &[e, v] : term)
      out[e] += v;
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

Poly4 h2_of_h2_by_substitution()
{
  std::vector<std::array<int, 4>> monomials;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      std::array<int, 4> e{};
      e[static_cast<std::size_t>(a)] += 1;
      e[static_cast<std::size_t>(b)] += 1;
      monomials.push_back(e);
    }
  Poly4 out;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i; j < monomials.size(); ++j) {
      std::array<int, 4> e{};
      for (int t = 0; t < 4; ++t)
        e[static_cast<std::size_t>(t)] = monomials[i][static_cast<std::size_t>(t)] + monomials[j][static_cast<std::size_t>(t)];
      out[e] += 1;
    }
  return out;
}

Poly4 h4_plus_s22_by_tableaux()
{
  Poly4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int c = b; c < 4; ++c)
        for (int d = c; d < 4; ++d) {
          std::array<int, 4> e{};
          for (int x : {a, b, c, d})
            e[static_cast<std::size_t>(x)] += 1;
          out[e] += 1;
        }
  // 2×2 tableaux [[a b] [c d]]: a ≤ b, c ≤ d, a < c, b < d.
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int c = a + 1; c < 4; ++c)
        for (int d = std::max(c, b + 1); d < 4; ++d) {
          std::array<int, 4> e{};
          for (int x : {a, b, c, d})
            e[static_cast<std::size_t>(x)] += 1;
          out[e] += 1;
        }
  return out;
}

std::map<std::pair<int, int>, mpq_class> open_stratum_polynomial(int n)
{
  std::map<std::pair<int, int>, mpq_class> acc{{{0, 0}, mpq_class(1)}};
  for (int i = 1; i < n; ++i) {
    const std::map<std::pair<int, int>, mpq_class> factor{
        {{0, 0}, mpq_class(1 - i)}, {{1, 0}, mpq_class(-1)}, {{0, 1}, mpq_class(-1)}, {{1, 1}, mpq_class(1)}};
    std::map<std::pair<int, int>, mpq_class> next;
    for (const auto &[ea, ca] : acc)
      for (const auto &[eb, cb] : factor)
        next[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  return acc;
}

} // namespace altmot::oracle
