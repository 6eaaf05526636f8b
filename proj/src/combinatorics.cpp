#include "altmot/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace altmot
{

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (int p : parts_) {
    if (p <= 0)
      throw std::invalid_argument("partition parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::column(int n)
{
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::multiplicity(int part) const noexcept
{
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

int Partition::even_parts() const noexcept
{
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }));
}

int Partition::odd_parts() const noexcept { return length() - even_parts(); }

Partition Partition::scaled(int k) const
{
  Partition out = *this;
  for (int &p : out.parts_)
    p *= k;
  out.size_ *= k;
  return out;
}

Partition Partition::joined(const Partition &other) const
{
  Partition out;
  out.parts_.resize(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), out.parts_.begin(),
             std::greater<>());
  out.size_ = size_ + other.size_;
  return out;
}

Partition Partition::without_part(int part) const
{
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end())
    throw std::invalid_argument("partition has no part " + std::to_string(part));
  Partition out = *this;
  out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
  out.size_ -= part;
  return out;
}

Partition Partition::conjugate() const
{
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int i = 0; i < p; ++i)
        ++conj[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

bool operator<(const Partition &a, const Partition &b) noexcept
{
  if (a.size_ != b.size_)
    return a.size_ < b.size_;
  // Reverse lexicographic: (n) comes first.
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

namespace
{

void partitions_rec(int remaining, int max_part, std::vector<int> &current, std::vector<Partition> &out)
{
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
  if (n < 0)
    throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::int64_t partition_count(int n)
{
  if (n < 0)
    return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m)
      p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  return p[static_cast<std::size_t>(n)];
}

mpz_class z_of(const Partition &lambda)
{
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : lambda.parts())
    ++mult[p];
  for (auto [part, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= f * pw;
  }
  return z;
}

// --- Murnaghan–Nakayama -----------------------------------------------------

namespace
{

using BetaSet = std::vector<int>; // strictly decreasing

BetaSet beta_set(const Partition &lambda)
{
  const int len = lambda.length();
  BetaSet beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

Partition from_beta(BetaSet beta)
{
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0)
      parts.push_back(p);
  }
  return Partition(std::move(parts));
}

class MnEvaluator
{
public:
  // χ^λ on the cycle type given by mu[from..].
  std::int64_t eval(const Partition &lambda, const std::vector<int> &mu, std::size_t from)
  {
    if (from == mu.size())
      return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, from);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;

    const int r = mu[from];
    const BetaSet beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
        continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i])
          ++between;
      BetaSet next = beta;
      next[i] = target;
      const std::int64_t sub = eval(from_beta(std::move(next)), mu, from + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

private:
  std::map<std::pair<Partition, std::size_t>, std::int64_t> memo_;
};

} // namespace

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n))
{
  const std::size_t count = parts_.size();
  values_.assign(count * count, 0);
  for (std::size_t m = 0; m < count; ++m) {
    // Memo entries are only valid for a fixed μ suffix sequence.
    MnEvaluator mn;
    const std::vector<int> &mu = parts_[m].parts();
    for (std::size_t l = 0; l < count; ++l)
      values_[l * count + m] = mn.eval(parts_[l], mu, 0);
  }
}

std::size_t CharacterTable::index_of(const Partition &lambda) const
{
  auto it = std::lower_bound(parts_.begin(), parts_.end(), lambda);
  if (it == parts_.end() || !(*it == lambda))
    throw std::invalid_argument("partition " + lambda.to_string() + " is not a partition of " +
                                std::to_string(n_));
  return static_cast<std::size_t>(it - parts_.begin());
}

std::int64_t CharacterTable::operator()(const Partition &lambda, const Partition &mu) const
{
  return at(index_of(lambda), index_of(mu));
}

std::shared_ptr<const CharacterTable> character_table(int n)
{
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  if (n < 0)
    throw std::invalid_argument("character_table: negative degree");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }
  // Built outside the lock; a racing builder produces an identical table and
  // the first insertion wins.
  auto table = std::make_shared<const CharacterTable>(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

std::int64_t character(const Partition &lambda, const Partition &mu)
{
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character: size mismatch between " + lambda.to_string() + " and " +
                                mu.to_string());
  return (*character_table(lambda.size()))(lambda, mu);
}

// --- arithmetic functions ---------------------------------------------------

std::int64_t euler_phi(std::int64_t n)
{
  if (n < 1)
    throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

int moebius(std::int64_t n)
{
  if (n < 1)
    throw std::invalid_argument("moebius: n must be positive");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      mu = -mu;
    }
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

// --- permutations -----------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  const int n = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycle_type(const Partition &lambda)
{
  std::vector<int> im(static_cast<std::size_t>(lambda.size()));
  int start = 1;
  for (int len : lambda.parts()) {
    for (int j = 0; j < len; ++j)
      im[static_cast<std::size_t>(start - 1 + j)] = start + (j + 1) % len;
    start += len;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::adjacent(int n, int i)
{
  if (i < 1 || i >= n)
    throw std::out_of_range("adjacent transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::compose(const Permutation &tau) const
{
  if (tau.degree() != degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[i] = images_[static_cast<std::size_t>(tau.images_[i] - 1)];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const
{
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(im));
}

Partition Permutation::cycle_type() const
{
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(std::move(lens));
}

std::vector<int> Permutation::adjacent_word() const
{
  // Bubble-sort the one-line notation: σ s_{j1} ⋯ s_{jk} = id, hence
  // σ = s_{jk} ⋯ s_{j1}.
  std::vector<int> a = images_;
  std::vector<int> swaps;
  for (std::size_t pass = 0; pass < a.size(); ++pass)
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
      }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

// --- set partitions ---------------------------------------------------------

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_index_(static_cast<std::size_t>(n), -1)
{
  for (auto &b : blocks_) {
    if (b.empty())
      throw std::invalid_argument("set partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (int x : blocks_[bi]) {
      if (x < 1 || x > n || block_index_[static_cast<std::size_t>(x - 1)] != -1)
        throw std::invalid_argument("set partition blocks are not disjoint subsets of {1..n}");
      block_index_[static_cast<std::size_t>(x - 1)] = static_cast<int>(bi);
    }
  if (std::find(block_index_.begin(), block_index_.end(), -1) != block_index_.end())
    throw std::invalid_argument("set partition blocks do not cover {1..n}");
}

bool SetPartition::refines(const SetPartition &coarser) const
{
  if (n_ != coarser.n_)
    return false;
  for (const auto &b : blocks_) {
    const int target = coarser.block_of(b.front());
    for (int x : b)
      if (coarser.block_of(x) != target)
        return false;
  }
  return true;
}

std::string SetPartition::to_string() const
{
  std::ostringstream os;
  for (const auto &b : blocks_) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i)
      os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

std::vector<SetPartition> set_partitions(int n)
{
  if (n < 0)
    throw std::invalid_argument("set_partitions: negative size");
  if (n > kMaxSetPartitionSize)
    throw std::out_of_range("set_partitions: n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kMaxSetPartitionSize));
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  // Restricted growth strings a[0] = 0, a[i] ≤ 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> mx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(mx.back()) + 1);
    for (int i = 0; i < n; ++i)
      blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));

    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] == mx[static_cast<std::size_t>(i - 1)] + 1)
      --i;
    if (i == 0)
      break;
    ++a[static_cast<std::size_t>(i)];
    mx[static_cast<std::size_t>(i)] = std::max(mx[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      mx[static_cast<std::size_t>(j)] = mx[static_cast<std::size_t>(j - 1)];
    }
  }
  return out;
}

std::int64_t lattice_mobius(const SetPartition &p)
{
  std::int64_t mu = 1;
  for (const auto &b : p.blocks()) {
    const auto k = static_cast<std::int64_t>(b.size()) - 1;
    std::int64_t f = 1;
    for (std::int64_t i = 2; i <= k; ++i)
      f *= i;
    mu *= (k % 2 == 0) ? f : -f;
  }
  return mu;
}

std::vector<StablePartition> stable_set_partitions(const Permutation &sigma)
{
  const int n = sigma.degree();
  std::vector<StablePartition> out;
  for (auto &p : set_partitions(n)) {
    std::vector<int> image(static_cast<std::size_t>(p.block_count()), -1);
    bool stable = true;
    for (std::size_t bi = 0; bi < p.blocks().size() && stable; ++bi) {
      const auto &block = p.blocks()[bi];
      const int target = p.block_of(sigma(block.front()));
      for (int x : block)
        if (p.block_of(sigma(x)) != target) {
          stable = false;
          break;
        }
      image[bi] = target;
    }
    // Block images of a stable partition are automatically a bijection: σ
    // is a bijection and blocks have to be carried onto whole blocks.
    if (stable) {
      for (std::size_t bi = 0; bi < image.size(); ++bi)
        if (p.blocks()[static_cast<std::size_t>(image[bi])].size() != p.blocks()[bi].size())
          stable = false;
    }
    if (stable)
      out.push_back({std::move(p), std::move(image)});
  }
  return out;
}

std::vector<std::int64_t> subposet_mobius(std::span<const StablePartition> stable)
{
  std::vector<std::size_t> order(stable.size());
  std::iota(order.begin(), order.end(), 0);
  // Finer partitions (more blocks) first.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return stable[a].partition.block_count() > stable[b].partition.block_count();
  });
  std::vector<std::int64_t> mu(stable.size(), 0);
  if (stable.empty())
    return mu;
  const int n = stable[order.front()].partition.ground_size();
  if (stable[order.front()].partition.block_count() != n)
    throw std::invalid_argument("subposet_mobius: the finest partition is missing");
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto &p = stable[order[pos]].partition;
    if (pos == 0) {
      mu[order[pos]] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t q = 0; q < pos; ++q) {
      const auto &cand = stable[order[q]].partition;
      if (cand.block_count() > p.block_count() && cand.refines(p))
        sum += mu[order[q]];
    }
    mu[order[pos]] = -sum;
  }
  return mu;
}

} // namespace altmot
