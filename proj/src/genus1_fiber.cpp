#include "altmot/genus1_fiber.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace altmot::fiber
{

namespace
{

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

template <class Coeff>
void add_to(std::map<Word, Coeff> &v, Word w, const Coeff &c)
{
  auto it = v.find(w);
  if (it == v.end()) {
    if (c != 0)
      v.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0)
    v.erase(it);
}

// Product of two elements of the algebra.
IntVector multiply(const FiberAlgebra &alg, const IntVector &a, const IntVector &b)
{
  IntVector out;
  for (const auto &[wa, ca] : a)
    for (const auto &[wb, cb] : b)
      if (auto prod = alg.multiply(wa, wb))
        add_to(out, prod->second, ca * cb * prod->first);
  return out;
}

Word single(int s, Slot v) { return FiberAlgebra::with_slot(0, s, v); }

// Pullback under τ(0, x₂, x₃, …) = (0, -x₂, x₃ - x₂, …) of the class v
// placed in slot s.
IntVector transposition_12_image(const FiberAlgebra &alg, int s, Slot v)
{
  if (v == Slot::one)
    return {{0, 1}};
  if (s == 0) {
    if (v == Slot::point)
      return {{single(0, v), 1}};
    return {{single(0, v), -1}};
  }
  if (v == Slot::point) {
    const IntVector a = transposition_12_image(alg, s, Slot::alpha);
    const IntVector b = transposition_12_image(alg, s, Slot::beta);
    return multiply(alg, a, b);
  }
  IntVector out;
  add_to(out, single(0, v), std::int64_t{-1});
  add_to(out, single(s, v), std::int64_t{1});
  return out;
}

ActionMatrix build_generator(const FiberAlgebra &alg, int i)
{
  const Word dim = alg.dimension();
  std::vector<ActionMatrix::Column> cols(dim);
  if (i >= 2) {
    const int s = i - 2;
    for (Word w = 0; w < dim; ++w) {
      const Slot u = FiberAlgebra::slot(w, s);
      const Slot v = FiberAlgebra::slot(w, s + 1);
      const int sign = parity_sign(FiberAlgebra::slot_degree(u) * FiberAlgebra::slot_degree(v));
      const Word image = FiberAlgebra::with_slot(FiberAlgebra::with_slot(w, s, v), s + 1, u);
      cols[w].emplace_back(image, sign);
    }
    return ActionMatrix(std::move(cols));
  }

  std::vector<std::array<IntVector, 4>> images(static_cast<std::size_t>(alg.slots()));
  for (int s = 0; s < alg.slots(); ++s)
    for (int v = 0; v < 4; ++v)
      images[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] =
          transposition_12_image(alg, s, static_cast<Slot>(v));

  for (Word w = 0; w < dim; ++w) {
    IntVector acc = {{0, 1}};
    for (int s = 0; s < alg.slots(); ++s) {
      const Slot v = FiberAlgebra::slot(w, s);
      if (v != Slot::one)
        acc = multiply(alg, acc, images[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)]);
    }
    cols[w].assign(acc.begin(), acc.end());
  }
  return ActionMatrix(std::move(cols));
}

void check_points(int n, int max, const char *what)
{
  if (n < 1 || n > max)
    throw std::out_of_range(std::string(what) + ": number of points must lie in [1, " + std::to_string(max) + "]");
}

// Echelon basis with pivot = least word; each stored vector has leading
// coefficient 1.
class Echelon
{
public:
  bool insert(RatVector v)
  {
    for (const auto &[pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end())
        continue;
      const mpq_class c = it->second;
      for (const auto &[w, x] : row)
        add_to(v, w, mpq_class(-c * x));
    }
    if (v.empty())
      return false;
    const mpq_class lead = v.begin()->second;
    for (auto &[w, x] : v)
      x /= lead;
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::vector<RatVector> basis() const
  {
    std::vector<RatVector> out;
    for (const auto &[p, row] : rows_)
      out.push_back(row);
    return out;
  }

private:
  std::map<Word, RatVector> rows_;
};

Permutation transposition(int n, int a, int b)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    images[static_cast<std::size_t>(i - 1)] = i;
  std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(images));
}

// Σ_{g ∈ Sym{2..n}} sgn(g) g* e_w, computed along the orbit of w under the
// slot swaps. Returns the empty vector when the antisymmetrization vanishes.
RatVector antisymmetrize_slots(const FiberAction &act, Word w)
{
  const int n = act.n();
  RatVector out{{w, mpq_class(1)}};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word x = queue.front();
    queue.pop_front();
    const mpq_class cx = out.at(x);
    for (int i = 2; i < n; ++i) {
      const auto &col = act.generator(i).column(x);
      const Word y = col.front().first;
      const mpq_class cy = -cx * col.front().second;
      auto it = out.find(y);
      if (it == out.end()) {
        out.emplace(y, cy);
        queue.push_back(y);
      } else if (it->second != cy) {
        return {};
      }
    }
  }
  return out;
}

} // namespace

FiberAlgebra::FiberAlgebra(int points) : points_(points)
{
  if (points < 1 || points > 15)
    throw std::out_of_range("FiberAlgebra: number of points must lie in [1, 15]");
}

int FiberAlgebra::degree(Word w) const
{
  int d = 0;
  for (int s = 0; s < slots(); ++s)
    d += slot_degree(slot(w, s));
  return d;
}

int FiberAlgebra::weight(Word w) const
{
  int d = 0;
  for (int s = 0; s < slots(); ++s)
    d += slot_weight(slot(w, s));
  return d;
}

std::optional<std::pair<int, Word>> FiberAlgebra::multiply(Word a, Word b) const
{
  int sign = 1;
  int odd_a_after = 0; // parity of the a-slots to the right of slot s
  for (int s = slots() - 1; s >= 0; --s) {
    if (slot_degree(slot(b, s)) % 2 == 1 && odd_a_after % 2 == 1)
      sign = -sign;
    odd_a_after += slot_degree(slot(a, s));
  }
  Word out = 0;
  for (int s = 0; s < slots(); ++s) {
    const Slot u = slot(a, s);
    const Slot v = slot(b, s);
    Slot r;
    if (u == Slot::one)
      r = v;
    else if (v == Slot::one)
      r = u;
    else if (u == Slot::alpha && v == Slot::beta)
      r = Slot::point;
    else if (u == Slot::beta && v == Slot::alpha) {
      r = Slot::point;
      sign = -sign;
    } else
      return std::nullopt;
    out = with_slot(out, s, r);
  }
  return std::make_pair(sign, out);
}

std::string FiberAlgebra::word_name(Word w) const
{
  static const char *names[] = {"1", "a", "b", "p"};
  std::string out;
  for (int s = 0; s < slots(); ++s) {
    if (s > 0)
      out += '.';
    out += names[static_cast<int>(slot(w, s))];
  }
  return out.empty() ? "1" : out;
}

ActionMatrix ActionMatrix::identity(Word dimension)
{
  std::vector<Column> cols(dimension);
  for (Word w = 0; w < dimension; ++w)
    cols[w].emplace_back(w, 1);
  return ActionMatrix(std::move(cols));
}

std::int64_t ActionMatrix::entry(Word row, Word col) const
{
  for (const auto &[w, c] : columns_.at(col))
    if (w == row)
      return c;
  return 0;
}

IntVector ActionMatrix::apply(const IntVector &v) const
{
  IntVector out;
  for (const auto &[w, c] : v)
    for (const auto &[r, x] : columns_.at(w))
      add_to(out, r, c * x);
  return out;
}

RatVector ActionMatrix::apply(const RatVector &v) const
{
  RatVector out;
  for (const auto &[w, c] : v)
    for (const auto &[r, x] : columns_.at(w))
      add_to(out, r, mpq_class(c * x));
  return out;
}

ActionMatrix ActionMatrix::after(const ActionMatrix &rhs) const
{
  if (rhs.dimension() != dimension())
    throw std::invalid_argument("ActionMatrix: dimension mismatch");
  std::vector<Column> cols(dimension());
  for (Word w = 0; w < dimension(); ++w) {
    const IntVector image = apply(IntVector(rhs.columns_[w].begin(), rhs.columns_[w].end()));
    cols[w].assign(image.begin(), image.end());
  }
  return ActionMatrix(std::move(cols));
}

bool operator==(const ActionMatrix &a, const ActionMatrix &b)
{
  if (a.dimension() != b.dimension())
    return false;
  for (Word w = 0; w < a.dimension(); ++w) {
    IntVector x(a.columns_[w].begin(), a.columns_[w].end());
    IntVector y(b.columns_[w].begin(), b.columns_[w].end());
    std::erase_if(x, [](const auto &kv) { return kv.second == 0; });
    std::erase_if(y, [](const auto &kv) { return kv.second == 0; });
    if (x != y)
      return false;
  }
  return true;
}

FiberAction::FiberAction(int n) : algebra_(n)
{
  for (int i = 1; i < n; ++i)
    generators_.push_back(build_generator(algebra_, i));
}

const ActionMatrix &FiberAction::generator(int i) const
{
  if (i < 1 || i >= n())
    throw std::out_of_range("generator index must lie in [1, n-1]");
  return generators_[static_cast<std::size_t>(i - 1)];
}

IntVector FiberAction::apply(const Permutation &sigma, const IntVector &v) const
{
  if (sigma.degree() != n())
    throw std::invalid_argument("permutation degree does not match the number of points");
  IntVector out = v;
  for (int i : sigma.adjacent_word())
    out = generator(i).apply(out);
  return out;
}

RatVector FiberAction::apply(const Permutation &sigma, const RatVector &v) const
{
  if (sigma.degree() != n())
    throw std::invalid_argument("permutation degree does not match the number of points");
  RatVector out = v;
  for (int i : sigma.adjacent_word())
    out = generator(i).apply(out);
  return out;
}

ActionMatrix FiberAction::matrix(const Permutation &sigma) const
{
  if (sigma.degree() != n())
    throw std::invalid_argument("permutation degree does not match the number of points");
  ActionMatrix m = ActionMatrix::identity(algebra_.dimension());
  for (int i : sigma.adjacent_word())
    m = generator(i).after(m);
  return m;
}

std::map<std::pair<int, int>, std::int64_t> FiberAction::graded_trace(const Permutation &sigma) const
{
  std::map<std::pair<int, int>, std::int64_t> out;
  const auto word = sigma.adjacent_word();
  for (Word w = 0; w < algebra_.dimension(); ++w) {
    IntVector v = {{w, 1}};
    for (int i : word)
      v = generator(i).apply(v);
    const auto key = std::make_pair(algebra_.degree(w), algebra_.weight(w));
    auto it = v.find(w);
    out[key] += (it == v.end()) ? 0 : it->second;
  }
  return out;
}

const FiberAction &fiber_action(int n)
{
  check_points(n, kMaxFiberPoints, "fiber_action");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FiberAction>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[n];
  if (!slot)
    slot = std::make_unique<FiberAction>(n);
  return *slot;
}

const ActionMatrix &action_matrix(int n, int i)
{
  if (n < 2)
    throw std::out_of_range("action_matrix: need at least two points");
  return fiber_action(n).generator(i);
}

int AlternatingComponent::total() const
{
  int t = 0;
  for (const auto &[key, d] : dims)
    t += d;
  return t;
}

AlternatingComponent alternating_component(int n)
{
  const FiberAction &act = fiber_action(n);
  const FiberAlgebra &alg = act.algebra();

  // Image of the antisymmetrizer over Sym{2..n}: one signed orbit sum per
  // orbit of words under slot permutations that survives.
  std::map<std::pair<int, int>, std::vector<RatVector>> blocks;
  std::set<Word> seen;
  for (Word w = 0; w < alg.dimension(); ++w) {
    if (seen.count(w))
      continue;
    RatVector v = antisymmetrize_slots(act, w);
    if (v.empty()) {
      // Still mark the orbit so it is not revisited.
      std::deque<Word> queue{w};
      seen.insert(w);
      while (!queue.empty()) {
        const Word x = queue.front();
        queue.pop_front();
        for (int i = 2; i < n; ++i) {
          const Word y = act.generator(i).column(x).front().first;
          if (seen.insert(y).second)
            queue.push_back(y);
        }
      }
      continue;
    }
    for (const auto &[x, c] : v)
      seen.insert(x);
    blocks[{alg.degree(w), alg.weight(w)}].push_back(std::move(v));
  }

  // Remaining coset factor: 1 - Σ_{j ≥ 2} (1 j)*.
  std::vector<Permutation> transpositions;
  for (int j = 2; j <= n; ++j)
    transpositions.push_back(transposition(n, 1, j));

  AlternatingComponent out;
  out.n = n;
  for (const auto &[key, vectors] : blocks) {
    Echelon ech;
    for (const auto &v : vectors) {
      RatVector image = v;
      for (const auto &t : transpositions)
        for (const auto &[w, c] : act.apply(t, v))
          add_to(image, w, mpq_class(-c));
      ech.insert(std::move(image));
    }
    if (ech.rank() > 0) {
      out.dims[key] = static_cast<int>(ech.rank());
      for (auto &b : ech.basis())
        out.basis.push_back(std::move(b));
    }
  }
  return out;
}

std::map<std::pair<int, int>, mpq_class> alternating_dims_by_trace(int n)
{
  const FiberAction &act = fiber_action(n);
  std::map<std::pair<int, int>, mpq_class> out;
  for (const auto &mu : partitions_of(n)) {
    const mpq_class weight = mpq_class(mu.sign()) / mpq_class(z_of(mu));
    for (const auto &[key, tr] : act.graded_trace(Permutation::from_cycle_type(mu)))
      out[key] += weight * tr;
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

std::map<std::pair<int, int>, mpq_class> EquivariantClass::alternating_part() const
{
  std::map<std::pair<int, int>, mpq_class> out;
  for (const auto &[kj, chi] : characters) {
    mpq_class s = 0;
    for (const auto &[mu, value] : chi)
      s += value * mu.sign() / mpq_class(z_of(mu));
    out[kj] = s;
  }
  return out;
}

SymSeries EquivariantClass::characteristic(int k, int j, int max_degree) const
{
  SymSeries out(max_degree);
  auto it = characters.find({k, j});
  if (it == characters.end())
    return out;
  for (const auto &[mu, value] : it->second)
    out.add_term(mu, MotiveClass(mpq_class(value / mpq_class(z_of(mu)))));
  return out;
}

EquivariantClass ec_open_stratum(int n)
{
  check_points(n, kMaxOpenStratumPoints, "ec_open_stratum");
  // Graded traces of the fiber action, keyed by (points, cycle type).
  std::map<std::pair<int, Partition>, std::map<std::pair<int, int>, std::int64_t>> trace_cache;
  auto fiber_trace = [&](const Permutation &pi) -> const std::map<std::pair<int, int>, std::int64_t> & {
    const auto key = std::make_pair(pi.degree(), pi.cycle_type());
    auto it = trace_cache.find(key);
    if (it == trace_cache.end())
      it = trace_cache.emplace(key, fiber_action(pi.degree()).graded_trace(pi)).first;
    return it->second;
  };

  EquivariantClass out;
  out.n = n;
  for (const auto &mu : partitions_of(n)) {
    const Permutation sigma = Permutation::from_cycle_type(mu);
    const auto stable = stable_set_partitions(sigma);
    const auto mob = subposet_mobius(stable);
    auto &traces = out.traces[mu];
    for (std::size_t s = 0; s < stable.size(); ++s) {
      if (mob[s] == 0)
        continue;
      std::vector<int> images;
      for (int b : stable[s].block_permutation)
        images.push_back(b + 1);
      const Permutation pi(std::move(images));
      for (const auto &[cw, tr] : fiber_trace(pi))
        traces[cw] += mpq_class(mob[s] * tr * parity_sign(cw.first));
    }
  }

  for (const auto &[mu, traces] : out.traces)
    for (const auto &[cw, value] : traces) {
      const auto [c, k] = cw;
      if (k < 0)
        continue;
      mpq_class above = 0;
      if (auto it = traces.find({c, k + 2}); it != traces.end())
        above = it->second;
      const mpq_class m = value - above;
      if (m != 0)
        out.characters[{k, (c - k) / 2}][mu] = m;
    }
  // Drop characters that vanish identically.
  std::erase_if(out.characters, [](const auto &kv) {
    return std::all_of(kv.second.begin(), kv.second.end(), [](const auto &e) { return e.second == 0; });
  });
  return out;
}

MotiveClass es_ec(int k)
{
  if (k < 0)
    throw std::invalid_argument("es_ec: k must be non-negative");
  if (k == 0)
    return MotiveClass::lefschetz(1);
  if (k % 2 == 1)
    return MotiveClass();
  return MotiveClass::cusp(k + 2, 0, -1) + MotiveClass(-1);
}

MotiveClass interior_Ac(int n)
{
  if (n < 1)
    throw std::invalid_argument("interior_Ac: n must be positive");
  MotiveClass c = es_ec(n - 1);
  if (n % 2 == 0)
    c = -c;
  return c.normalized();
}

AltSeries a1_alternating(int max_degree)
{
  AltSeries out(max_degree);
  for (int n = 1; n <= max_degree; ++n)
    out.set(n, interior_Ac(n));
  return out;
}

SymSeries a1_small(int max_degree)
{
  if (max_degree < 1 || max_degree > kMaxOpenStratumPoints)
    throw std::out_of_range("a1_small: degree must lie in [1, " + std::to_string(kMaxOpenStratumPoints) + "]");
  SymSeries out(max_degree);
  for (int n = 1; n <= max_degree; ++n) {
    const EquivariantClass cls = ec_open_stratum(n);
    for (const auto &[kj, chi] : cls.characters) {
      const auto [k, j] = kj;
      const MotiveClass coeff = es_ec(k) * MotiveClass::lefschetz(j);
      if (coeff.is_zero())
        continue;
      out += cls.characteristic(k, j, max_degree) * coeff;
    }
  }
  return out;
}

} // namespace altmot::fiber
