#include "altmot/symfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace altmot
{

namespace
{

void require_same_truncation(const SymSeries &a, const SymSeries &b, const char *op)
{
  if (a.max_degree() != b.max_degree())
    throw std::invalid_argument(std::string(op) + ": truncation mismatch (" + std::to_string(a.max_degree()) +
                                " vs " + std::to_string(b.max_degree()) + ")");
}

void require_degree(int k, int max_degree, const char *what)
{
  if (k < 0 || k > max_degree)
    throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(k) +
                                " exceeds truncation " + std::to_string(max_degree));
}

void add_into(SymSeries::Component &comp, const Partition &lambda, const MotiveClass &c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = comp.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      comp.erase(it);
  }
}

mpq_class inverse_z(const Partition &lambda) { return mpq_class(1, 1) / mpq_class(z_of(lambda)); }

} // namespace

SymSeries::SymSeries(int max_degree) : max_degree_(max_degree)
{
  if (max_degree < 0)
    throw std::invalid_argument("SymSeries: negative truncation degree");
  terms_.resize(static_cast<std::size_t>(max_degree) + 1);
}

SymSeries SymSeries::scalar(const MotiveClass &c, int max_degree)
{
  SymSeries s(max_degree);
  s.add_term(Partition{}, c);
  return s;
}

SymSeries SymSeries::power_sum(const Partition &lambda, int max_degree, const MotiveClass &coeff)
{
  require_degree(lambda.size(), max_degree, "power_sum");
  SymSeries s(max_degree);
  s.add_term(lambda, coeff);
  return s;
}

SymSeries SymSeries::h(int k, int max_degree)
{
  require_degree(k, max_degree, "h");
  SymSeries s(max_degree);
  for (const auto &lambda : partitions_of(k))
    s.add_term(lambda, inverse_z(lambda));
  return s;
}

SymSeries SymSeries::e(int k, int max_degree)
{
  require_degree(k, max_degree, "e");
  SymSeries s(max_degree);
  for (const auto &lambda : partitions_of(k))
    s.add_term(lambda, MotiveClass(mpq_class(inverse_z(lambda) * lambda.sign())));
  return s;
}

SymSeries SymSeries::schur(const Partition &lambda, int max_degree)
{
  require_degree(lambda.size(), max_degree, "schur");
  SymSeries s(max_degree);
  const auto table = character_table(lambda.size());
  const std::size_t li = table->index_of(lambda);
  for (std::size_t mi = 0; mi < table->partitions().size(); ++mi) {
    const auto &mu = table->partitions()[mi];
    s.add_term(mu, MotiveClass(mpq_class(inverse_z(mu) * table->at(li, mi))));
  }
  return s;
}

const SymSeries::Component &SymSeries::component(int n) const
{
  require_degree(n, max_degree_, "component");
  return terms_[static_cast<std::size_t>(n)];
}

MotiveClass SymSeries::coefficient(const Partition &lambda) const
{
  if (lambda.size() > max_degree_)
    return {};
  const auto &comp = terms_[static_cast<std::size_t>(lambda.size())];
  auto it = comp.find(lambda);
  return it == comp.end() ? MotiveClass{} : it->second;
}

void SymSeries::add_term(const Partition &lambda, const MotiveClass &c)
{
  if (lambda.size() > max_degree_)
    return;
  add_into(terms_[static_cast<std::size_t>(lambda.size())], lambda, c);
}

bool SymSeries::is_zero() const noexcept { return min_degree() < 0; }

int SymSeries::min_degree() const noexcept
{
  for (std::size_t n = 0; n < terms_.size(); ++n)
    if (!terms_[n].empty())
      return static_cast<int>(n);
  return -1;
}

bool SymSeries::is_tate_only() const noexcept
{
  for (const auto &comp : terms_)
    for (const auto &[lambda, c] : comp)
      if (!c.is_tate_only())
        return false;
  return true;
}

std::size_t SymSeries::term_count() const noexcept
{
  std::size_t count = 0;
  for (const auto &comp : terms_)
    count += comp.size();
  return count;
}

SymSeries SymSeries::truncated(int degree) const
{
  if (degree > max_degree_)
    throw std::invalid_argument("truncated: cannot raise the truncation degree from " +
                                std::to_string(max_degree_) + " to " + std::to_string(degree));
  SymSeries out(degree);
  for (int n = 0; n <= degree; ++n)
    out.terms_[static_cast<std::size_t>(n)] = terms_[static_cast<std::size_t>(n)];
  return out;
}

SymSeries SymSeries::degree_part(int n) const
{
  SymSeries out(max_degree_);
  out.terms_[static_cast<std::size_t>(n)] = component(n);
  return out;
}

SymSeries &SymSeries::operator+=(const SymSeries &rhs)
{
  require_same_truncation(*this, rhs, "add");
  for (std::size_t n = 0; n < terms_.size(); ++n)
    for (const auto &[lambda, c] : rhs.terms_[n])
      add_into(terms_[n], lambda, c);
  return *this;
}

SymSeries &SymSeries::operator-=(const SymSeries &rhs)
{
  require_same_truncation(*this, rhs, "subtract");
  for (std::size_t n = 0; n < terms_.size(); ++n)
    for (const auto &[lambda, c] : rhs.terms_[n])
      add_into(terms_[n], lambda, -c);
  return *this;
}

SymSeries &SymSeries::operator*=(const MotiveClass &c)
{
  for (auto &comp : terms_) {
    Component next;
    for (const auto &[lambda, v] : comp)
      add_into(next, lambda, v * c);
    comp = std::move(next);
  }
  return *this;
}

SymSeries SymSeries::operator-() const
{
  SymSeries out = *this;
  out *= MotiveClass(-1);
  return out;
}

SymSeries operator*(const SymSeries &a, const SymSeries &b)
{
  require_same_truncation(a, b, "mul");
  const int N = a.max_degree_;
  SymSeries out(N);
  for (int da = 0; da <= N; ++da) {
    const auto &ca = a.terms_[static_cast<std::size_t>(da)];
    if (ca.empty())
      continue;
    for (int db = 0; da + db <= N; ++db) {
      const auto &cb = b.terms_[static_cast<std::size_t>(db)];
      if (cb.empty())
        continue;
      auto &target = out.terms_[static_cast<std::size_t>(da + db)];
      for (const auto &[la, va] : ca)
        for (const auto &[lb, vb] : cb) {
          auto [it, inserted] = target.try_emplace(la.joined(lb));
          it->second.add_product(va, vb);
        }
    }
  }
  for (auto &comp : out.terms_)
    std::erase_if(comp, [](const auto &kv) { return kv.second.is_zero(); });
  return out;
}

bool operator==(const SymSeries &a, const SymSeries &b)
{
  if (a.max_degree_ != b.max_degree_)
    return false;
  for (std::size_t n = 0; n < a.terms_.size(); ++n) {
    const auto &ca = a.terms_[n];
    const auto &cb = b.terms_[n];
    if (ca.size() != cb.size())
      return false;
    for (auto ia = ca.begin(), ib = cb.begin(); ia != ca.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second))
        return false;
  }
  return true;
}

SymSeries mul(const SymSeries &f, const SymSeries &g) { return f * g; }

MotiveClass inner(const SymSeries &f, const SymSeries &g, int n)
{
  require_degree(n, std::min(f.max_degree(), g.max_degree()), "inner");
  MotiveClass total;
  const auto &cg = g.component(n);
  for (const auto &[lambda, c] : f.component(n)) {
    auto it = cg.find(lambda);
    if (it == cg.end())
      continue;
    total.add_product(c * mpq_class(z_of(lambda)), it->second);
  }
  return total;
}

SymSeries p_derivative(const SymSeries &f, int k)
{
  if (k < 1)
    throw std::invalid_argument("p_derivative: k must be positive");
  if (k > f.max_degree())
    throw std::invalid_argument("p_derivative: k exceeds the truncation degree");
  SymSeries out(f.max_degree() - k);
  for (int n = k; n <= f.max_degree(); ++n)
    for (const auto &[lambda, c] : f.component(n)) {
      const int m = lambda.multiplicity(k);
      if (m == 0)
        continue;
      out.add_term(lambda.without_part(k), c * mpq_class(m));
    }
  return out;
}

SymSeries adams_plethysm(int k, const SymSeries &g)
{
  if (k < 1)
    throw std::invalid_argument("adams_plethysm: k must be positive");
  SymSeries out(g.max_degree());
  for (int n = 0; n * k <= g.max_degree(); ++n)
    for (const auto &[lambda, c] : g.component(n))
      out.add_term(lambda.scaled(k), adams(c, k));
  return out;
}

SymSeries plethysm(const SymSeries &f, const SymSeries &g)
{
  require_same_truncation(f, g, "plethysm");
  if (!g.constant_term().is_zero())
    throw std::invalid_argument("plethysm: inner series has a nonzero constant term");
  if (!g.is_tate_only())
    throw std::domain_error("plethysm: inner series carries cusp symbols");
  const int N = f.max_degree();

  std::vector<SymSeries> powers; // powers[k] = p_k ∘ g
  powers.reserve(static_cast<std::size_t>(N) + 1);
  powers.emplace_back(N);
  for (int k = 1; k <= N; ++k)
    powers.push_back(adams_plethysm(k, g));

  // p_λ ∘ g, memoized along prefixes: P(λ) = P(λ minus its last part)·(p_last ∘ g).
  std::map<Partition, SymSeries> memo;
  memo.emplace(Partition{}, SymSeries::scalar(1, N));
  auto product_for = [&](auto &&self, const Partition &lambda) -> const SymSeries & {
    if (auto it = memo.find(lambda); it != memo.end())
      return it->second;
    const int last = lambda.parts().back();
    const SymSeries &prefix = self(self, lambda.without_part(last));
    SymSeries value = prefix * powers[static_cast<std::size_t>(last)];
    return memo.emplace(lambda, std::move(value)).first->second;
  };

  SymSeries out(N);
  for (int n = 0; n <= N; ++n)
    for (const auto &[lambda, c] : f.component(n)) {
      const SymSeries &composed = product_for(product_for, lambda);
      for (int m = composed.min_degree(); m >= 0 && m <= N; ++m)
        for (const auto &[mu, v] : composed.component(m))
          out.add_term(mu, c * v);
    }
  return out;
}

SymSeries log1m(const SymSeries &g)
{
  if (!g.constant_term().is_zero())
    throw std::invalid_argument("log1m: series has a nonzero constant term");
  SymSeries out(g.max_degree());
  SymSeries power = g;
  for (int m = 1; !power.is_zero(); ++m) {
    out -= power * MotiveClass(rational(1, m));
    power = power * g;
  }
  return out;
}

SymSeries geom(const SymSeries &g)
{
  if (!g.constant_term().is_zero())
    throw std::invalid_argument("geom: series has a nonzero constant term");
  SymSeries out = SymSeries::scalar(1, g.max_degree());
  SymSeries power = g;
  while (!power.is_zero()) {
    out += power;
    power = power * g;
  }
  return out;
}

SymSeries divide(const SymSeries &f, const SymSeries &g)
{
  if (!(g.constant_term() == MotiveClass(1)))
    throw std::invalid_argument("divide: denominator must have constant term 1");
  SymSeries rest = g;
  rest.add_term(Partition{}, MotiveClass(-1));
  return f * geom(-rest);
}

std::map<Partition, MotiveClass> to_schur(const SymSeries &f, int n)
{
  const auto table = character_table(n);
  const auto &parts = table->partitions();
  std::map<Partition, MotiveClass> out;
  const auto &comp = f.component(n);
  for (std::size_t li = 0; li < parts.size(); ++li) {
    MotiveClass total;
    for (const auto &[mu, c] : comp) {
      const std::int64_t chi = table->at(li, table->index_of(mu));
      if (chi != 0)
        total += c * mpq_class(chi);
    }
    if (!total.is_zero())
      out.emplace(parts[li], std::move(total));
  }
  return out;
}

SymSeries from_schur(const std::map<Partition, MotiveClass> &schur, int max_degree)
{
  SymSeries out(max_degree);
  for (const auto &[lambda, c] : schur)
    out += SymSeries::schur(lambda, max_degree) * c;
  return out;
}

SymSeries omega(const SymSeries &f)
{
  SymSeries out(f.max_degree());
  for (int n = 0; n <= f.max_degree(); ++n)
    for (const auto &[lambda, c] : f.component(n))
      out.add_term(lambda, lambda.sign() > 0 ? c : -c);
  return out;
}

MotiveClass rank_of(const SymSeries &f, int n)
{
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return f.coefficient(Partition::column(n)) * mpq_class(fact);
}

// --- AltSeries ----------------------------------------------------------------

AltSeries::AltSeries(int max_degree) : max_degree_(max_degree)
{
  if (max_degree < 0)
    throw std::invalid_argument("AltSeries: negative truncation degree");
  coeffs_.resize(static_cast<std::size_t>(max_degree) + 1);
}

AltSeries::AltSeries(int max_degree, std::vector<MotiveClass> coeffs) : AltSeries(max_degree)
{
  for (std::size_t n = 0; n < coeffs.size() && n < coeffs_.size(); ++n)
    coeffs_[n] = std::move(coeffs[n]);
}

void AltSeries::set(int n, MotiveClass c)
{
  if (n < 0 || n > max_degree_)
    throw std::out_of_range("AltSeries::set: degree out of range");
  coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

AltSeries &AltSeries::operator+=(const AltSeries &rhs)
{
  if (rhs.max_degree_ != max_degree_)
    throw std::invalid_argument("AltSeries: truncation mismatch");
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

AltSeries operator*(const AltSeries &a, const AltSeries &b)
{
  if (a.max_degree_ != b.max_degree_)
    throw std::invalid_argument("AltSeries: truncation mismatch");
  AltSeries out(a.max_degree_);
  for (int i = 0; i <= a.max_degree_; ++i)
    for (int j = 0; i + j <= a.max_degree_; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)].add_product(a.coeffs_[static_cast<std::size_t>(i)],
                                                               b.coeffs_[static_cast<std::size_t>(j)]);
  return out;
}

bool operator==(const AltSeries &a, const AltSeries &b)
{
  return a.max_degree_ == b.max_degree_ && a.coeffs_ == b.coeffs_;
}

std::string AltSeries::to_string() const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero())
      continue;
    os << (first ? "" : " + ") << '(' << coeffs_[n].to_string() << ")*t^" << n;
    first = false;
  }
  if (first)
    os << '0';
  os << " + O(t^" << max_degree_ + 1 << ')';
  return os.str();
}

AltSeries alt(const SymSeries &f)
{
  AltSeries out(f.max_degree());
  for (int n = 0; n <= f.max_degree(); ++n) {
    MotiveClass total;
    for (const auto &[lambda, c] : f.component(n)) {
      if (lambda.sign() > 0)
        total += c;
      else
        total -= c;
    }
    out.set(n, std::move(total));
  }
  return out;
}

AltSeries alt_from_rationals(int max_degree, const std::vector<mpq_class> &coeffs)
{
  AltSeries out(max_degree);
  for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= max_degree; ++n)
    out.set(static_cast<int>(n), MotiveClass(coeffs[n]));
  return out;
}

} // namespace altmot
