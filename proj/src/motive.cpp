#include "altmot/motive.hpp"

#include <sstream>
#include <stdexcept>

namespace altmot
{

namespace
{

template <typename Map, typename Key>
void accumulate(Map &m, const Key &key, const mpq_class &c)
{
  if (c == 0)
    return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      m.erase(it);
  }
}

} // namespace

MotiveClass::MotiveClass(const mpq_class &c)
{
  if (c != 0)
    tate_.emplace(0, c);
}

MotiveClass MotiveClass::lefschetz(int j, const mpq_class &coeff)
{
  if (j < 0)
    throw std::invalid_argument("negative Lefschetz power");
  MotiveClass m;
  m.add_tate(j, coeff);
  return m;
}

MotiveClass MotiveClass::cusp(int k, int j, const mpq_class &coeff)
{
  MotiveClass m;
  m.add_cusp(k, j, coeff);
  return m;
}

void MotiveClass::add_tate(int j, const mpq_class &c) { accumulate(tate_, j, c); }

void MotiveClass::add_cusp(int k, int j, const mpq_class &c)
{
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("cusp symbol S[" + std::to_string(k) + "] needs an even weight >= 2");
  if (j < 0)
    throw std::invalid_argument("negative Lefschetz power");
  accumulate(cusp_, std::make_pair(k, j), c);
}

mpq_class MotiveClass::tate_coeff(int j) const
{
  auto it = tate_.find(j);
  return it == tate_.end() ? mpq_class(0) : it->second;
}

mpq_class MotiveClass::cusp_coeff(int k, int j) const
{
  auto it = cusp_.find({k, j});
  return it == cusp_.end() ? mpq_class(0) : it->second;
}

bool MotiveClass::is_scalar() const noexcept
{
  return cusp_.empty() && (tate_.empty() || (tate_.size() == 1 && tate_.begin()->first == 0));
}

int MotiveClass::max_lefschetz_degree() const noexcept
{
  int d = -1;
  if (!tate_.empty())
    d = tate_.rbegin()->first;
  for (const auto &[key, c] : cusp_)
    d = std::max(d, key.second);
  return d;
}

MotiveClass MotiveClass::normalized() const
{
  MotiveClass out;
  out.tate_ = tate_;
  for (const auto &[key, c] : cusp_) {
    const auto [k, j] = key;
    if (k == 2) {
      out.add_tate(j + 1, -c);
      out.add_tate(j, -c);
    } else {
      out.add_cusp(k, j, c);
    }
  }
  return out;
}

MotiveClass &MotiveClass::operator+=(const MotiveClass &rhs)
{
  for (const auto &[j, c] : rhs.tate_)
    accumulate(tate_, j, c);
  for (const auto &[key, c] : rhs.cusp_)
    accumulate(cusp_, key, c);
  return *this;
}

MotiveClass &MotiveClass::operator-=(const MotiveClass &rhs)
{
  for (const auto &[j, c] : rhs.tate_)
    accumulate(tate_, j, -c);
  for (const auto &[key, c] : rhs.cusp_)
    accumulate(cusp_, key, -c);
  return *this;
}

MotiveClass &MotiveClass::operator*=(const mpq_class &c)
{
  if (c == 0) {
    tate_.clear();
    cusp_.clear();
    return *this;
  }
  for (auto &[j, v] : tate_)
    v *= c;
  for (auto &[key, v] : cusp_)
    v *= c;
  return *this;
}

void MotiveClass::add_product(const MotiveClass &a, const MotiveClass &b)
{
  if (!a.cusp_.empty() && !b.cusp_.empty())
    throw std::domain_error("product of two cusp symbols is not supported");
  mpq_class prod;
  for (const auto &[ja, ca] : a.tate_) {
    for (const auto &[jb, cb] : b.tate_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      accumulate(tate_, ja + jb, prod);
    }
    for (const auto &[key, cb] : b.cusp_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      accumulate(cusp_, std::make_pair(key.first, key.second + ja), prod);
    }
  }
  for (const auto &[key, ca] : a.cusp_)
    for (const auto &[jb, cb] : b.tate_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      accumulate(cusp_, std::make_pair(key.first, key.second + jb), prod);
    }
}

MotiveClass &MotiveClass::operator*=(const MotiveClass &rhs)
{
  MotiveClass out;
  out.add_product(*this, rhs);
  return *this = std::move(out);
}

MotiveClass operator*(const MotiveClass &a, const MotiveClass &b)
{
  MotiveClass out;
  out.add_product(a, b);
  return out;
}

MotiveClass MotiveClass::operator-() const
{
  MotiveClass out = *this;
  out *= mpq_class(-1);
  return out;
}

bool operator==(const MotiveClass &a, const MotiveClass &b)
{
  const MotiveClass na = a.normalized();
  const MotiveClass nb = b.normalized();
  return na.tate_ == nb.tate_ && na.cusp_ == nb.cusp_;
}

namespace
{

void append_term(std::ostringstream &os, bool &first, const mpq_class &c, const std::string &symbol)
{
  mpq_class mag = abs(c);
  if (first)
    os << (c < 0 ? "-" : "");
  else
    os << (c < 0 ? " - " : " + ");
  first = false;
  if (symbol.empty()) {
    os << mag.get_str();
    return;
  }
  if (mag != 1)
    os << mag.get_str() << '*';
  os << symbol;
}

std::string lefschetz_symbol(int j)
{
  if (j == 0)
    return "";
  if (j == 1)
    return "L";
  return "L^" + std::to_string(j);
}

} // namespace

std::string MotiveClass::to_string() const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  // Cusp symbols by descending weight, then Tate terms by descending power.
  for (auto it = cusp_.rbegin(); it != cusp_.rend(); ++it) {
    const auto [k, j] = it->first;
    std::string sym = "S[" + std::to_string(k) + "]";
    if (j > 0)
      sym += "*" + lefschetz_symbol(j);
    append_term(os, first, it->second, sym);
  }
  for (auto it = tate_.rbegin(); it != tate_.rend(); ++it)
    append_term(os, first, it->second, lefschetz_symbol(it->first));
  return os.str();
}

MotiveClass adams(const MotiveClass &a, int k)
{
  if (k < 1)
    throw std::invalid_argument("adams: k must be positive");
  if (!a.is_tate_only())
    throw std::domain_error("adams: Adams operations on cusp symbols are undefined");
  MotiveClass out;
  for (const auto &[j, c] : a.tate_terms())
    out.add_tate(j * k, c);
  return out;
}

int dim_cusp_forms(int k)
{
  if (k < 0)
    throw std::invalid_argument("dim_cusp_forms: negative weight");
  if (k % 2 != 0 || k < 12)
    return 0;
  return (k % 12 == 2) ? k / 12 - 1 : k / 12;
}

Realization realize(const MotiveClass &a)
{
  Realization r;
  const MotiveClass n = a.normalized();
  auto add = [&r](int p, int q, const mpq_class &m) {
    if (m == 0)
      return;
    auto [it, inserted] = r.hodge.try_emplace({p, q}, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0)
        r.hodge.erase(it);
    }
  };
  for (const auto &[j, c] : n.tate_terms()) {
    r.rank += c;
    add(j, j, c);
  }
  for (const auto &[key, c] : n.cusp_terms()) {
    const auto [k, j] = key;
    const mpq_class mult = c * dim_cusp_forms(k);
    r.rank += 2 * mult;
    add(k - 1 + j, j, mult);
    add(j, k - 1 + j, mult);
  }
  return r;
}

} // namespace altmot
