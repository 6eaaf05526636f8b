#include "altmot/json_io.hpp"

#include <stdexcept>

namespace altmot::json
{

std::string rational_to_string(const mpq_class &q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string &s)
{
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

json to_json(const MotiveClass &c)
{
  json tate = json::array();
  for (const auto &[j, v] : c.tate_terms())
    tate.push_back({j, rational_to_string(v)});
  json cusp = json::array();
  for (const auto &[kj, v] : c.cusp_terms())
    cusp.push_back({kj.first, kj.second, rational_to_string(v)});
  return {{"tate", tate}, {"cusp", cusp}};
}

MotiveClass motive_from_json(const json &j)
{
  MotiveClass out;
  if (j.contains("tate"))
    for (const auto &t : j.at("tate"))
      out.add_tate(t.at(0).get<int>(), rational_from_string(t.at(1).get<std::string>()));
  if (j.contains("cusp"))
    for (const auto &t : j.at("cusp")) {
      const int k = t.at(0).get<int>();
      if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("cusp symbol weight must be even and at least 2");
      out.add_cusp(k, t.at(1).get<int>(), rational_from_string(t.at(2).get<std::string>()));
    }
  return out;
}

json to_json(const SymSeries &f, Basis basis)
{
  json terms = json::array();
  for (int n = 0; n <= f.max_degree(); ++n) {
    const auto emit = [&](const Partition &lambda, const MotiveClass &c) {
      if (!c.is_zero())
        terms.push_back({{"degree", n}, {"partition", lambda.parts()}, {"coeff", to_json(c)}});
    };
    if (basis == Basis::power || n == 0)
      for (const auto &[lambda, c] : f.component(n))
        emit(lambda, c);
    else
      for (const auto &[lambda, c] : to_schur(f, n))
        emit(lambda, c);
  }
  return {{"max_degree", f.max_degree()}, {"basis", basis == Basis::power ? "power" : "schur"}, {"terms", terms}};
}

SymSeries symseries_from_json(const json &j)
{
  const int N = j.at("max_degree").get<int>();
  const std::string basis = j.value("basis", "power");
  if (basis != "power" && basis != "schur")
    throw std::invalid_argument("unknown basis '" + basis + "'");
  SymSeries out(N);
  std::vector<std::map<Partition, MotiveClass>> schur(static_cast<std::size_t>(N) + 1);
  for (const auto &t : j.at("terms")) {
    const Partition lambda(t.at("partition").get<std::vector<int>>());
    if (lambda.size() != t.at("degree").get<int>())
      throw std::invalid_argument("term degree does not match its partition");
    const MotiveClass c = motive_from_json(t.at("coeff"));
    if (basis == "power" || lambda.size() == 0)
      out.add_term(lambda, c);
    else
      schur[static_cast<std::size_t>(lambda.size())][lambda] += c;
  }
  for (const auto &s : schur)
    if (!s.empty())
      out += from_schur(s, N);
  return out;
}

json to_json(const AltSeries &a)
{
  json coeffs = json::array();
  for (int n = 0; n <= a.max_degree(); ++n)
    coeffs.push_back({{"degree", n}, {"coeff", to_json(a[n])}});
  return {{"max_degree", a.max_degree()}, {"coefficients", coeffs}};
}

json to_json(const Realization &r)
{
  json hodge = json::array();
  for (const auto &[pq, m] : r.hodge)
    hodge.push_back({pq.first, pq.second, rational_to_string(m)});
  return {{"rank", rational_to_string(r.rank)}, {"hodge", hodge}};
}

json envelope(const std::string &command, int max_degree, json result)
{
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"max_degree", max_degree},
          {"result", std::move(result)}};
}

} // namespace altmot::json
