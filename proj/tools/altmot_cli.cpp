// Command-line front end: dumps the intermediate series and runs the checks.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "altmot/acceptance.hpp"
#include "altmot/genus0.hpp"
#include "altmot/genus1_boundary.hpp"
#include "altmot/genus1_fiber.hpp"
#include "altmot/json_io.hpp"
#include "altmot/pipeline.hpp"

using namespace altmot;
using json::Basis;

namespace
{

// Exit codes.
constexpr int kUsageError = 2;
constexpr int kRangeError = 3;
constexpr int kCheckFailed = 1;

struct Options
{
  int max_degree = kDefaultMaxDegree;
  bool as_json = false;
  std::string basis = "power";
  std::string out;
  int n = 0;
};

class RangeError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string parenthesized(const MotiveClass &c)
{
  const std::string s = c.to_string();
  const bool compound = c.tate_terms().size() + c.cusp_terms().size() > 1;
  return compound ? "(" + s + ")" : s;
}

std::string label(const Partition &lambda)
{
  std::string s = lambda.to_string();
  return "[" + s.substr(1, s.size() - 2) + "]";
}

// One degree per row, aligned on the degree column.
std::string series_table(const SymSeries &f, Basis basis)
{
  std::ostringstream os;
  const char prefix = basis == Basis::power ? 'p' : 's';
  os << std::setw(6) << "degree" << "  terms\n";
  for (int n = 0; n <= f.max_degree(); ++n) {
    std::vector<std::pair<Partition, MotiveClass>> terms;
    if (basis == Basis::power || n == 0)
      terms.assign(f.component(n).begin(), f.component(n).end());
    else
      for (const auto &[lambda, c] : to_schur(f, n))
        terms.emplace_back(lambda, c);
    std::string row;
    for (const auto &[lambda, c] : terms) {
      if (c.is_zero())
        continue;
      if (!row.empty())
        row += " + ";
      row += parenthesized(c) + (n == 0 ? "" : std::string("*") + prefix + label(lambda));
    }
    if (!row.empty())
      os << std::setw(6) << n << "  " << row << "\n";
  }
  return os.str();
}

std::string alt_table(const AltSeries &a)
{
  std::ostringstream os;
  os << std::setw(6) << "n" << "  coefficient\n";
  for (int n = 1; n <= a.max_degree(); ++n)
    os << std::setw(6) << n << "  " << a[n].to_string() << "\n";
  return os.str();
}

struct Output
{
  std::string text;
  nlohmann::json result;
  int status = 0;
};

Basis parse_basis(const std::string &s) { return s == "schur" ? Basis::schur : Basis::power; }

Output series_command(const SymSeries &f, const Options &o)
{
  const Basis b = parse_basis(o.basis);
  return {series_table(f, b), json::to_json(f, b)};
}

Output rows_check(const Options &o)
{
  Output out;
  out.result = nlohmann::json::array();
  std::ostringstream os;
  const int top = std::min(o.max_degree, genus0::kMaxPoincareN);
  for (int n = 3; n <= top; ++n) {
    const auto table = genus0::poincare_schur(n);
    const auto violations = genus0::row_bound_violations(n);
    nlohmann::json groups = nlohmann::json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      nlohmann::json schur = nlohmann::json::array();
      std::string row;
      for (const auto &[lambda, m] : table[i]) {
        if (m == 0)
          continue;
        schur.push_back({{"partition", lambda.parts()}, {"multiplicity", json::rational_to_string(m)}});
        row += (row.empty() ? "" : " + ") + (m == 1 ? std::string() : m.get_str() + "*") + "s" + label(lambda);
      }
      groups.push_back({{"i", i}, {"schur", schur}});
      os << "n=" << std::setw(2) << n << "  H^" << i << "  " << (row.empty() ? "0" : row) << "\n";
    }
    nlohmann::json bad = nlohmann::json::array();
    for (const auto &v : violations)
      bad.push_back({{"i", v.i}, {"partition", v.lambda.parts()}});
    out.result.push_back({{"n", n}, {"cohomology", groups}, {"violations", bad}});
    if (!violations.empty())
      out.status = kCheckFailed;
  }
  os << (out.status == 0 ? "row bound holds" : "row bound VIOLATED") << " for 3 <= n <= " << top << "\n";
  out.text = os.str();
  return out;
}

std::vector<int> point_range(const Options &o, int lo, int max)
{
  if (o.n != 0) {
    if (o.n < lo || o.n > max)
      throw RangeError("n must lie in [" + std::to_string(lo) + ", " + std::to_string(max) + "]");
    return {o.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= max; ++n)
    out.push_back(n);
  return out;
}

Output fiber_command(const Options &o)
{
  Output out;
  out.result = nlohmann::json::array();
  std::ostringstream os;
  os << std::setw(3) << "n" << std::setw(8) << "degree" << std::setw(8) << "weight" << std::setw(6) << "dim"
     << std::setw(12) << "by trace" << "\n";
  for (int n : point_range(o, 2, fiber::kMaxFiberPoints)) {
    const auto comp = fiber::alternating_component(n);
    const auto traced = fiber::alternating_dims_by_trace(n);
    nlohmann::json dims = nlohmann::json::array();
    std::set<std::pair<int, int>> keys;
    for (const auto &[k, d] : comp.dims)
      keys.insert(k);
    for (const auto &[k, d] : traced)
      keys.insert(k);
    for (const auto &k : keys) {
      const int d = comp.dims.count(k) ? comp.dims.at(k) : 0;
      const mpq_class t = traced.count(k) ? traced.at(k) : mpq_class(0);
      dims.push_back({{"degree", k.first}, {"weight", k.second}, {"dim", d}, {"trace_dim", json::rational_to_string(t)}});
      os << std::setw(3) << n << std::setw(8) << k.first << std::setw(8) << k.second << std::setw(6) << d
         << std::setw(12) << t.get_str() << "\n";
    }
    out.result.push_back({{"n", n}, {"total", comp.total()}, {"dims", dims}});
  }
  out.text = os.str();
  return out;
}

Output open_stratum_command(const Options &o)
{
  Output out;
  out.result = nlohmann::json::array();
  std::ostringstream os;
  for (int n : point_range(o, 1, fiber::kMaxOpenStratumPoints)) {
    const auto cls = fiber::ec_open_stratum(n);
    const auto alt_part = cls.alternating_part();
    nlohmann::json chars = nlohmann::json::array();
    os << "n=" << n << "\n" << std::setw(8) << "Sym^k" << std::setw(6) << "L^j" << std::setw(8) << "sgn" << "  character\n";
    for (const auto &[kj, values] : cls.characters) {
      nlohmann::json vals = nlohmann::json::array();
      std::string row;
      for (const auto &[mu, v] : values) {
        vals.push_back({{"cycle_type", mu.parts()}, {"value", json::rational_to_string(v)}});
        row += " " + label(mu) + ":" + v.get_str();
      }
      chars.push_back({{"k", kj.first}, {"j", kj.second}, {"values", vals},
                       {"alternating", json::rational_to_string(alt_part.at(kj))}});
      os << std::setw(8) << kj.first << std::setw(6) << kj.second << std::setw(8) << alt_part.at(kj).get_str() << " "
         << row << "\n";
    }
    out.result.push_back({{"n", n}, {"characters", chars}});
  }
  out.text = os.str();
  return out;
}

Output necklace_command(const Options &o)
{
  const SymSeries f = genus1::necklace_series(o.max_degree);
  const Basis b = parse_basis(o.basis);
  Output out;
  out.result = {{"series", json::to_json(f, b)}, {"alt", json::to_json(alt(f))}};
  out.text = series_table(f, b) + "\nAlt\n" + alt_table(alt(f));
  return out;
}

Output boundary_command(const Options &o)
{
  const auto tables = genus0::build_tables(o.max_degree);
  const SymSeries necklace = genus1::necklace_series(tables);
  const SymSeries correction = genus1::correction_series(tables);
  const AltSeries a = genus1::boundary_alt(tables);
  const Basis b = parse_basis(o.basis);
  Output out;
  out.result = {{"alt", json::to_json(a)},
                {"necklace", json::to_json(necklace, b)},
                {"necklace_alt", json::to_json(alt(necklace))},
                {"correction", json::to_json(correction, b)},
                {"correction_alt", json::to_json(alt(correction))}};
  std::ostringstream os;
  os << std::setw(6) << "n" << std::setw(12) << "necklace" << std::setw(12) << "correction" << std::setw(12)
     << "boundary" << "\n";
  const AltSeries an = alt(necklace), ac = alt(correction);
  for (int n = 1; n <= o.max_degree; ++n)
    os << std::setw(6) << n << std::setw(12) << an[n].to_string() << std::setw(12) << ac[n].to_string() << std::setw(12)
       << a[n].to_string() << "\n";
  out.text = os.str();
  return out;
}

Output interior_command(const Options &o)
{
  const AltSeries a = fiber::a1_alternating(o.max_degree);
  return {alt_table(a), json::to_json(a)};
}

Output motive_command(const Options &o)
{
  if (o.n < 1 || o.n > pipeline::kMaxDegree)
    throw RangeError("n must lie in [1, " + std::to_string(pipeline::kMaxDegree) + "]");
  const auto r = pipeline::main_theorem(o.n);
  Output out;
  out.result = {{"n", r.n},
                {"interior", json::to_json(r.interior)},
                {"boundary", json::to_json(r.boundary)},
                {"total", json::to_json(r.total)},
                {"realization", json::to_json(r.realization)}};
  std::ostringstream os;
  std::string hodge;
  for (const auto &[pq, m] : r.realization.hodge)
    hodge += (hodge.empty() ? "" : ", ") + std::string("(") + std::to_string(pq.first) + "," +
             std::to_string(pq.second) + "):" + m.get_str();
  os << std::left << std::setw(10) << "n" << r.n << "\n"
     << std::setw(10) << "interior" << r.interior.to_string() << "\n"
     << std::setw(10) << "boundary" << r.boundary.to_string() << "\n"
     << std::setw(10) << "total" << r.total.to_string() << "\n"
     << std::setw(10) << "rank" << r.realization.rank.get_str() << "\n"
     << std::setw(10) << "hodge" << (hodge.empty() ? "-" : hodge) << "\n";
  out.text = os.str();
  return out;
}

Output verify_command(const Options &o)
{
  Output out;
  nlohmann::json criteria = nlohmann::json::array();
  bool all = true;
  std::ostringstream os;
  const bool stream = !o.as_json && o.out.empty();
  acceptance::run_all(o.max_degree, [&](const acceptance::CheckResult &r) {
    all = all && r.passed;
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    if (stream)
      std::cout << acceptance::format(r) << std::endl;
    else
      os << acceptance::format(r) << "\n";
  });
  out.result = {{"passed", all}, {"criteria", criteria}};
  os << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  out.text = os.str();
  out.status = all ? 0 : kCheckFailed;
  return out;
}

const std::vector<std::string> kCommands = {"a0",       "b0prime", "lie",      "rows-check", "fiber",     "open-stratum",
                                            "necklace", "boundary", "interior", "motive",     "verify-all"};

// First token that is neither an option nor an option value.
std::string first_command_token(int argc, char **argv)
{
  static const std::set<std::string> with_value = {"--max-degree", "--basis", "--out"};
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (with_value.count(a)) {
      ++i;
      continue;
    }
    if (!a.empty() && a[0] == '-')
      continue;
    return a;
  }
  return {};
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact symmetric-function engine for alternating parts of genus-one moduli"};
  Options o;
  app.add_option("--max-degree", o.max_degree, "Truncation degree (3..20)");
  app.add_flag("--json", o.as_json, "Emit JSON");
  app.add_option("--basis", o.basis, "Basis for series output")->check(CLI::IsMember({"power", "schur"}));
  app.add_option("--out", o.out, "Write output to this file instead of standard output");
  app.require_subcommand(1);

  std::map<std::string, CLI::App *> sub;
  for (const auto &name : kCommands)
    sub[name] = app.add_subcommand(name)->fallthrough();
  sub["a0"]->description("Equivariant e_c of M_{0,n}, summed over n");
  sub["b0prime"]->description("Rooted-tree series b0'");
  sub["lie"]->description("Cyclic Lie characteristic");
  sub["rows-check"]->description("Row bound for the Schur constituents of H^i(M_{0,n})");
  sub["fiber"]->description("Alternating part of the fiber cohomology");
  sub["open-stratum"]->description("Equivariant e_c of the open configuration stratum");
  sub["necklace"]->description("Necklace series and its Alt");
  sub["boundary"]->description("Boundary Alt-series and its ingredients");
  sub["interior"]->description("Alt-series of the open genus-one moduli spaces");
  sub["motive"]->description("Alternating part of the compactified moduli space for one n");
  sub["verify-all"]->description("Run every acceptance check");
  sub["fiber"]->add_option("n", o.n, "Number of points (default: all)");
  sub["open-stratum"]->add_option("n", o.n, "Number of points (default: all)");
  sub["motive"]->add_option("n", o.n, "Number of marked points")->required();

  const std::string token = first_command_token(argc, argv);
  if (!token.empty() && !sub.count(token)) {
    std::cerr << "error: unknown subcommand '" << token << "'\n";
    return kUsageError;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  if (o.max_degree < 3) {
    std::cerr << "error: minimum degree 3\n";
    return kUsageError;
  }
  if (o.max_degree > pipeline::kMaxDegree) {
    std::cerr << "error: maximum degree " << pipeline::kMaxDegree << "\n";
    return kUsageError;
  }

  std::string command;
  for (const auto &[name, s] : sub)
    if (s->parsed())
      command = name;

  Output out;
  try {
    if (command == "a0")
      out = series_command(genus0::a0_series(o.max_degree), o);
    else if (command == "b0prime")
      out = series_command(genus0::b0_prime(o.max_degree), o);
    else if (command == "lie")
      out = series_command(genus0::ch_lie(o.max_degree), o);
    else if (command == "rows-check")
      out = rows_check(o);
    else if (command == "fiber")
      out = fiber_command(o);
    else if (command == "open-stratum")
      out = open_stratum_command(o);
    else if (command == "necklace")
      out = necklace_command(o);
    else if (command == "boundary")
      out = boundary_command(o);
    else if (command == "interior")
      out = interior_command(o);
    else if (command == "motive")
      out = motive_command(o);
    else
      out = verify_command(o);
  } catch (const RangeError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRangeError;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRangeError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << command << " failed: " << e.what() << "\n";
    return 4;
  }

  const std::string text =
      o.as_json ? json::envelope(command, o.max_degree, out.result).dump(2) + "\n" : out.text;
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kUsageError;
    }
    f << text;
  }
  return out.status;
}
