#pragma once

#include <string>

#include <json.hpp>

#include "altmot/motive.hpp"
#include "altmot/symfunc.hpp"

namespace altmot::json
{

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class Basis { power, schur };

/// "num/den"; the denominator is always written.
std::string rational_to_string(const mpq_class &q);
/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
mpq_class rational_from_string(const std::string &s);

json to_json(const MotiveClass &c);
MotiveClass motive_from_json(const json &j);

json to_json(const SymSeries &f, Basis basis = Basis::power);
SymSeries symseries_from_json(const json &j);

/// {"max_degree": N, "coefficients": [{"degree": n, "coeff": …}, …]}
json to_json(const AltSeries &a);

json to_json(const Realization &r);

/// Top-level document: schema_version, command, max_degree, result.
json envelope(const std::string &command, int max_degree, json result);

} // namespace altmot::json
