#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dirsum/coefficients.hpp"
#include "dirsum/summation.hpp"
#include "dirsum/weights.hpp"

namespace dirsum {

/// Coefficient CSV: header `k,re,im`, then one row per coefficient with k
/// strictly increasing. Throws ParseError with the offending line number.
TaylorPoly read_coefficients(std::istream& in);
TaylorPoly read_coefficients_file(const std::string& path);

/// Writes the nonzero coefficients in the same format.
void write_coefficients(std::ostream& out, const TaylorPoly& f);

/// Shortest round-trip decimal ("%.17g"); "inf"/"-inf"/"nan" for non-finite.
std::string format_number(double x);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const CounterexampleReport& report);
/// bound_ratio becomes null when infinite.
nlohmann::json to_json(const ConvergenceRecord& record);
/// [{"k":..,"re":..,"im":..}, ...] over nonzero coefficients.
nlohmann::json coefficients_json(const TaylorPoly& f);

}  // namespace dirsum
