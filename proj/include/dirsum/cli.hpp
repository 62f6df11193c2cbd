#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "dirsum/coefficients.hpp"
#include "dirsum/weights.hpp"

namespace dirsum::cli {

enum class Subcommand { Norm, Decompose, Counterexample, Converge, Interpolate, ValidateWeights };
enum class OutputFormat { Csv, Json };

/// Exit codes. Nothing else is ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

/// Relative tolerance for `norm --oracle`.
inline constexpr double kOracleTolerance = 1e-3;

struct RunConfig {
  Subcommand subcommand = Subcommand::Norm;
  std::string measure_spec = "sigma";
  int order_m = 1;
  /// boxcar | tapered:EPS | fejer | table:PATH
  std::string weight_spec = "boxcar";
  WeightVariant variant = WeightVariant::Shifted;
  /// weighted | dirac
  std::string method = "weighted";
  std::pair<int, int> n_range{0, 0};
  /// Single index for decompose/interpolate.
  int n = 1;
  /// Comma-separated angles; empty means "the atoms of the measure".
  std::string points_spec;
  std::string input_path;
  std::string output_path;
  std::optional<OutputFormat> output_format;
  bool oracle = false;
  std::uint64_t seed = 0;
  /// When >= 0 and no input file is given, f is drawn from the seed with
  /// nonzero coefficients on [random_start, random_degree].
  int random_degree = -1;
  int random_start = -1;

  // validate-weights
  std::string kind = "boxcar";
  double eps = 0.5;
  int n_max = 50;
  double claimed_M = std::numeric_limits<double>::quiet_NaN();
  double claimed_L = std::numeric_limits<double>::quiet_NaN();
  double tol_col = kDefaultColumnTolerance;
  std::string table_path;
};

/// `sigma` or `points:t1:c1[,t2:c2,...]`, angles in radians, masses > 0.
/// Throws ParseError, InvalidArgument, DuplicatePoints.
Measure parse_measure(const std::string& spec);

/// Comma-separated angles. Throws ParseError.
std::vector<UnitPoint> parse_points(const std::string& spec);

/// Checks everything that can be checked without touching input files.
/// Throws InvalidArgument.
void validate_config(const RunConfig& config);

/// Executes a validated config. Data goes to output_path when set (summary to
/// out) and to out otherwise (summary to err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, validates, runs; maps every failure onto 0/1/2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dirsum::cli
