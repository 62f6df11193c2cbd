#include "dirsum/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirsum/dirac.hpp"
#include "dirsum/douglas.hpp"
#include "dirsum/errors.hpp"
#include "dirsum/io.hpp"
#include "dirsum/oracle.hpp"
#include "dirsum/summation.hpp"

namespace dirsum::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(what + ": '" + text + "' is not a finite number");
  }
}

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Norm: return "norm";
    case Subcommand::Decompose: return "decompose";
    case Subcommand::Counterexample: return "counterexample";
    case Subcommand::Converge: return "converge";
    case Subcommand::Interpolate: return "interpolate";
    case Subcommand::ValidateWeights: return "validate-weights";
  }
  return "?";
}

bool needs_function(Subcommand s) {
  return s == Subcommand::Norm || s == Subcommand::Decompose || s == Subcommand::Converge ||
         s == Subcommand::Interpolate;
}

TaylorPoly random_function(const RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int lo = c.random_start >= 0 ? c.random_start : c.order_m + 1;
  std::vector<Complex> coeffs;
  for (int k = lo; k <= c.random_degree; ++k) {
    const double re = unit(rng);
    const double im = unit(rng);
    coeffs.emplace_back(re, im);
  }
  return TaylorPoly(lo, std::move(coeffs));
}

TaylorPoly load_function(const RunConfig& c) {
  if (!c.input_path.empty()) return read_coefficients_file(c.input_path);
  return random_function(c);
}

WeightArray make_weights(const RunConfig& c, const std::string& spec, int n_max) {
  const double L = std::isnan(c.claimed_L) ? 1.0 : c.claimed_L;
  if (spec == "boxcar") return WeightArray::boxcar(c.variant, c.order_m);
  if (spec.rfind("tapered:", 0) == 0) {
    return WeightArray::tapered(c.variant, c.order_m, parse_real(spec.substr(8), "tapered eps"));
  }
  if (spec == "tapered") return WeightArray::tapered(c.variant, c.order_m, c.eps);
  if (spec == "fejer") return fejer_table(c.variant, c.order_m, n_max, L);
  if (spec.rfind("table:", 0) == 0) {
    std::ifstream in(spec.substr(6));
    if (!in) throw ParseError("cannot open weight table '" + spec.substr(6) + "'");
    if (std::isnan(c.claimed_M) || std::isnan(c.claimed_L)) {
      throw InvalidArgument("table weights need --claimed-M and --claimed-L");
    }
    return WeightArray::table(c.variant, c.order_m, read_weight_table(in), c.claimed_M, c.claimed_L);
  }
  throw ParseError("unknown weight spec '" + spec + "' (boxcar | tapered:EPS | fejer | table:PATH)");
}

std::vector<UnitPoint> target_points(const RunConfig& c, const Measure& mu) {
  if (!c.points_spec.empty()) return parse_points(c.points_spec);
  if (mu.is_uniform()) throw InvalidArgument("no points: pass --points or a point-mass --measure");
  return mu.points();
}

void csv_complex(std::ostream& out, const std::string& tag, int k, Complex v) {
  out << tag << ',' << k << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << '\n';
}

json complex_json(Complex v) { return {{"re", v.real()}, {"im", v.imag()}}; }

json metadata(const RunConfig& c) {
  json meta = {{"subcommand", subcommand_name(c.subcommand)},
               {"order", c.order_m},
               {"measure", c.measure_spec},
               {"seed", c.seed}};
  if (!c.input_path.empty()) meta["input"] = c.input_path;
  if (c.random_degree >= 0 && c.input_path.empty()) meta["random_degree"] = c.random_degree;
  return meta;
}

// Each subcommand writes its data to `data` and returns (exit code, summary).
using Outcome = std::pair<int, std::string>;

Outcome run_norm(const RunConfig& c, bool as_json, std::ostream& data) {
  const TaylorPoly f = load_function(c);
  const Measure mu = parse_measure(c.measure_spec);
  const double value = mu_norm_sq(f, mu, c.order_m);
  std::string summary = "norm_sq = " + format_number(value);
  json doc = metadata(c);
  doc["norm_sq"] = value;
  int code = kExitOk;
  if (c.oracle) {
    const QuadratureGrid grid = mu.is_uniform() ? QuadratureGrid{} : QuadratureGrid{256, 2048, true};
    const QuadratureResult q = quadrature_norm_estimate(f, mu, c.order_m, grid);
    const double scale = std::max(std::abs(value), std::abs(q.value));
    const double discrepancy = scale == 0.0 ? 0.0 : std::abs(value - q.value) / scale;
    if (discrepancy > kOracleTolerance) code = kExitFailed;
    doc["oracle"] = {{"value", q.value}, {"error_estimate", q.error_estimate}, {"discrepancy", discrepancy}};
    summary += ", oracle = " + format_number(q.value) + ", discrepancy = " + format_number(discrepancy);
    if (code != kExitOk) summary += " exceeds 1e-3";
    if (!as_json) {
      data << "norm_sq,oracle,discrepancy\n"
           << format_number(value) << ',' << format_number(q.value) << ',' << format_number(discrepancy) << '\n';
    }
  } else if (!as_json) {
    data << "norm_sq\n" << format_number(value) << '\n';
  }
  if (as_json) data << doc.dump(2) << '\n';
  return {code, summary};
}

Outcome run_decompose(const RunConfig& c, bool as_json, std::ostream& data) {
  const TaylorPoly f = load_function(c);
  const std::vector<UnitPoint> points = target_points(c, parse_measure(c.measure_spec));
  json doc = metadata(c);
  std::string summary;
  if (points.size() == 1) {
    const LocalDecomposition d = difference_quotient(f, points[0]);
    const double local = local_norm(f, points[0], c.order_m);
    summary = "alpha = " + format_number(d.alpha.real()) + (d.alpha.imag() < 0 ? "" : "+") +
              format_number(d.alpha.imag()) + "i, local_norm = " + format_number(local);
    if (as_json) {
      doc["alpha"] = complex_json(d.alpha);
      doc["quotient"] = coefficients_json(d.quotient);
      doc["local_norm"] = local;
    } else {
      data << "part,k,re,im\n";
      csv_complex(data, "alpha", 0, d.alpha);
      for (int k = d.quotient.start(); k <= d.quotient.degree(); ++k) csv_complex(data, "quotient", k, d.quotient.coeff(k));
    }
  } else {
    const MultiPointDecomposition d = multi_decompose(f, points);
    summary = "residual degree " + std::to_string(d.residual.degree()) + ", core degree " +
              std::to_string(d.core.degree());
    if (as_json) {
      doc["residual"] = coefficients_json(d.residual);
      doc["core"] = coefficients_json(d.core);
    } else {
      data << "part,k,re,im\n";
      for (int k = d.residual.start(); k <= d.residual.degree(); ++k) csv_complex(data, "residual", k, d.residual.coeff(k));
      for (int k = d.core.start(); k <= d.core.degree(); ++k) csv_complex(data, "core", k, d.core.coeff(k));
    }
  }
  if (as_json) data << doc.dump(2) << '\n';
  return {kExitOk, summary};
}

Outcome run_counterexample(const RunConfig& c, bool as_json, std::ostream& data) {
  std::vector<CounterexampleReport> rows;
  for (int n = c.n_range.first; n <= c.n_range.second; ++n) rows.push_back(counterexample_report(c.order_m, n));
  if (as_json) {
    json doc = metadata(c);
    doc.erase("measure");
    doc["records"] = json::array();
    for (const auto& r : rows) doc["records"].push_back(to_json(r));
    data << doc.dump(2) << '\n';
  } else {
    data << "n,closed_S,closed_f,direct_S,direct_f,ratio\n";
    for (const auto& r : rows) {
      data << r.n << ',' << format_number(r.closed_S) << ',' << format_number(r.closed_f) << ','
           << format_number(r.direct_S) << ',' << format_number(r.direct_f) << ',' << format_number(r.ratio) << '\n';
    }
  }
  return {kExitOk, "counterexample m=" + std::to_string(c.order_m) + ": " + std::to_string(rows.size()) +
                       " rows, last ratio " + format_number(rows.back().ratio)};
}

Outcome run_converge(const RunConfig& c, bool as_json, std::ostream& data, std::ostream& warn) {
  const TaylorPoly f = load_function(c);
  const Measure mu = parse_measure(c.measure_spec);
  const auto [n_lo, n_hi] = c.n_range;
  std::vector<ConvergenceRecord> records;
  json doc = metadata(c);
  doc["method"] = c.method;
  if (c.method == "weighted") {
    const WeightArray array = make_weights(c, c.weight_spec, n_hi);
    if (!truncation_headroom_ok(f, c.order_m, n_hi)) {
      warn << "warning: n_hi + m + 1 = " << n_hi + c.order_m + 1 << " exceeds deg f = " << f.degree()
           << "; late records measure truncation only\n";
    }
    records = converge_weighted(f, mu, c.order_m, array, n_lo, n_hi);
    doc["weights"] = array.describe();
  } else {
    records = converge_dirac(f, mu, c.order_m, n_lo, n_hi);
  }
  double worst = 0.0;
  for (const auto& r : records) worst = std::max(worst, r.bound_ratio);
  if (as_json) {
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(to_json(r));
    data << doc.dump(2) << '\n';
  } else {
    data << "n,norm_sq,bound_ratio\n";
    for (const auto& r : records) {
      data << r.n << ',' << format_number(r.norm_sq) << ',' << format_number(r.bound_ratio) << '\n';
    }
  }
  return {kExitOk, "converge " + c.method + ": final norm_sq " + format_number(records.back().norm_sq) +
                       ", max bound_ratio " + format_number(worst)};
}

Outcome run_interpolate(const RunConfig& c, bool as_json, std::ostream& data) {
  const TaylorPoly f = load_function(c);
  const std::vector<UnitPoint> points = target_points(c, parse_measure(c.measure_spec));
  const auto [corrected, system] = vandermonde_correct(f, points, c.order_m, c.n);
  const int first = corrected.base_degree + 1;
  std::vector<Complex> residuals;
  double worst = 0.0;
  for (const auto& p : points) {
    residuals.push_back(boundary_value(corrected.poly, p) - boundary_value(f, p));
    worst = std::max(worst, std::abs(residuals.back()));
  }
  if (as_json) {
    json doc = metadata(c);
    doc["n"] = c.n;
    doc["first_corrected"] = first;
    doc["coefficients"] = json::array();
    for (std::size_t i = 0; i < system.solution.size(); ++i) {
      json e = complex_json(system.solution[i]);
      e["k"] = first + static_cast<int>(i);
      doc["coefficients"].push_back(e);
    }
    doc["residuals"] = json::array();
    for (std::size_t j = 0; j < points.size(); ++j) {
      json e = complex_json(residuals[j]);
      e["index"] = j;
      e["theta"] = points[j].theta();
      doc["residuals"].push_back(e);
    }
    doc["determinant_modulus"] = system.determinant_modulus;
    doc["system_residual"] = system.residual;
    data << doc.dump(2) << '\n';
  } else {
    data << "kind,index,re,im\n";
    for (std::size_t i = 0; i < system.solution.size(); ++i) {
      csv_complex(data, "coefficient", first + static_cast<int>(i), system.solution[i]);
    }
    for (std::size_t j = 0; j < residuals.size(); ++j) csv_complex(data, "residual", static_cast<int>(j), residuals[j]);
  }
  return {kExitOk, "interpolate s=" + std::to_string(points.size()) + ", max |P(l_j) - f(l_j)| = " +
                       format_number(worst)};
}

Outcome run_validate(const RunConfig& c, bool as_json, std::ostream& data) {
  std::string spec = c.kind;
  if (c.kind == "table") {
    if (c.table_path.empty()) throw InvalidArgument("--kind table needs --table PATH");
    spec = "table:" + c.table_path;
  }
  const WeightArray array = make_weights(c, spec, c.n_max);
  const ValidationReport report = validate(array, c.n_max, c.tol_col);
  if (as_json) {
    data << to_json(report).dump(2) << '\n';
  } else {
    data << "condition,ok,value\n";
    data << "support," << report.cond_support_ok << ",\n";
    data << "bounded," << report.cond_bounded_ok << ',' << format_number(report.empirical_M) << '\n';
    double gap = 0.0;
    for (const auto& [k, g] : report.column_gap) gap = std::max(gap, g);
    data << "column_limit," << report.cond_column_ok << ',' << format_number(gap) << '\n';
    data << "difference," << report.cond_difference_ok << ',' << format_number(report.empirical_L) << '\n';
  }
  std::string summary = array.describe() + (report.pass ? ": pass" : ": FAIL");
  for (const auto& w : report.witnesses) {
    summary += " [" + w.condition + " n=" + std::to_string(w.n) + " k=" + std::to_string(w.k) +
               " value=" + format_number(w.value) + "]";
    break;
  }
  return {report.pass ? kExitOk : kExitFailed, summary};
}

Outcome dispatch(const RunConfig& c, bool as_json, std::ostream& data, std::ostream& warn) {
  switch (c.subcommand) {
    case Subcommand::Norm: return run_norm(c, as_json, data);
    case Subcommand::Decompose: return run_decompose(c, as_json, data);
    case Subcommand::Counterexample: return run_counterexample(c, as_json, data);
    case Subcommand::Converge: return run_converge(c, as_json, data, warn);
    case Subcommand::Interpolate: return run_interpolate(c, as_json, data);
    case Subcommand::ValidateWeights: return run_validate(c, as_json, data);
  }
  throw InvalidArgument("unknown subcommand");
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const InvariantViolation*>(&e) || dynamic_cast<const NonConvergent*>(&e) ||
      dynamic_cast<const SingularSystem*>(&e)) {
    return kExitFailed;
  }
  return kExitInput;
}

}  // namespace

Measure parse_measure(const std::string& spec) {
  if (spec == "sigma") return Measure::uniform();
  if (spec.rfind("points:", 0) != 0) throw ParseError("measure must be 'sigma' or 'points:theta:mass,...'");
  std::vector<Atom> atoms;
  for (const auto& item : split(spec.substr(7), ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw ParseError("measure atom '" + item + "' is not theta:mass");
    atoms.push_back({UnitPoint(parse_real(parts[0], "atom angle")), parse_real(parts[1], "atom mass")});
  }
  if (atoms.empty()) throw ParseError("measure has no atoms");
  return Measure::point_masses(std::move(atoms));
}

std::vector<UnitPoint> parse_points(const std::string& spec) {
  std::vector<UnitPoint> out;
  for (const auto& item : split(spec, ',')) out.emplace_back(parse_real(item, "point angle"));
  if (out.empty()) throw ParseError("empty point list");
  require_distinct(out);
  return out;
}

void validate_config(const RunConfig& c) {
  if (c.order_m < 1) throw InvalidArgument("--order must be >= 1");
  if (needs_function(c.subcommand) && c.input_path.empty() && c.random_degree < 0) {
    throw InvalidArgument("need --input FILE or --random-degree D");
  }
  if (c.random_degree >= 0 && c.random_start > c.random_degree) {
    throw InvalidArgument("--random-start exceeds --random-degree");
  }
  parse_measure(c.measure_spec);
  if (!c.points_spec.empty()) parse_points(c.points_spec);
  const auto [lo, hi] = c.n_range;
  switch (c.subcommand) {
    case Subcommand::Counterexample:
    case Subcommand::Converge:
      if (lo < 0 || hi < lo) throw InvalidArgument("need 0 <= n-lo <= n-hi");
      break;
    case Subcommand::Interpolate:
      if (c.n < 1) throw InvalidArgument("--n must be >= 1");
      break;
    case Subcommand::ValidateWeights:
      if (c.kind != "boxcar" && c.kind != "tapered" && c.kind != "fejer" && c.kind != "table") {
        throw InvalidArgument("--kind must be boxcar, tapered, fejer or table");
      }
      if (c.n_max < 4) throw InvalidArgument("--n-max must be >= 4");
      if (!(c.tol_col > 0.0)) throw InvalidArgument("--tol-col must be positive");
      break;
    default:
      break;
  }
  if (c.subcommand == Subcommand::Converge) {
    if (c.method != "weighted" && c.method != "dirac") throw InvalidArgument("--method must be weighted or dirac");
    if (c.method == "weighted") make_weights(c, c.weight_spec.rfind("table:", 0) == 0 ? "boxcar" : c.weight_spec, 4);
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = config.output_format.value_or(
      config.subcommand == Subcommand::ValidateWeights ? OutputFormat::Json : OutputFormat::Csv);
  const bool as_json = fmt == OutputFormat::Json;
  std::ostringstream data;
  Outcome outcome;
  try {
    outcome = dispatch(config, as_json, data, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  if (config.output_path.empty()) {
    out << data.str();
    err << outcome.second << '\n';
  } else {
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write '" << config.output_path << "'\n";
      return kExitInput;
    }
    file << data.str();
    out << outcome.second << '\n';
  }
  return outcome.first;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Higher-order weighted Dirichlet space toolkit", "dirsum"};
  app.require_subcommand(1);
  std::string format;
  int n_lo = 0;
  int n_hi = -1;
  int n_max_flag = -1;

  auto add_common = [&](CLI::App* sub, bool with_function) {
    sub->add_option("--order,-m", config.order_m, "Order m >= 1");
    sub->add_option("--output,-o", config.output_path, "Write data here; summary goes to stdout");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", config.seed, "Seed for --random-degree");
    if (with_function) {
      sub->add_option("--input,-i", config.input_path, "Coefficient CSV (k,re,im)");
      sub->add_option("--random-degree", config.random_degree, "Draw f from the seed up to this degree");
      sub->add_option("--random-start", config.random_start, "Lowest random coefficient (default m+1)");
      sub->add_option("--measure", config.measure_spec, "sigma | points:theta:mass[,...]");
    }
  };

  auto* norm = app.add_subcommand("norm", "D_{mu,m}(f)");
  add_common(norm, true);
  norm->add_flag("--oracle", config.oracle, "Cross-check against area quadrature");

  auto* decompose = app.add_subcommand("decompose", "Difference-quotient decomposition at one or more points");
  add_common(decompose, true);
  decompose->add_option("--points", config.points_spec, "Comma-separated angles (default: atoms of --measure)");

  auto* counter = app.add_subcommand("counterexample", "Divergence example table over n");
  add_common(counter, false);
  counter->add_option("--n-lo", n_lo, "First n");
  counter->add_option("--n-max,--n-hi", n_hi, "Last n")->required();

  auto* converge = app.add_subcommand("converge", "Residual norms D_{mu,m}(f - p_n) over a range of n");
  add_common(converge, true);
  converge->add_option("--method", config.method, "weighted | dirac");
  converge->add_option("--weights", config.weight_spec, "boxcar | tapered:EPS | fejer | table:PATH");
  converge->add_option("--variant", config.variant, "Weight variant")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, WeightVariant>{{"shifted", WeightVariant::Shifted}, {"base", WeightVariant::Base}}));
  converge->add_option("--claimed-M", config.claimed_M, "Claimed bound M for table weights");
  converge->add_option("--claimed-L", config.claimed_L, "Claimed difference constant L");
  converge->add_option("--n-lo", n_lo, "First n")->required();
  converge->add_option("--n-hi", n_hi, "Last n")->required();

  auto* interp = app.add_subcommand("interpolate", "Vandermonde-corrected partial sum");
  add_common(interp, true);
  interp->add_option("--points", config.points_spec, "Comma-separated angles (default: atoms of --measure)");
  interp->add_option("--n", config.n, "Index n >= s")->required();

  auto* validate_cmd = app.add_subcommand("validate-weights", "Audit a weight array");
  add_common(validate_cmd, false);
  validate_cmd->add_option("--kind", config.kind, "boxcar | tapered | fejer | table");
  validate_cmd->add_option("--eps", config.eps, "Tapered epsilon");
  validate_cmd->add_option("--variant", config.variant, "Weight variant")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, WeightVariant>{{"shifted", WeightVariant::Shifted}, {"base", WeightVariant::Base}}));
  validate_cmd->add_option("--n-max", n_max_flag, "Rows to scan (>= 4)");
  validate_cmd->add_option("--claimed-M", config.claimed_M, "Claimed bound M (table)");
  validate_cmd->add_option("--claimed-L", config.claimed_L, "Claimed difference constant L");
  validate_cmd->add_option("--tol-col", config.tol_col, "Column-limit tolerance");
  validate_cmd->add_option("--table", config.table_path, "CSV n,k,re,im");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (norm->parsed()) config.subcommand = Subcommand::Norm;
  if (decompose->parsed()) config.subcommand = Subcommand::Decompose;
  if (counter->parsed()) config.subcommand = Subcommand::Counterexample;
  if (converge->parsed()) config.subcommand = Subcommand::Converge;
  if (interp->parsed()) config.subcommand = Subcommand::Interpolate;
  if (validate_cmd->parsed()) config.subcommand = Subcommand::ValidateWeights;
  config.n_range = {n_lo, n_hi};
  if (n_max_flag >= 0) config.n_max = n_max_flag;
  if (!format.empty()) config.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  try {
    validate_config(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  try {
    return run(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace dirsum::cli
