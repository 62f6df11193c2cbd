#include "dirsum/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "dirsum/errors.hpp"

namespace dirsum {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_double(const std::string& field, int lineno) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(field, &pos);
    if (pos != field.size() || !std::isfinite(v)) throw std::invalid_argument(field);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("coefficients line " + std::to_string(lineno) + ": bad number '" + field + "'");
  }
}

}  // namespace

TaylorPoly read_coefficients(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("coefficients: empty input");
  if (strip_cr(line) != "k,re,im") {
    throw ParseError("coefficients: expected header 'k,re,im', got '" + strip_cr(line) + "'");
  }
  std::vector<std::pair<int, Complex>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
    if (fields.size() != 3) {
      throw ParseError("coefficients line " + std::to_string(lineno) + ": expected 3 fields");
    }
    int k = 0;
    try {
      std::size_t pos = 0;
      k = std::stoi(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument(fields[0]);
    } catch (const std::logic_error&) {
      throw ParseError("coefficients line " + std::to_string(lineno) + ": bad index '" + fields[0] + "'");
    }
    if (k < 0) throw ParseError("coefficients line " + std::to_string(lineno) + ": negative index");
    if (!rows.empty() && k <= rows.back().first) {
      throw ParseError("coefficients line " + std::to_string(lineno) + ": k must be strictly increasing");
    }
    rows.emplace_back(k, Complex{parse_double(fields[1], lineno), parse_double(fields[2], lineno)});
  }
  if (rows.empty()) return {};
  const int lo = rows.front().first;
  std::vector<Complex> dense(static_cast<std::size_t>(rows.back().first - lo + 1));
  for (const auto& [k, c] : rows) dense[static_cast<std::size_t>(k - lo)] = c;
  return TaylorPoly(lo, std::move(dense));
}

TaylorPoly read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open coefficient file '" + path + "'");
  return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const TaylorPoly& f) {
  out << "k,re,im\n";
  for (int k = f.start(); k <= f.degree(); ++k) {
    const Complex c = f.coeff(k);
    if (c == Complex{}) continue;
    out << k << ',' << format_number(c.real()) << ',' << format_number(c.imag()) << '\n';
  }
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json gaps = nlohmann::json::object();
  for (const auto& [k, gap] : report.column_gap) gaps[std::to_string(k)] = gap;
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"condition", w.condition}, {"n", w.n}, {"k", w.k}, {"value", w.value}});
  }
  return {
      {"scanned_n_max", report.scanned_n_max},
      {"cond_support_ok", report.cond_support_ok},
      {"empirical_M", report.empirical_M},
      {"cond_bounded_ok", report.cond_bounded_ok},
      {"column_gap", gaps},
      {"cond_column_ok", report.cond_column_ok},
      {"empirical_L", report.empirical_L},
      {"cond_difference_ok", report.cond_difference_ok},
      {"pass", report.pass},
      {"witnesses", witnesses},
  };
}

nlohmann::json to_json(const CounterexampleReport& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"closed_S", r.closed_S},
          {"closed_f", r.closed_f},
          {"direct_S", r.direct_S},
          {"direct_f", r.direct_f},
          {"ratio", r.ratio}};
}

nlohmann::json to_json(const ConvergenceRecord& r) {
  nlohmann::json ratio = std::isfinite(r.bound_ratio) ? nlohmann::json(r.bound_ratio) : nlohmann::json(nullptr);
  return {{"n", r.n}, {"norm_sq", r.norm_sq}, {"bound_ratio", ratio}};
}

nlohmann::json coefficients_json(const TaylorPoly& f) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = f.start(); k <= f.degree(); ++k) {
    const Complex c = f.coeff(k);
    if (c == Complex{}) continue;
    out.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

}  // namespace dirsum
