#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dirsum/errors.hpp"
#include "dirsum/io.hpp"

using namespace dirsum;

TEST_CASE("coefficient files round trip") {
  const TaylorPoly f(1, {Complex{0.1, -2.5}, 0.0, Complex{1e-300, 3.0}, 1.0 / 3.0});
  std::ostringstream out;
  write_coefficients(out, f);
  CHECK(out.str().rfind("k,re,im\n1,0.10000000000000001,-2.5\n3,", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_coefficients(in) == f);
}

TEST_CASE("coefficient parsing") {
  std::istringstream ok("k,re,im\r\n1,1,0\r\n2,1,0\r\n\r\n");
  CHECK(read_coefficients(ok) == TaylorPoly::from_dense({0.0, 1.0, 1.0}));
  std::istringstream empty_body("k,re,im\n");
  CHECK(read_coefficients(empty_body).is_zero());

  for (const char* bad : {"", "k,re\n", "k,re,im\n1,1\n", "k,re,im\n2,1,0\n1,1,0\n", "k,re,im\n1,1,0\n1,2,0\n",
                          "k,re,im\n-1,1,0\n", "k,re,im\n1,abc,0\n", "k,re,im\n1,inf,0\n", "k,re,im\n1.5,1,0\n",
                          "k,re,im\n1,1,0,4\n"}) {
    INFO("input: " << bad);
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_coefficients(in), ParseError);
  }
  CHECK_THROWS_AS(read_coefficients_file("/nonexistent/coefficients.csv"), ParseError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(NAN) == "nan");
  CHECK(std::stod(format_number(std::sqrt(2.5))) == std::sqrt(2.5));
}

TEST_CASE("JSON serializers") {
  ValidationReport r;
  r.scanned_n_max = 10;
  r.column_gap[3] = 0.5;
  r.witnesses.push_back({"difference", 9, 3, 2.0});
  const auto j = to_json(r);
  for (const char* key : {"scanned_n_max", "cond_support_ok", "empirical_M", "cond_bounded_ok", "column_gap",
                          "cond_column_ok", "empirical_L", "cond_difference_ok", "pass", "witnesses"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.size() == 10);
  CHECK(j["column_gap"]["3"] == 0.5);
  CHECK(j["witnesses"][0]["condition"] == "difference");

  const auto rec = to_json(ConvergenceRecord{4, 1.0, INFINITY});
  CHECK(rec["bound_ratio"].is_null());
  CHECK(to_json(ConvergenceRecord{4, 1.0, 0.5})["bound_ratio"] == 0.5);

  const auto coeffs = coefficients_json(TaylorPoly(2, {Complex{1.0, 2.0}, 0.0, 3.0}));
  CHECK(coeffs.size() == 2);
  CHECK(coeffs[1]["k"] == 4);
}
