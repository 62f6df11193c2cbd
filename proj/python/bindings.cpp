#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "dirsum/coefficients.hpp"
#include "dirsum/dirac.hpp"
#include "dirsum/douglas.hpp"
#include "dirsum/errors.hpp"
#include "dirsum/io.hpp"
#include "dirsum/oracle.hpp"
#include "dirsum/summation.hpp"
#include "dirsum/weights.hpp"

namespace py = pybind11;
using namespace dirsum;

namespace {

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

std::vector<UnitPoint> points_from(const std::vector<double>& angles) {
  return {angles.begin(), angles.end()};
}

py::list records_to_python(const std::vector<ConvergenceRecord>& records) {
  py::list out;
  for (const auto& r : records) out.append(to_python(to_json(r)));
  return out;
}

WeightVariant variant_from(const std::string& name) {
  if (name == "shifted") return WeightVariant::Shifted;
  if (name == "base") return WeightVariant::Base;
  throw InvalidArgument("variant must be 'shifted' or 'base'");
}

}  // namespace

PYBIND11_MODULE(_dirsum, m) {
  m.doc() = "Norms, decompositions and summation methods in higher-order weighted Dirichlet spaces";

  // Registered base first: later translators take precedence, so the
  // specific subclasses win.
  auto& base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base_error.ptr());
  py::register_exception<RangeError>(m, "RangeError", base_error.ptr());
  py::register_exception<DuplicatePoints>(m, "DuplicatePoints", base_error.ptr());
  py::register_exception<SingularSystem>(m, "SingularSystem", base_error.ptr());
  py::register_exception<VariantMismatch>(m, "VariantMismatch", base_error.ptr());
  py::register_exception<ScanTooSmall>(m, "ScanTooSmall", base_error.ptr());
  py::register_exception<InvalidSupport>(m, "InvalidSupport", base_error.ptr());
  py::register_exception<OutsideDisk>(m, "OutsideDisk", base_error.ptr());
  py::register_exception<NonConvergent>(m, "NonConvergent", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base_error.ptr());

  py::class_<TaylorPoly>(m, "TaylorPoly")
      .def(py::init<>())
      .def(py::init<int, std::vector<Complex>>(), py::arg("start"), py::arg("coeffs"))
      .def_static("from_dense", &TaylorPoly::from_dense, py::arg("coeffs"))
      .def_static("monomial", &TaylorPoly::monomial, py::arg("k"), py::arg("c") = Complex{1.0, 0.0})
      .def_property_readonly("start", &TaylorPoly::start)
      .def_property_readonly("degree", &TaylorPoly::degree)
      .def_property_readonly("coeffs",
                             [](const TaylorPoly& f) { return std::vector<Complex>(f.coeffs().begin(), f.coeffs().end()); })
      .def("coeff", &TaylorPoly::coeff)
      .def("dense", &TaylorPoly::dense)
      .def("is_zero", &TaylorPoly::is_zero)
      .def("__call__", [](const TaylorPoly& f, Complex z) { return evaluate(f, z); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const TaylorPoly& f) {
        return "TaylorPoly(start=" + std::to_string(f.start()) + ", degree=" + std::to_string(f.degree()) + ")";
      });

  py::class_<Measure>(m, "Measure")
      .def_static("uniform", &Measure::uniform)
      .def_static(
          "point_masses",
          [](const std::vector<std::pair<double, double>>& atoms) {
            std::vector<Atom> out;
            for (const auto& [theta, mass] : atoms) out.push_back({UnitPoint(theta), mass});
            return Measure::point_masses(std::move(out));
          },
          py::arg("atoms"), "List of (angle, mass) pairs")
      .def_static(
          "dirac", [](double theta, double mass) { return Measure::dirac(UnitPoint(theta), mass); },
          py::arg("theta"), py::arg("mass") = 1.0)
      .def("is_uniform", &Measure::is_uniform)
      .def_property_readonly("atoms", [](const Measure& mu) {
        std::vector<std::pair<double, double>> out;
        for (const auto& a : mu.atoms()) out.emplace_back(a.point.theta(), a.mass);
        return out;
      });

  py::class_<WeightArray>(m, "WeightArray")
      .def_static(
          "boxcar", [](int order, const std::string& variant) { return WeightArray::boxcar(variant_from(variant), order); },
          py::arg("m"), py::arg("variant") = "shifted")
      .def_static(
          "tapered",
          [](int order, double eps, const std::string& variant) {
            return WeightArray::tapered(variant_from(variant), order, eps);
          },
          py::arg("m"), py::arg("eps"), py::arg("variant") = "shifted")
      .def_static(
          "fejer",
          [](int order, int n_max, double claimed_L, const std::string& variant) {
            return fejer_table(variant_from(variant), order, n_max, claimed_L);
          },
          py::arg("m"), py::arg("n_max"), py::arg("claimed_L") = 1.0, py::arg("variant") = "shifted")
      .def("weight", &WeightArray::weight, py::arg("n"), py::arg("k"))
      .def_property_readonly("claimed_M", &WeightArray::claimed_M)
      .def_property_readonly("claimed_L", &WeightArray::claimed_L)
      .def("__repr__", &WeightArray::describe);

  m.def("binom", &binom, py::arg("k"), py::arg("m"));
  m.def("sigma_norm", &sigma_norm, py::arg("f"), py::arg("m"));
  m.def("partial_sum", &partial_sum, py::arg("f"), py::arg("m"), py::arg("n"));
  m.def("evaluate", &evaluate, py::arg("f"), py::arg("z"));

  m.def(
      "difference_quotient",
      [](const TaylorPoly& f, double theta) {
        auto d = difference_quotient(f, UnitPoint(theta));
        return py::make_tuple(d.alpha, d.quotient);
      },
      py::arg("f"), py::arg("theta"), "(alpha, quotient) with f = alpha + (z - e^{i theta}) quotient");
  m.def(
      "local_norm", [](const TaylorPoly& f, double theta, int order) { return local_norm(f, UnitPoint(theta), order); },
      py::arg("f"), py::arg("theta"), py::arg("m"));
  m.def("mu_norm_sq", &mu_norm_sq, py::arg("f"), py::arg("mu"), py::arg("m"));
  m.def(
      "multi_decompose",
      [](const TaylorPoly& f, const std::vector<double>& thetas) {
        auto d = multi_decompose(f, points_from(thetas));
        return py::make_tuple(d.residual, d.core);
      },
      py::arg("f"), py::arg("thetas"));

  m.def(
      "validate",
      [](const WeightArray& array, int n_max, double tol_col) { return to_python(to_json(validate(array, n_max, tol_col))); },
      py::arg("array"), py::arg("n_max"), py::arg("tol_col") = kDefaultColumnTolerance);
  m.def("modified_taylor", &modified_taylor, py::arg("array"), py::arg("f"), py::arg("m"), py::arg("n"));

  m.def("counterexample_fn", &counterexample_fn, py::arg("m"), py::arg("n"));
  m.def(
      "counterexample_report", [](int order, int n) { return to_python(to_json(counterexample_report(order, n))); },
      py::arg("m"), py::arg("n"));
  m.def(
      "comparison_check",
      [](const TaylorPoly& q, double theta, int order, int n) {
        const auto r = comparison_check(q, UnitPoint(theta), order, n);
        return py::make_tuple(r.lhs, r.rhs, r.ok);
      },
      py::arg("q"), py::arg("theta"), py::arg("m"), py::arg("n"));
  m.def(
      "converge_weighted",
      [](const TaylorPoly& f, const Measure& mu, int order, const WeightArray& array, int n_lo, int n_hi) {
        std::vector<ConvergenceRecord> records;
        {
          py::gil_scoped_release release;
          records = converge_weighted(f, mu, order, array, n_lo, n_hi);
        }
        return records_to_python(records);
      },
      py::arg("f"), py::arg("mu"), py::arg("m"), py::arg("array"), py::arg("n_lo"), py::arg("n_hi"));

  m.def(
      "tail_sum", [](const TaylorPoly& f, double theta, int j0) { return tail_sum(f, UnitPoint(theta), j0); },
      py::arg("f"), py::arg("theta"), py::arg("j0"));
  m.def(
      "single_point_correction",
      [](const TaylorPoly& f, double theta, int order, int n) {
        return single_point_correction(f, UnitPoint(theta), order, n).poly;
      },
      py::arg("f"), py::arg("theta"), py::arg("m"), py::arg("n"));
  m.def(
      "vandermonde_correct",
      [](const TaylorPoly& f, const std::vector<double>& thetas, int order, int n) {
        return vandermonde_correct(f, points_from(thetas), order, n).first.poly;
      },
      py::arg("f"), py::arg("thetas"), py::arg("m"), py::arg("n"));
  m.def(
      "recursion_build",
      [](const TaylorPoly& f, const std::vector<double>& thetas, int order, int n) {
        return recursion_build(f, points_from(thetas), order, n);
      },
      py::arg("f"), py::arg("thetas"), py::arg("m"), py::arg("n"));
  m.def(
      "converge_dirac",
      [](const TaylorPoly& f, const Measure& mu, int order, int n_lo, int n_hi) {
        std::vector<ConvergenceRecord> records;
        {
          py::gil_scoped_release release;
          records = converge_dirac(f, mu, order, n_lo, n_hi);
        }
        return records_to_python(records);
      },
      py::arg("f"), py::arg("mu"), py::arg("m"), py::arg("n_lo"), py::arg("n_hi"));

  m.def(
      "quadrature_norm",
      [](const TaylorPoly& f, const Measure& mu, int order, int radial, int angular) {
        py::gil_scoped_release release;
        return quadrature_norm(f, mu, order, QuadratureGrid{radial, angular, true});
      },
      py::arg("f"), py::arg("mu"), py::arg("m"), py::arg("radial_nodes") = 128, py::arg("angular_nodes") = 512);
}
