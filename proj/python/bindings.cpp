#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dloci/cli.hpp"
#include "dloci/error.hpp"

namespace py = pybind11;
using namespace dloci;

namespace {

// Fractions travel as (numerator, denominator) decimal strings; the Python
// side turns them into fractions.Fraction.
py::tuple fraction(const Rational& q) { return py::make_tuple(q.numerator().get_str(), q.denominator().get_str()); }

// Constant -> (num, den); symbolic -> list of (na_exp, ka_exp, num, den).
py::object scalar(const ParamScalar& c) {
  if (c.is_constant()) return fraction(c.constant_term());
  py::list terms;
  for (const auto& t : c.terms())
    terms.append(py::make_tuple(t.na, t.ka, t.coeff.numerator().get_str(), t.coeff.denominator().get_str()));
  return terms;
}

py::list table(const ChernExpansion& f) {
  py::list rows;
  for (const auto& [t, c] : f.terms()) rows.append(py::make_tuple(t.i, 2 * t.j, 2 * t.k, scalar(c)));
  return rows;
}

ParamScalar param(const py::object& v, ParamScalar symbol) {
  if (v.is_none()) return symbol;
  return ParamScalar(static_cast<long>(v.cast<std::int64_t>()));
}

CoefficientMethod method_of(const std::string& name) {
  if (name == "recursion") return CoefficientMethod::Recursion;
  if (name == "genfun") return CoefficientMethod::GeneratingFunction;
  if (name == "newton") return CoefficientMethod::Newton;
  throw py::value_error("method must be recursion, genfun or newton");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Chern-class computations for Dirac degeneracy loci";

  py::register_exception<Error>(m, "DlociError", PyExc_ValueError);

  m.def(
      "coefficients",
      [](py::object n_a, py::object kappa, unsigned order, const std::string& method) {
        return table(chern_coefficients(method_of(method), param(n_a, ParamScalar::na()),
                                        param(kappa, ParamScalar::ka()), order));
      },
      py::arg("n_a") = py::none(), py::arg("kappa") = py::none(), py::arg("order") = 12,
      py::arg("method") = "recursion", "Rows (i, 2j, 2k, coefficient); None keeps a parameter symbolic.");

  m.def(
      "series",
      [](int which, unsigned order) {
        if (which < 1 || which > 3) throw py::value_error("series index must be 1, 2 or 3");
        const GradedSeries s = j_series(static_cast<JSeries>(which), order);
        py::list out;
        for (std::uint16_t p = 0; p <= order; p += 2) out.append(scalar(s.coefficient({p})));
        return out;
      },
      py::arg("which"), py::arg("order"), "Even-power coefficients of J1, J2 or J3.");

  m.def(
      "dual_class",
      [](std::int64_t n_a, py::object kappa) {
        const DualClassExpansion d = poincare_dual_class(n_a, param(kappa, ParamScalar::ka()));
        py::list rows;
        for (const auto& [t, c] : d.terms) rows.append(py::make_tuple(t.i, 2 * t.j, 2 * t.k, scalar(c)));
        return rows;
      },
      py::arg("n_a"), py::arg("kappa") = py::none(), "Signed degree-(1 - n_a) rows of the dual class.");

  m.def(
      "dirac_index",
      [](std::int64_t chi, std::int64_t sigma, const IntMatrix& q, const IntVector& lambda, std::int64_t kappa) {
        const ManifoldPtr mf = manifold_new(chi, sigma, q);
        return SpinUStructure(mf, lambda, kappa, IntVector(mf->b2(), 0)).n_a();
      },
      py::arg("chi"), py::arg("sigma"), py::arg("q"), py::arg("lambda_"), py::arg("kappa"));

  m.def(
      "verify",
      [](unsigned order, py::object na_range, py::object kappa_range) {
        VerifyOptions o;
        o.max_r = order;
        if (!na_range.is_none() || !kappa_range.is_none()) {
          o.symbolic = false;
          std::tie(o.na_min, o.na_max) = na_range.cast<std::pair<std::int64_t, std::int64_t>>();
          std::tie(o.kappa_min, o.kappa_max) = kappa_range.cast<std::pair<std::int64_t, std::int64_t>>();
        }
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_threeway(o);
        }
        py::dict out;
        out["equal"] = r.equal;
        out["points"] = r.points;
        out["comparisons"] = r.comparisons;
        out["discrepancies"] = r.discrepancies;
        return out;
      },
      py::arg("order") = 12, py::arg("na_range") = py::none(), py::arg("kappa_range") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
