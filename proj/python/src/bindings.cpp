#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fraclap/closed_form.hpp"
#include "fraclap/eigenbounds.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/oracle.hpp"
#include "fraclap/specfun.hpp"

namespace py = pybind11;
using namespace fraclap;

namespace {

PowerProfile profile(int d, double alpha, double p, bool antisymmetric) {
  return {d, alpha, p, antisymmetric ? Parity::Antisymmetric : Parity::Symmetric};
}

py::tuple poly_tuple(const PolyInS& q) { return py::make_tuple(q.scale.value(), q.coeffs); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional Laplacians of power functions on the unit ball and eigenvalue bounds";

  py::register_exception<SolverError>(m, "SolverError");
  py::register_exception<ConvergenceError>(m, "ConvergenceError");
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);

  m.def("hyp2f1", py::overload_cast<double, double, double, double>(&specfun::hyp2f1), py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("a_const", [](int d, double alpha) { return a_const(d, alpha).value(); }, py::arg("d"), py::arg("alpha"));

  m.def(
      "frac_lap",
      [](int d, double alpha, double p, std::vector<double> x, bool antisymmetric) {
        return frac_lap(profile(d, alpha, p, antisymmetric), x);
      },
      py::arg("d"), py::arg("alpha"), py::arg("p"), py::arg("x"), py::arg("antisymmetric") = false);
  m.def(
      "frac_lap_oracle",
      [](int d, double alpha, double p, std::vector<double> x, bool antisymmetric) {
        return oracle::frac_lap_oracle(profile(d, alpha, p, antisymmetric), x).value;
      },
      py::arg("d"), py::arg("alpha"), py::arg("p"), py::arg("x"), py::arg("antisymmetric") = false);
  m.def("poly_u", [](int d, double alpha, unsigned n) { return poly_tuple(poly_u(d, alpha, n)); }, py::arg("d"),
        py::arg("alpha"), py::arg("n"), "Returns (scale, coeffs) with coeffs[0] == 1.");
  m.def("poly_v", [](int d, double alpha, unsigned n) { return poly_tuple(poly_v(d, alpha, n)); }, py::arg("d"),
        py::arg("alpha"), py::arg("n"), "Returns (scale, coeffs) with coeffs[0] == 1.");

  m.def("moment_integral", &bounds::moment_integral, py::arg("d"), py::arg("s"), py::arg("t"));
  m.def("mu_lower", &bounds::mu_lower, py::arg("d"), py::arg("alpha"));
  m.def("eta_lemma", &bounds::eta_lemma, py::arg("d"), py::arg("alpha"));
  m.def("two_term_eta_min", &bounds::two_term_eta_min, py::arg("d"), py::arg("alpha"));
  m.def("two_term_upper", &bounds::two_term_upper, py::arg("d"), py::arg("alpha"));
  m.def("ritz_upper", &bounds::ritz_upper, py::arg("d"), py::arg("alpha"), py::arg("n") = 13);
  m.def(
      "compute_bounds",
      [](int d, double alpha, int n) {
        const bounds::BoundsReport r = bounds::compute_bounds(d, alpha, n);
        py::dict out;
        out["d"] = r.d;
        out["alpha"] = r.alpha;
        out["lower"] = r.lower;
        out["upper_two_term"] = r.upper_two_term;
        out["upper_ritz"] = r.upper_ritz;
        out["ritz_n"] = r.ritz_n;
        out["lower_star"] = r.lower_star;
        out["upper_star_two_term"] = r.upper_star_two_term;
        out["upper_star_ritz"] = r.upper_star_ritz;
        out["eta_min"] = r.eta_min;
        out["pivot_ratio"] = r.pivot_ratio;
        return out;
      },
      py::arg("d"), py::arg("alpha"), py::arg("n") = 13);
}
