#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idemarith/analytic.hpp"
#include "idemarith/json_io.hpp"
#include "idemarith/ramanujan_ops.hpp"
#include "idemarith/suites.hpp"

namespace py = pybind11;
using namespace idemarith;

namespace {

py::object from_json(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ big(const BigInt& v) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10)));
}

std::vector<Complex> diagonal(const DiagonalOperator& d) {
  return {d.entries().begin(), d.entries().end()};
}

OperatorFamily family(std::size_t dim, int offset) {
  return OperatorFamily{IdempotentSystem(dim, offset)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic functions, idempotent systems and Ramanujan-sum operators";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);

  m.def("factorize", [](Integer n) {
    std::vector<std::pair<Integer, int>> out;
    for (const auto& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });
  m.def("divisors", py::overload_cast<Integer>(&divisors));
  m.def("mobius", &mobius);
  m.def("totient", &totient);
  m.def("jordan_totient", &jordan_totient, py::arg("r"), py::arg("n"));
  m.def("tau", &tau);
  m.def("omega", &omega);
  m.def("ramanujan_sum", &ramanujan_sum, py::arg("n"), py::arg("j"));
  m.def("ramanujan_sum_roots", &ramanujan_sum_roots, py::arg("n"), py::arg("j"));
  m.def("lcm_tuple_count", &lcm_tuple_count, py::arg("s"), py::arg("n"));
  m.def("crt_solve", &crt_solve, py::arg("k"), py::arg("n"), py::arg("l"), py::arg("m"));

  m.def(
      "rf_transform",
      [](Integer modulus, const std::map<Integer, Complex>& values) {
        const auto rf = rf_transform(EvenFunction(modulus, values), 1e-9);
        py::dict out;
        out["paper"] = rf.paper.coefficients;
        out["orthogonal"] = rf.orthogonal.coefficients;
        out["scale_residual"] = rf.scale_residual;
        out["reconstruction_residual"] = rf.reconstruction_residual;
        return out;
      },
      py::arg("modulus"), py::arg("values"));

  m.def(
      "projection",
      [](Integer j, Integer n, std::size_t dim, int offset) {
        return diagonal(IdempotentSystem(dim, offset).projection(j, n));
      },
      py::arg("j"), py::arg("n"), py::arg("dim"), py::arg("offset") = 0);
  m.def(
      "c_operator",
      [](Integer j, Integer n, std::size_t dim, int offset) { return diagonal(family(dim, offset).c(j, n)); },
      py::arg("j"), py::arg("n"), py::arg("dim"), py::arg("offset") = 0);
  m.def(
      "t_operator",
      [](Integer r, Integer j, Integer n, std::size_t dim, int offset) {
        return diagonal(family(dim, offset).t(r, j, n));
      },
      py::arg("r"), py::arg("j"), py::arg("n"), py::arg("dim"), py::arg("offset") = 0);

  m.def(
      "det_c0",
      [](Integer n, Integer N) {
        const DetC0 d = det_c0(n, N);
        py::dict out;
        out["direct"] = big(d.direct);
        out["closed_form"] = big(d.closed_form);
        out["sign_corrected"] = big(d.sign_corrected);
        out["squarefree"] = d.squarefree;
        out["agree"] = d.agree;
        out["corrected_agree"] = d.corrected_agree;
        return out;
      },
      py::arg("n"), py::arg("N"));
  m.def(
      "trace_identities", [](Integer n, Integer N) { return from_json(to_json(trace_identities(n, N))); },
      py::arg("n"), py::arg("N"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, Integer n_max, std::size_t dim, double tolerance) {
        const SuiteConfig config{n_max, dim, tolerance};
        std::vector<SuiteResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(name, config);
        }
        return from_json(suites_json(results, config));
      },
      py::arg("name") = "all", py::arg("n_max") = 12, py::arg("dim") = 2520, py::arg("tolerance") = 1e-9);
}
