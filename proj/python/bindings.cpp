#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsplit/errors.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/parse.hpp"
#include "fsplit/rigidity.hpp"
#include "fsplit/scenario.hpp"
#include "fsplit/splitting.hpp"

namespace py = pybind11;
using namespace fsplit;

namespace {

// Python-side owner of a ring pointer.
struct RingHandle {
  RingPtr ring;
};

Ideal make_ideal(const RingHandle& h, const std::vector<std::string>& generators) {
  std::vector<Polynomial> polys;
  for (const auto& g : generators) polys.push_back(parse_polynomial(h.ring, g));
  return Ideal(h.ring, std::move(polys));
}

}  // namespace

PYBIND11_MODULE(_fsplit, m) {
  m.doc() = "Frobenius splittings and compatibly split ideals of polynomial rings over F_p";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotASplitting>(m, "NotASplitting", PyExc_ValueError);

  py::class_<RingHandle>(m, "Ring")
      .def(py::init([](std::uint32_t p, std::vector<std::string> vars, std::optional<std::vector<std::vector<int>>> weights) {
             std::optional<Grading> grading;
             if (weights) grading = Grading(*weights);
             return RingHandle{Ring::make(p, std::move(vars), std::move(grading))};
           }),
           py::arg("p"), py::arg("vars"), py::arg("weights") = std::nullopt)
      .def_property_readonly("characteristic", [](const RingHandle& h) { return h.ring->characteristic(); })
      .def_property_readonly("variables", [](const RingHandle& h) { return h.ring->variables(); })
      .def("polynomial", [](const RingHandle& h, const std::string& text) { return parse_polynomial(h.ring, text); })
      .def("ideal", &make_ideal)
      .def("__repr__", [](const RingHandle& h) { return h.ring->to_string(); });

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial(" + f.to_string() + ")"; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__pow__", &Polynomial::pow)
      .def_property_readonly("is_zero", &Polynomial::is_zero)
      .def_property_readonly("degree", &Polynomial::degree);

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("basis", [](const Ideal& I) { return std::vector<Polynomial>(I.basis().begin(), I.basis().end()); })
      .def("contains", py::overload_cast<const Polynomial&>(&Ideal::contains, py::const_))
      .def("__contains__", py::overload_cast<const Polynomial&>(&Ideal::contains, py::const_))
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& I) { return "Ideal" + I.to_string(); })
      .def("__add__", &ideal_sum)
      .def("__and__", &ideal_intersection)
      .def("quotient", &ideal_quotient)
      .def("saturate", &saturate)
      .def("normal_form", [](const Ideal& I, const Polynomial& f) { return normal_form(f, I); })
      .def("hilbert_function", &hilbert_function)
      .def("hilbert_polynomial", [](const Ideal& I) { return hilbert_polynomial(I).to_string(); })
      .def_property_readonly("is_monomial", &Ideal::is_monomial);

  py::class_<Splitting>(m, "Splitting")
      .def(py::init<Polynomial>())
      .def_property_readonly("premultiplier", &Splitting::premultiplier)
      .def("__call__", &Splitting::operator())
      .def("is_graded", [](const Splitting& s) { return is_graded(s); })
      .def("graded_part", [](const Splitting& s) { return graded_part(s); })
      .def("is_compatible",
           [](const Splitting& s, const Ideal& I) {
             auto cert = is_compatible(s, I);
             return py::make_tuple(cert.verdict, cert.witness);
           })
      .def("rigidity",
           [](const Splitting& s, const Ideal& I, std::optional<long long> bound) {
             auto r = rigidity_report(I, s, bound);
             py::dict d;
             d["dim_hom"] = r.dim_hom;
             d["dim_intertwined"] = r.dim_intertwined;
             d["degree_bound"] = r.degree_bound;
             d["saturated"] = r.saturated;
             return d;
           },
           py::arg("ideal"), py::arg("degree_bound") = std::nullopt)
      .def("phi_membership", [](const Splitting& s, const Ideal& I, long long N) { return phi_membership(I, s, N); })
      .def("brute_force_toric", [](const Splitting& s) { return brute_force_toric(s).members; })
      .def("enumerate_closure",
           [](const Splitting& s, const std::vector<Ideal>& seeds) { return enumerate_closure(seeds, s).members; });

  m.def("trace", &trace);
  m.def("frobenius", &frobenius);
  m.def("standard_splitting", [](const RingHandle& h) { return standard_splitting(h.ring); });

  m.def(
      "run_scenario",
      [](const std::string& text, const std::vector<std::string>& args) {
        auto result = run_command(parse_scenario(text), args);
        return py::make_tuple(result.summary, result.report.dump(2), result.exit_code);
      },
      py::arg("text"), py::arg("args"));
}
