#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kchroma/coloring.hpp"
#include "kchroma/error.hpp"
#include "kchroma/esym.hpp"
#include "kchroma/io.hpp"
#include "kchroma/verifier.hpp"

namespace py = pybind11;
using namespace kchroma;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GraphSpec make_spec(unsigned n, unsigned k, const std::string& variant, unsigned m) {
  if (variant == "kneser") return GraphSpec::kneser(n, k);
  if (variant == "square") return GraphSpec::kneser_square(n, k);
  if (variant == "johnson") return GraphSpec::johnson_power(n, k, m);
  throw Error(Errc::invalid_argument, "unknown variant '" + variant + "'");
}

}  // namespace

PYBIND11_MODULE(_kchroma, m) {
  m.doc() = "Algebraic colorings of Kneser graph squares over finite fields";
  py::register_exception<Error>(m, "KchromaError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("binary", &Field::binary, py::arg("t"))
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("pow", &Field::pow)
      .def("inv", &Field::inv)
      .def("subfield_elements", &Field::subfield_elements, py::arg("t_prime"))
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", [](const Field& f) { return "Field(" + to_json(f).dump() + ")"; });

  m.def(
      "esym_prefix",
      [](const Field& f, const std::vector<Element>& z, unsigned r) { return esym_prefix(f, z, r); },
      py::arg("field"), py::arg("elements"), py::arg("r"), "e_1..e_r of the given field elements");
  m.def(
      "esym_naive",
      [](const Field& f, const std::vector<Element>& z, unsigned i) { return esym_naive(f, z, i); },
      py::arg("field"), py::arg("elements"), py::arg("i"), "e_i by direct subset sums (at most 12 elements)");

  py::class_<GroundSet>(m, "GroundSet")
      .def_readonly("field", &GroundSet::field)
      .def_readonly("elements", &GroundSet::elements)
      .def_property_readonly("construction", [](const GroundSet& x) { return std::string(to_string(x.construction)); })
      .def_readonly("t_prime", &GroundSet::t_prime)
      .def("__len__", &GroundSet::size)
      .def("to_dict", [](const GroundSet& x) { return to_python(to_json(x)); });

  m.def(
      "build_ground_set",
      [](unsigned k, unsigned r, const std::string& construction, unsigned t_prime) {
        return build_ground_set(k, r, {construction_from_string(construction), t_prime});
      },
      py::arg("k"), py::arg("r"), py::arg("construction") = "full-field", py::arg("t_prime") = 0);
  m.def("make_ground_set", &make_explicit_ground_set, py::arg("field"), py::arg("elements"));
  m.def("check_ground_set", &check_ground_set, py::arg("ground"), py::arg("r"));

  m.def(
      "color_all",
      [](const GroundSet& x, unsigned k, unsigned r, unsigned workers) {
        return to_python(coloring_to_json(color_all(x, k, r, workers)));
      },
      py::arg("ground"), py::arg("k"), py::arg("r"), py::arg("workers") = 1,
      "Color every k-subset; returns the JSON export as a dict");

  m.def(
      "verify_coloring",
      [](const GroundSet& x, unsigned k, unsigned r, const std::string& property, unsigned m_power,
         unsigned workers) {
        const Property p = property_from_string(property);
        const GraphSpec spec = graph_for_property(static_cast<unsigned>(x.size()), k, p, m_power);
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_coloring(spec, x, r, p, workers);
        }
        auto out = to_python(to_json(report));
        if (!report.passed) out["rechecked"] = recheck_violation(report);
        return out;
      },
      py::arg("ground"), py::arg("k"), py::arg("r"), py::arg("property") = "square", py::arg("m") = 0,
      py::arg("workers") = 1, "Exhaustive pair scan; returns the report as a dict");

  m.def(
      "bounds_report", [](unsigned k, unsigned r) { return to_python(to_json(bounds_report(k, r))); },
      py::arg("k"), py::arg("r"));

  m.def(
      "exact_chromatic",
      [](unsigned n, unsigned k, const std::string& variant, unsigned m_power) {
        return exact_chromatic(make_spec(n, k, variant, m_power));
      },
      py::arg("n"), py::arg("k"), py::arg("variant") = "square", py::arg("m") = 0);
  m.def(
      "greedy_chromatic",
      [](unsigned n, unsigned k, const std::string& variant, unsigned m_power) {
        return greedy_chromatic(make_spec(n, k, variant, m_power));
      },
      py::arg("n"), py::arg("k"), py::arg("variant") = "square", py::arg("m") = 0);

  m.def(
      "find_prime_in_interval",
      [](std::uint64_t n, const std::string& mode) {
        if (mode != "bertrand98" && mode != "ln2") throw Error(Errc::invalid_argument, "unknown mode '" + mode + "'");
        return find_prime_in_interval(n, mode == "ln2" ? PrimeMode::ln2 : PrimeMode::bertrand98);
      },
      py::arg("n"), py::arg("mode") = "bertrand98");

  m.def(
      "clique_witness",
      [](unsigned k, unsigned r) {
        std::vector<std::uint64_t> masks;
        for (const auto& v : clique_witness(k, r)) masks.push_back(v.mask);
        return masks;
      },
      py::arg("k"), py::arg("r"), "Bitmasks of a clique in K^2(2k+r, k)");
}
