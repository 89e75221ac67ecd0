// Python module _kleinbu. Algebraic values are wrapped as classes; reports
// cross the boundary as JSON text and are decoded by the kleinbu package.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>

#include "kleinbu/braid.hpp"
#include "kleinbu/certificate.hpp"
#include "kleinbu/classifier.hpp"
#include "kleinbu/errors.hpp"
#include "kleinbu/expr.hpp"
#include "kleinbu/kernel.hpp"
#include "kleinbu/serialize.hpp"
#include "kleinbu/suites.hpp"
#include "kleinbu/witness.hpp"

namespace py = pybind11;
using namespace kleinbu;

namespace {

HomClass class_from(std::string const& text) { return hom_class_from_json(Json::parse(text)); }

KleinElt klein_from(std::pair<std::int64_t, std::int64_t> p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_kleinbu, m) {
  m.doc() = "Braid-group computations for the Borsuk-Ulam property of Klein bottle maps";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  (void)parse_error;

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def(py::init([](std::string const& text) { return parse_word(text); }), py::arg("text"))
      .def_static("u", &Word::u, py::arg("exp") = 1)
      .def_static("v", &Word::v, py::arg("exp") = 1)
      .def_static("big_b", [] { return big_b(); })
      .def("inverse", &Word::inverse)
      .def("pow", &Word::pow)
      .def("__len__", [](Word const& w) { return w.length(); })
      .def("is_identity", &Word::is_identity)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", [](Word const& w) { return WordHash{}(w); })
      .def("__str__", [](Word const& w) { return format(w); })
      .def("__repr__", [](Word const& w) { return "Word('" + format(w) + "')"; });

  py::class_<KleinElt>(m, "KleinElt")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("m") = 0, py::arg("n") = 0)
      .def_readonly("m", &KleinElt::m)
      .def_readonly("n", &KleinElt::n)
      .def("inverse", &KleinElt::inverse)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__iter__", [](KleinElt const& a) { return py::iter(py::make_tuple(a.m, a.n)); })
      .def("__hash__", [](KleinElt const& a) { return KleinHash{}(a); })
      .def("__repr__", [](KleinElt const& a) { return "KleinElt" + format(a); });

  py::class_<BraidElt>(m, "Braid")
      .def(py::init<>())
      .def(py::init([](Word const& w, std::int64_t mm, std::int64_t n) { return BraidElt{w, {mm, n}}; }),
           py::arg("word"), py::arg("m"), py::arg("n"))
      .def_static("parse", &parse_braid, py::arg("text"))
      .def_static("sigma_squared", &sigma_squared)
      .def_property_readonly("word", [](BraidElt const& b) { return b.w; })
      .def_property_readonly("twist", [](BraidElt const& b) { return b.t; })
      .def("inverse", &binv)
      .def("pow", &bpow)
      .def("lsigma", &lsigma)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](BraidElt const& b) { return format(b); })
      .def("__repr__", [](BraidElt const& b) { return "Braid('" + format(b) + "')"; });

  m.def("theta", [](std::pair<std::int64_t, std::int64_t> t, Word const& w) { return theta(klein_from(t), w); },
        py::arg("t"), py::arg("word"));
  m.def("gmap", &gmap, py::arg("word"));
  m.def("eval_braid", &eval_braid_expression, py::arg("expression"));
  m.def("expand", &expand, py::arg("k"), py::arg("l"));
  m.def(
      "project",
      [](Word const& w) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> out;
        for (auto const& [b, c] : project(w)) out[{b.k, b.l}] = c;
        return out;
      },
      py::arg("word"));
  m.def("format_kernel", [](Word const& w) { return format(project(w)); }, py::arg("word"));

  m.def(
      "normalize_json",
      [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
        return to_json(normalize({klein_from(a), klein_from(b)})).dump();
      },
      py::arg("img10"), py::arg("img01"));
  m.def("decide_json", [](std::string const& c) { return to_json(decide(class_from(c))).dump(); });
  m.def("witness_json", [](std::string const& c) { return to_json(build_witness(class_from(c))).dump(); });
  m.def(
      "search_json",
      [](std::string const& c, int max_length, std::int64_t max_coord, std::int64_t radius) {
        py::gil_scoped_release release;
        return to_json(search_witness(class_from(c), {max_length, max_coord, radius})).dump();
      },
      py::arg("cls"), py::arg("max_length"), py::arg("max_coord"), py::arg("kernel_radius"));
  m.def(
      "certify_json",
      [](std::string const& c, std::int64_t window, std::int64_t mn) {
        py::gil_scoped_release release;
        return to_json(check_certificate(class_from(c), {window, mn})).dump();
      },
      py::arg("cls"), py::arg("window"), py::arg("mn"));
  m.def(
      "run_suite_json",
      [](std::string const& name, std::uint64_t seed) {
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, seed);
        }
        Json j{{"suite", r.name},   {"passed", r.passed},     {"checks", r.checks},
               {"seconds", r.seconds}, {"failures", r.failures}, {"notes", r.notes}};
        return j.dump();
      },
      py::arg("name"), py::arg("seed"));
  m.def("suite_names", &suite_names);
}
