#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotcolor/coloring.hpp"
#include "knotcolor/diagram.hpp"
#include "knotcolor/goeritz.hpp"
#include "knotcolor/pretzel.hpp"

namespace py = pybind11;
namespace kc = knotcolor;

namespace {

py::object big(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list matrix_rows(const kc::IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(big(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

kc::PretzelSpec spec_from(const std::vector<long long>& q) {
    for (long long v : q)
        if (v == 0) throw kc::MalformedToken("twist counts must be nonzero");
    if (q.empty()) throw kc::MalformedToken("pretzel spec needs at least one twist region");
    return kc::PretzelSpec{q};
}

}  // namespace

PYBIND11_MODULE(_knotcolor, m) {
    m.doc() = "exact Fox n-coloring invariants of knots";

    py::register_exception<kc::KnotError>(m, "KnotError", PyExc_ValueError);

    py::class_<kc::PlanarDiagram>(m, "PlanarDiagram")
        .def_static("parse", &kc::PlanarDiagram::parse, py::arg("text"))
        .def_property_readonly("crossing_count", &kc::PlanarDiagram::crossing_count)
        .def_property_readonly("edge_count", &kc::PlanarDiagram::edge_count)
        .def_property_readonly("strand_count", &kc::PlanarDiagram::strand_count)
        .def("serialize", &kc::PlanarDiagram::serialize)
        .def("__repr__", [](const kc::PlanarDiagram& d) {
            return "<PlanarDiagram with " + std::to_string(d.crossing_count()) + " crossings>";
        });

    m.def("parse_pd", &kc::PlanarDiagram::parse, py::arg("text"),
          "Parse a PD code into a validated diagram.");

    m.def("determinant",
          [](const kc::PlanarDiagram& d) { return big(kc::determinant(d)); },
          py::arg("diagram"), "Knot determinant |det C|.");

    m.def("goeritz_determinant",
          [](const kc::PlanarDiagram& d) { return big(kc::goeritz_determinant(kc::faces(d))); },
          py::arg("diagram"), "Knot determinant computed from the Goeritz matrix.");

    m.def("nullity",
          [](const kc::PlanarDiagram& d, std::uint64_t p) { return kc::nullity(d, p); },
          py::arg("diagram"), py::arg("p"), "Mod-p nullity of the coloring matrix.");

    m.def("coloring_count",
          [](const kc::PlanarDiagram& d, std::uint64_t n) {
              return big(kc::coloring_count(d, n));
          },
          py::arg("diagram"), py::arg("n"), "Number of n-colorings, trivial ones included.");

    m.def("colorings",
          [](const kc::PlanarDiagram& d, std::uint64_t n) {
              py::list out;
              for (const auto& col : kc::colorings(d, n)) out.append(col.colors);
              return out;
          },
          py::arg("diagram"), py::arg("n"),
          "All n-colorings as lists of strand colors.");

    m.def("is_n_colorable",
          [](const kc::PlanarDiagram& d, std::uint64_t n) { return kc::is_n_colorable(d, n); },
          py::arg("diagram"), py::arg("n"));

    m.def("coloring_group",
          [](const kc::PlanarDiagram& d) {
              py::list out;
              for (const auto& dv : kc::coloring_group(d)) out.append(big(dv));
              return out;
          },
          py::arg("diagram"), "Nonunit Smith divisors of the coloring matrix.");

    m.def("precoloring_matrix",
          [](const kc::PlanarDiagram& d) { return matrix_rows(kc::build_precoloring(d).pre_matrix); },
          py::arg("diagram"));

    m.def("goeritz_matrix",
          [](const kc::PlanarDiagram& d) {
              return matrix_rows(kc::build_goeritz(kc::faces(d)).pre_matrix);
          },
          py::arg("diagram"), "Pre-Goeritz matrix over the shaded regions.");

    m.def("pretzel_determinant",
          [](const std::vector<long long>& q) {
              return big(kc::pretzel_determinant(spec_from(q)));
          },
          py::arg("q"), "Closed-form determinant of the pretzel P(q1,...,qm).");

    m.def("pretzel_nullity",
          [](const std::vector<long long>& q, std::uint64_t p) {
              return kc::pretzel_nullity(spec_from(q), p);
          },
          py::arg("q"), py::arg("p"));

    m.def("pretzel_diagram",
          [](const std::vector<long long>& q) { return kc::pretzel_diagram(spec_from(q)); },
          py::arg("q"), "Standard pretzel diagram; raises for link closures.");
}
