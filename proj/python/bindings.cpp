#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibniz/biderivations.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/io.hpp"
#include "leibniz/report.hpp"
#include "leibniz/suite.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list vector_out(const Vector& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

Vector vector_in(const py::sequence& s, std::size_t n) {
  if (py::len(s) != n) throw py::value_error("expected " + std::to_string(n) + " coordinates");
  Vector v;
  for (const auto& h : s) v.push_back(rational(h));
  return v;
}

py::list basis_out(const Subspace& S) {
  py::list out;
  for (std::size_t r = 0; r < S.dim(); ++r) out.append(vector_out(S.basis_vector(r)));
  return out;
}

// Rows of the matrix; column j is the image of e_j.
py::list map_out(const LinearMap& D) {
  py::list rows;
  for (std::size_t r = 0; r < D.dim(); ++r) rows.append(vector_out(D.matrix().row_vector(r)));
  return rows;
}

py::list map_basis_out(const Subspace& S, std::size_t n) {
  py::list out;
  for (std::size_t r = 0; r < S.dim(); ++r) out.append(map_out(LinearMap::from_vector(n, S.basis_vector(r))));
  return out;
}

py::object json_out(const io::json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

// {(i, j): [coefficients]} with 0-based keys.
BilinearTensor bilinear_in(const py::dict& entries, std::size_t n) {
  BilinearTensor B(n);
  for (const auto& [key, value] : entries) {
    const auto ij = key.cast<std::pair<std::size_t, std::size_t>>();
    if (ij.first >= n || ij.second >= n) throw py::index_error("basis index out of range");
    const Vector v = vector_in(value.cast<py::sequence>(), n);
    std::copy(v.begin(), v.end(), B.value(ij.first, ij.second).begin());
  }
  return B;
}

}  // namespace

PYBIND11_MODULE(_leibniz, m) {
  m.doc() = "Exact computations on finite-dimensional left Leibniz algebras over Q";

  py::class_<StructureTensor>(m, "Algebra")
      .def_static("parse", [](const std::string& text) { return io::parse_algebra(text); }, py::arg("text"))
      .def_static("catalog", &catalog::build, py::arg("name"), py::arg("n") = 0)
      .def_static(
          "random",
          [](std::uint64_t seed, const std::string& lie, std::size_t module_dim) {
            return catalog::random_hemisemidirect(seed, catalog::parse_lie_choice(lie), module_dim);
          },
          py::arg("seed"), py::arg("lie"), py::arg("module_dim"))
      .def_property_readonly("dim", &StructureTensor::dim)
      .def_property_readonly("labels", &StructureTensor::all_labels)
      .def("to_json", [](const StructureTensor& L) { return io::emit_algebra(L); })
      .def("bracket",
           [](const StructureTensor& L, const py::sequence& x, const py::sequence& y) {
             return vector_out(bracket(L, vector_in(x, L.dim()), vector_in(y, L.dim())));
           })
      .def("opposite", &opposite)
      .def("__eq__", [](const StructureTensor& a, const StructureTensor& b) { return a == b; })
      .def("__repr__", [](const StructureTensor& L) { return "<Algebra dim=" + std::to_string(L.dim()) + ">"; });

  m.def("catalog_names", &catalog::builder_names);
  m.def("leibniz_violations", [](const StructureTensor& L) {
    py::list out;
    for (const auto& v : check_left_leibniz(L)) out.append(py::make_tuple(v.i, v.j, v.k));
    return out;
  });
  m.def("is_lie", &is_lie);
  m.def("leibniz_kernel", [](const StructureTensor& L) { return basis_out(leibniz_kernel(L)); });
  m.def("left_center", [](const StructureTensor& L) { return basis_out(left_center(L)); });
  m.def("center", [](const StructureTensor& L) { return basis_out(center(L)); });
  m.def("derivations", [](const StructureTensor& L) { return map_basis_out(derivation_space(L), L.dim()); });
  m.def("inner_derivations", [](const StructureTensor& L) { return map_basis_out(inner_derivation_space(L), L.dim()); });
  m.def(
      "is_complete",
      [](const StructureTensor& L, const std::string& definition) {
        if (definition == "def1") return is_complete_def1(L).verdict;
        if (definition == "def2") return is_complete_def2(L).verdict;
        throw py::value_error("definition must be 'def1' or 'def2'");
      },
      py::arg("algebra"), py::arg("definition"));
  m.def("fact", &catalog::evaluate_fact, py::arg("algebra"), py::arg("key"));
  m.def("fact_keys", &catalog::fact_keys);

  m.def(
      "factor",
      [](const StructureTensor& L, const py::dict& entries, const std::string& modulo, const std::string& side) {
        if (modulo != "zero" && modulo != "leib") throw py::value_error("modulo must be 'zero' or 'leib'");
        const auto sides = side == "left"    ? report::Sides::left
                           : side == "right" ? report::Sides::right
                           : side == "both"  ? report::Sides::both
                                             : throw py::value_error("side must be 'left', 'right' or 'both'");
        return json_out(report::factor(L, bilinear_in(entries, L.dim()),
                                       modulo == "zero" ? report::Modulo::zero : report::Modulo::leib, sides));
      },
      py::arg("algebra"), py::arg("entries"), py::arg("modulo") = "zero", py::arg("side") = "left");

  m.def(
      "report",
      [](const std::string& command, const StructureTensor& L) {
        if (command == "validate") return json_out(report::validate(L));
        if (command == "invariants") return json_out(report::invariants(L));
        if (command == "derivations") return json_out(report::derivations(L));
        if (command == "biderivations") return json_out(report::biderivations(L));
        if (command == "completeness") return json_out(report::completeness(L));
        throw py::value_error("unknown command '" + command + "'");
      },
      py::arg("command"), py::arg("algebra"));
  m.def(
      "verify",
      [](std::size_t random_count) {
        suite::SuiteOptions o;
        o.random_count = random_count;
        return json_out(report::verify_paper(o));
      },
      py::arg("random_count") = 30);
}
