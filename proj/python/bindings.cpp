// Python bindings for the orbitope toolkit. Structured values cross the
// boundary as plain dicts/lists mirroring the JSON schemas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitopes/json_io.hpp"
#include "orbitopes/pencil.hpp"
#include "orbitopes/spin.hpp"
#include "orbitopes/verify.hpp"

namespace py = pybind11;
using namespace orbitopes;

namespace {

json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    json arr = json::array();
    for (const auto& item : obj) arr.push_back(py_to_json(item));
    return arr;
  }
  if (py::isinstance<py::dict>(obj)) {
    json j;
    for (const auto& item : obj.cast<py::dict>()) {
      j[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return j;
  }
  throw py::type_error("unsupported value in JSON conversion");
}

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

DenseMatrix matrix_from_py(const py::handle& obj, const OrbitopeFamily& fam) {
  json j = py_to_json(obj);
  if (j.is_object()) return matrix_from_json(j);
  // Bare nested list: wrap with the family's shape and field.
  json wrapped;
  wrapped["rows"] = fam.model_rows;
  wrapped["cols"] = fam.model_cols;
  wrapped["field"] = field_name(fam.field);
  wrapped["entries"] = j;
  return matrix_from_json(wrapped);
}

struct PySpec {
  OrbitopeSpec spec;
};

}  // namespace

PYBIND11_MODULE(_orbitopes_impl, m) {
  m.doc() = "polar orbitopes: membership oracles, spectrahedral pencils, verification";

  py::register_exception<Error>(m, "OrbitopeError");

  py::class_<PySpec>(m, "Spec")
      .def_static(
          "from_dict",
          [](const py::dict& d) { return PySpec{spec_from_json(py_to_json(d))}; },
          "Build a spec from {'family', 'm'?, 'n', 'x' | 'x_matrix'}")
      .def_property_readonly("family",
                             [](const PySpec& s) { return s.spec.family().name(); })
      .def_property_readonly("rank", [](const PySpec& s) { return s.spec.family().rank; })
      .def_property_readonly("x", [](const PySpec& s) { return s.spec.x(); })
      .def("describe",
           [](const PySpec& s) { return json_to_py(describe_json(s.spec)); })
      .def(
          "membership",
          [](const PySpec& s, const py::handle& y, double eps) {
            return json_to_py(
                membership_to_json(membership(s.spec, matrix_from_py(y, s.spec.family()), eps)));
          },
          py::arg("y"), py::arg("eps") = 1e-8)
      .def(
          "polar_membership",
          [](const PySpec& s, const py::handle& y, double eps) {
            return json_to_py(membership_to_json(
                polar_membership(s.spec, matrix_from_py(y, s.spec.family()), eps)));
          },
          py::arg("y"), py::arg("eps") = 1e-8)
      .def(
          "support",
          [](const PySpec& s, const py::handle& d) {
            return support_function(s.spec, matrix_from_py(d, s.spec.family()));
          },
          py::arg("d"))
      .def(
          "a_coordinates",
          [](const PySpec& s, const py::handle& y) {
            auto ac = a_coordinates(s.spec.family(), matrix_from_py(y, s.spec.family()));
            py::dict out;
            out["v"] = py::cast(ac.v);
            out["trace"] = ac.trace;
            return out;
          },
          py::arg("y"))
      .def(
          "samples",
          [](const PySpec& s, int count, std::uint64_t seed) {
            py::list out;
            for (const auto& m : orbit_sample(s.spec, count, seed)) {
              out.append(json_to_py(matrix_to_json(m)));
            }
            return out;
          },
          py::arg("count"), py::arg("seed") = 0)
      .def("extreme_orbits",
           [](const PySpec& s) {
             py::list out;
             for (const auto& eo : extreme_orbits(s.spec)) {
               py::dict d;
               d["index"] = eo.index + 1;
               d["z"] = py::cast(eo.z);
               out.append(d);
             }
             return out;
           })
      .def(
          "pencil_metadata",
          [](const PySpec& s, const std::string& target) {
            auto pencil = target == "polar" ? polar_pencil(s.spec) : orbitope_pencil(s.spec);
            return json_to_py(pencil_metadata(pencil));
          },
          py::arg("target") = "orbitope")
      .def(
          "pencil_feasible",
          [](const PySpec& s, const py::handle& y, const std::string& target, double eps) {
            auto pencil = target == "polar" ? polar_pencil(s.spec) : orbitope_pencil(s.spec);
            auto f = pencil.feasibility(matrix_from_py(y, s.spec.family()));
            py::dict out;
            out["feasible"] = f.min_eigenvalue >= -eps;
            out["min_eigenvalue"] = f.min_eigenvalue;
            out["worst_block"] = f.worst_kind;
            return out;
          },
          py::arg("y"), py::arg("target") = "orbitope", py::arg("eps") = 1e-9)
      .def(
          "export_sdpa",
          [](const PySpec& s, const std::string& path, const std::string& target) {
            auto pencil = target == "polar" ? polar_pencil(s.spec) : orbitope_pencil(s.spec);
            pencil.materialize();
            bool complex_coeffs = false;
            for (const auto& block : pencil.blocks()) {
              for (const auto& coeff : block.coeffs) {
                for (int r = 0; r < coeff.rows() && !complex_coeffs; ++r)
                  for (int c = 0; c < coeff.cols(); ++c)
                    if (coeff.at(r, c).imag() != 0.0) {
                      complex_coeffs = true;
                      break;
                    }
              }
            }
            if (complex_coeffs) {
              pencil.realify().export_sdpa(path);
            } else {
              pencil.export_sdpa(path);
            }
          },
          py::arg("path"), py::arg("target") = "orbitope")
      .def(
          "verify",
          [](const PySpec& s, const std::string& suite, int count, std::uint64_t seed) {
            py::list out;
            if (suite == "kostant" || suite == "all") {
              out.append(json_to_py(verify_kostant(s.spec, count, seed).to_json()));
            }
            if (suite == "duality" || suite == "all") {
              out.append(json_to_py(verify_duality(s.spec, count, seed).to_json()));
            }
            if (suite == "faces" || suite == "all") {
              out.append(json_to_py(verify_face_support(s.spec, seed).to_json()));
            }
            return out;
          },
          py::arg("suite") = "all", py::arg("count") = 100, py::arg("seed") = 0);

  m.def(
      "load_spec",
      [](const std::string& text) { return PySpec{spec_from_json(json::parse(text))}; },
      "Parse a spec from its JSON text");

  m.def(
      "dominant",
      [](const std::string& family, int rank, const std::vector<double>& v) {
        RootFamily f;
        if (family == "A") {
          f = RootFamily::A;
        } else if (family == "B") {
          f = RootFamily::B;
        } else if (family == "C") {
          f = RootFamily::C;
        } else if (family == "BC") {
          f = RootFamily::BC;
        } else if (family == "D") {
          f = RootFamily::D;
        } else {
          throw py::value_error("family must be A, B, C, BC or D");
        }
        auto sys = RestrictedRootSystem::make(f, rank);
        auto cv = sys.dominant(v);
        py::dict out;
        out["dominant"] = py::cast(cv.dominant);
        out["source"] = py::cast(cv.witness.source);
        out["sign"] = py::cast(cv.witness.sign);
        return out;
      },
      py::arg("family"), py::arg("rank"), py::arg("v"));

  m.def(
      "ky_fan_norm",
      [](const py::handle& matrix, int k) {
        return ky_fan_norm(matrix_from_json(py_to_json(matrix)), k);
      },
      py::arg("matrix"), py::arg("k"));

  m.def(
      "conv_so_metadata",
      [](int n) { return json_to_py(pencil_metadata(conv_so_pencil(n))); }, py::arg("n"));
}
