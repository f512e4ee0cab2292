// Extension module tknots._core. Structured values cross the boundary as
// canonical JSON text; the Python package decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tknots/algebra.hpp"
#include "tknots/cocycles.hpp"
#include "tknots/commands.hpp"
#include "tknots/smith.hpp"
#include "tknots/tribracket.hpp"

namespace py = pybind11;
using namespace tknots;

namespace {

PyObject* error_type = nullptr;  // tknots.TknotsError, created once and never freed

std::optional<Json> maybe_json(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return parse_json(*s);
}

py::tuple run(const std::string& subcommand, const std::string& structure_path,
              const std::optional<std::string>& structure_json, const std::string& diagram_path,
              const std::optional<std::string>& diagram_json, const std::string& cocycle,
              const std::optional<std::string>& cocycle_json, const std::string& theory, int degree,
              int64_t modulus, const std::string& form, int n, bool transported, bool classes, int jobs) {
  RunConfig cfg;
  cfg.subcommand = subcommand;
  cfg.theory = theory;
  cfg.degree = degree;
  cfg.modulus = modulus;
  cfg.form = form;
  cfg.n = n;
  cfg.transported = transported;
  cfg.classes = classes;
  cfg.jobs = jobs;
  cfg.structure_path = structure_path;
  cfg.diagram_path = diagram_path;
  cfg.cocycle = cocycle;
  Report r;
  try {
    cfg.structure = maybe_json(structure_json);
    cfg.diagram = maybe_json(diagram_json);
    cfg.cocycle_json = maybe_json(cocycle_json);
  } catch (const Error& e) {
    r = {{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}}, 2};
    return py::make_tuple(r.json.dump(), r.status);
  }
  {
    py::gil_scoped_release nogil;
    r = execute(cfg);
  }
  return py::make_tuple(r.json.dump(), r.status);
}

py::dict smith(const std::vector<std::vector<int64_t>>& rows) {
  const SmithForm s = smith_normal_form(IntMatrix::from_rows(rows));
  auto mat = [](const IntMatrix& m) {
    std::vector<std::vector<int64_t>> out(m.rows(), std::vector<int64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
  };
  py::dict d;
  d["U"] = mat(s.U);
  d["D"] = mat(s.D);
  d["V"] = mat(s.V);
  d["rank"] = s.rank;
  d["diagonal"] = s.diagonal;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shadow and local biquandle invariants";

  error_type = PyErr_NewException("tknots.TknotsError", PyExc_ValueError, nullptr);
  m.attr("TknotsError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(error_code_name(e.code()), e.what());
      PyErr_SetObject(error_type, args.ptr());
    }
  });

  py::class_<ShadowBiquandle>(m, "ShadowBiquandle")
      .def_property_readonly("biquandle_size", &ShadowBiquandle::biquandle_size)
      .def_property_readonly("bset_size", &ShadowBiquandle::bset_size)
      .def_property_readonly("strongly_connected", &ShadowBiquandle::strongly_connected)
      .def_property_readonly("name", &ShadowBiquandle::name)
      .def("under", &ShadowBiquandle::under)
      .def("over", &ShadowBiquandle::over)
      .def("act", &ShadowBiquandle::act)
      .def("act_inv", &ShadowBiquandle::act_inv)
      .def("searrow", &ShadowBiquandle::searrow)
      .def("to_json", [](const ShadowBiquandle& s) { return to_json(s).dump(); });

  py::class_<HorizontalTribracket>(m, "HorizontalTribracket")
      .def_property_readonly("size", &HorizontalTribracket::size)
      .def("__call__", [](const HorizontalTribracket& t, int x, int y, int z) {
        if (x < 0 || y < 0 || z < 0 || x >= t.size() || y >= t.size() || z >= t.size())
          throw py::index_error("tribracket argument out of range");
        return t(x, y, z);
      })
      .def("__eq__", &HorizontalTribracket::operator==)
      .def("to_json", [](const HorizontalTribracket& t) { return to_json(t).dump(); });

  m.def("dihedral", &dihedral, py::arg("n"));
  m.def("alexander", &alexander, py::arg("n"), py::arg("p"));
  m.def("dihedral_tribracket", &dihedral_tribracket, py::arg("n"));
  m.def("structure_from_json", [](const std::string& s) { return shadow_from_json(parse_json(s)); });
  m.def("tribracket_from_json", [](const std::string& s) { return tribracket_from_json(parse_json(s)); });
  m.def("corresponding_tribracket", &corresponding_tribracket, py::arg("sb"));
  m.def("mochizuki_value", &mochizuki_value, py::arg("n"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("smith_normal_form", &smith, py::arg("rows"));
  m.def("run", &run);
}
