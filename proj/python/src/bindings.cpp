#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "reesalg/report.hpp"

namespace py = pybind11;
using namespace reesalg;

namespace {

struct PyInstance {
  std::unique_ptr<Instance> inst;
};

PyInstance from_spec(InstanceSpec spec, std::optional<int> n_max, std::optional<int> window,
                     std::optional<std::uint64_t> seed) {
  if (n_max) spec.n_max = *n_max;
  if (window) spec.window = *window;
  if (seed) spec.seed = *seed;
  return PyInstance{build_instance(spec)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rees algebras of modules over graded polynomial rings";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("__version__") = kToolVersion;

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& err) {
      // args: (message, error json)
      py::tuple args = py::make_tuple(err.what(), error_json(err).dump());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("command_names", &command_names);
  m.def("exit_code", [](const std::string& name) {
    for (auto c : {ErrorCode::Parse, ErrorCode::Validation, ErrorCode::RingMismatch, ErrorCode::Domain,
                   ErrorCode::Resource, ErrorCode::Unsupported, ErrorCode::InternalInconsistency}) {
      if (name == error_code_name(c)) return exit_code(c);
    }
    throw py::value_error("unknown error code " + name);
  });
  m.def("canonical_text", [](const std::string& text) { return print_instance(parse_instance(text)); },
        "Parses instance text and prints it back in canonical form.");

  py::class_<PyInstance>(m, "Instance")
      .def_static(
          "from_text",
          [](const std::string& text, std::optional<int> n_max, std::optional<int> window,
             std::optional<std::uint64_t> seed) { return from_spec(parse_instance(text), n_max, window, seed); },
          py::arg("text"), py::kw_only(), py::arg("n_max") = py::none(), py::arg("window") = py::none(),
          py::arg("seed") = py::none())
      .def_static(
          "from_file",
          [](const std::string& path, std::optional<int> n_max, std::optional<int> window,
             std::optional<std::uint64_t> seed) { return from_spec(load_instance_file(path), n_max, window, seed); },
          py::arg("path"), py::kw_only(), py::arg("n_max") = py::none(), py::arg("window") = py::none(),
          py::arg("seed") = py::none())
      .def_property_readonly("name", [](const PyInstance& p) { return p.inst->spec.name; })
      .def_property_readonly("nvars", [](const PyInstance& p) { return p.inst->context->nvars(); })
      .def_property_readonly("e", [](const PyInstance& p) { return p.inst->context->e(); })
      .def_property_readonly("mu", [](const PyInstance& p) { return p.inst->context->mu(); })
      .def_property_readonly("rank", [](const PyInstance& p) { return p.inst->context->rank(); })
      .def_property_readonly("analytic_spread", [](const PyInstance& p) { return p.inst->context->analytic_spread(); })
      .def_property_readonly("dim_rees", [](const PyInstance& p) { return p.inst->context->dim_rees(); })
      .def("text", [](const PyInstance& p) { return print_instance(p.inst->spec); })
      .def("power_csv", [](const PyInstance& p, int n) { return p.inst->context->power_csv(n); }, py::arg("n"))
      .def(
          "run_json",
          [](const PyInstance& p, const std::string& command, bool meta) {
            RunOptions o;
            o.meta = meta;
            CommandResult r;
            {
              py::gil_scoped_release release;
              r = run_command(*p.inst, command, o);
            }
            return py::make_tuple(r.json.dump(), r.violation);
          },
          py::arg("command"), py::arg("meta") = false,
          "Runs a command other than power; returns (json text, violation flag).");
}
