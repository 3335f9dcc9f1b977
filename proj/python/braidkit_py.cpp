// Thin JSON-level bindings: documents cross the boundary as JSON text and
// every structure is rebuilt from the same schemas the command line reads.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "braidkit/braid_rep.hpp"
#include "braidkit/braided_core.hpp"
#include "braidkit/cli.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/primitives.hpp"
#include "braidkit/tensor_bialgebra.hpp"

namespace py = pybind11;
using namespace braidkit;
using json_io::Json;

namespace {

std::optional<FieldSpec> field_arg(const std::optional<std::string>& field) {
  if (!field) return std::nullopt;
  return FieldSpec::parse(*field);
}

std::string report_json(const AxiomReport& r) {
  Json out = Json::object();
  for (const AxiomCheck& c : r.checks()) out[c.name] = c.passed;
  return out.dump();
}

std::tuple<int, std::string, std::string> run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_braidkit, m) {
  m.doc() = "Exact braided bialgebra computations";
  m.attr("__version__") = BRAIDKIT_VERSION;

  auto base = py::register_exception<Error>(m, "BraidkitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<FieldMismatch>(m, "FieldMismatch", base.ptr());
  py::register_exception<NotPrime>(m, "NotPrime", base.ptr());
  py::register_exception<BadDegree>(m, "BadDegree", base.ptr());
  py::register_exception<SpecViolation>(m, "SpecViolation", base.ptr());

  m.def("run", &run, py::arg("args"),
        "Run a command-line invocation in process; returns (exit code, stdout, stderr).");

  m.def(
      "check_yang_baxter",
      [](const std::string& doc, std::optional<std::string> field) {
        const BraidedObject v = json_io::braiding_from_json(Json::parse(doc), field_arg(field));
        return report_json(check_yang_baxter(v));
      },
      py::arg("doc"), py::arg("field") = py::none());

  m.def(
      "check_bialgebra",
      [](const std::string& doc, std::optional<std::string> field) {
        const BialgebraData b = json_io::bialgebra_from_json(Json::parse(doc), field_arg(field));
        return report_json(check_braided_bialgebra(b));
      },
      py::arg("doc"), py::arg("field") = py::none());

  m.def(
      "block_braiding",
      [](const std::string& doc, std::size_t mm, std::size_t nn, std::optional<std::string> field) {
        const BraidedObject v = json_io::braiding_from_json(Json::parse(doc), field_arg(field));
        return cT(mm, nn, v).to_strings();
      },
      py::arg("doc"), py::arg("m"), py::arg("n"), py::arg("field") = py::none());

  m.def(
      "primitive_dims",
      [](const std::string& doc, std::size_t degree, std::optional<std::string> field) {
        const BraidedObject v = json_io::braiding_from_json(Json::parse(doc), field_arg(field));
        return primitive_dims(TruncatedTensorBialgebra::build(v, degree));
      },
      py::arg("doc"), py::arg("degree"), py::arg("field") = py::none());

  m.def(
      "primitives",
      [](const std::string& doc, std::optional<std::string> field) {
        const BialgebraData b = json_io::bialgebra_from_json(Json::parse(doc), field_arg(field));
        const PrimitiveSpace p = braidkit::primitives(b);
        return std::make_pair(p.xi.to_strings(), p.c_p.to_strings());
      },
      py::arg("doc"), py::arg("field") = py::none());
}
