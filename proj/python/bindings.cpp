// JSON text in, JSON text out; the Python package converts to dicts.

#include <pybind11/pybind11.h>

#include "ghzcert/certificate.hpp"
#include "ghzcert/error.hpp"
#include "ghzcert/hypergraph.hpp"
#include "ghzcert/json_io.hpp"
#include "ghzcert/protocol.hpp"

namespace py = pybind11;
using namespace ghzcert;

namespace {

Hypergraph parse_hypergraph(const std::string& text) {
  Hypergraph h = hypergraph_from_json(Json::parse(text));
  validate(h);
  return h;
}

std::string connectivity(const std::string& text) {
  const Hypergraph h = parse_hypergraph(text);
  const Cut cut = minimum_cut(h);
  const RateBound rate = ghz_rate_bound(h);
  return Json{{"lambda", rate.lambda},
              {"cut", Json{{"side", cut.side}, {"crossing", cut.crossing}}},
              {"min_cut_rank", integer_to_json(rate.min_cut_rank)},
              {"ghz_per_copy", rate.log2_rank}}
      .dump();
}

std::string epr(const std::string& text, int a, int b) {
  const EprRate rate = epr_rate(parse_hypergraph(text), a, b);
  Json paths = Json::array();
  for (const auto& p : rate.paths) paths.push_back(Json{{"edges", p.edges}, {"vertices", p.vertices}});
  return Json{{"t", rate.t}, {"paths", paths}}.dump();
}

std::string certify(const std::string& text, int n, std::uint64_t seed) {
  return dump_canonical(certificate_to_json(synthesize_certificate(parse_hypergraph(text), n, seed)));
}

std::string verify(const std::string& text, bool deep) {
  VerifyOptions options;
  options.deep = deep;
  return report_to_json(verify_certificate(certificate_from_json(Json::parse(text)), options)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Held for the life of the interpreter; the module also references it.
  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).inc_ref();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(py::str(e.what()));
      exc.attr("code") = std::string(code_name(e.code()));
      exc.attr("index") = e.index() ? py::cast(*e.index()) : py::none();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
  m.def("connectivity", &connectivity, py::arg("hypergraph"));
  m.def("epr", &epr, py::arg("hypergraph"), py::arg("a"), py::arg("b"));
  m.def("certify", &certify, py::arg("hypergraph"), py::arg("n"), py::arg("seed") = 0);
  m.def("verify", &verify, py::arg("certificate"), py::arg("deep") = false);
}
