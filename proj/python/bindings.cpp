#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nestcone/cli.hpp"
#include "nestcone/error.hpp"
#include "nestcone/expr.hpp"
#include "nestcone/io.hpp"

namespace py = pybind11;
using namespace nestcone;

namespace {

Space space_of(const std::string& surface, const std::string& kind, int n, int genus) {
  SurfaceModel s = surface_from_name(surface, genus);
  if (kind == "surface") return surface_space(s);
  if (kind == "hilb") return hilb(n, s);
  if (kind == "nested") return nested(n, s);
  if (kind == "univ") return univ(n, s);
  throw Error(ErrorCode::InvalidSpace, "unknown space '" + kind + "'");
}

TableParams params(std::optional<int> n, std::optional<int> g, std::optional<int> i) { return TableParams{n, g, i}; }

}  // namespace

PYBIND11_MODULE(_nestcone, m) {
  m.doc() = "exact intersection theory on nested Hilbert schemes of points";

  py::register_exception<Error>(m, "NestconeError", PyExc_ValueError);

  m.def("pair", [](const std::string& div, const std::string& cur, const std::string& surface, const std::string& space,
                   int n, int genus) {
    Space sp = space_of(surface, space, n, genus);
    return to_string(pair(parse_div(div, sp), parse_cur(cur, sp)));
  }, py::arg("divisor"), py::arg("curve"), py::arg("surface") = "p2", py::arg("space") = "hilb", py::arg("n") = 2,
        py::arg("genus") = 3);

  m.def("divisor", [](const std::string& expr, const std::string& surface, const std::string& space, int n, int genus) {
    return dump(to_json(parse_div(expr, space_of(surface, space, n, genus))));
  }, py::arg("expr"), py::arg("surface") = "p2", py::arg("space") = "hilb", py::arg("n") = 2, py::arg("genus") = 3);

  m.def("curve", [](const std::string& expr, const std::string& surface, const std::string& space, int n, int genus) {
    return dump(to_json(parse_cur(expr, space_of(surface, space, n, genus))));
  }, py::arg("expr"), py::arg("surface") = "p2", py::arg("space") = "hilb", py::arg("n") = 2, py::arg("genus") = 3);

  m.def("pairing_table", [](const std::string& surface, const std::string& space, int n, int genus) {
    return dump(to_json(pairing_table(space_of(surface, space, n, genus))));
  }, py::arg("surface") = "p2", py::arg("space") = "hilb", py::arg("n") = 2, py::arg("genus") = 3);

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& t : catalog()) ids.push_back(t.id);
    return ids;
  });

  m.def("reproduce_table", [](const std::string& id, std::optional<int> n, std::optional<int> g, std::optional<int> i) {
    TableReport r;
    {
      py::gil_scoped_release nogil;
      r = reproduce_table(id, params(n, g, i));
    }
    return dump(to_json(r));
  }, py::arg("id"), py::arg("n") = py::none(), py::arg("g") = py::none(), py::arg("i") = py::none());

  m.def("butler_check", [](int i, long a, long b, int n, int kmin, int kmax, bool swap) {
    return dump(to_json(butler_check(ButlerInput{i, a, b, n, kmin, kmax, swap})));
  }, py::arg("i"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("kmin") = 1, py::arg("kmax") = 1,
        py::arg("swap_factors") = false);

  m.def("asymptotic_report", [](int kmax) { return dump(to_json(asymptotic_report(kmax))); }, py::arg("kmax") = 30);

  m.def("run", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"nestcone"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
