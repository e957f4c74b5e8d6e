#include "spiral/cli.hpp"
#include "spiral/errors.hpp"
#include "spiral/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace spiral;

namespace {

py::tuple run(const std::vector<std::string>& args, const std::string& input) {
    std::ostringstream out, err;
    std::istringstream in(input);
    int status;
    {
        py::gil_scoped_release release;
        status = run_cli(args, out, err, in);
    }
    return py::make_tuple(status, out.str(), err.str());
}

std::string roots(char series, int rank, int twist) {
    return datum_json(build_root_datum(series, rank, twist)).dump();
}

std::string facet(char series, int rank, int twist, const std::string& point) {
    auto d = build_root_datum(series, rank, twist);
    return facet_json(d, facet_of(d, parse_vector(point))).dump();
}

std::vector<int> c_params(char series, int rank, int twist, const std::string& point, const std::string& registry) {
    auto d = build_root_datum(series, rank, twist);
    auto A = facet_of(d, parse_vector(point));
    auto E = span_of_facet(d, A);
    auto reg = parse_registry(registry);
    auto datum = find_datum(reg, pseudo_levi(d, E).type);
    if (!datum) fail(ErrorCode::NoCuspidalDatum, "no cuspidal datum for the span of " + point);
    return c_parameters(d, E, A, *datum);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spirals, facets, relative affine Weyl groups and graded DAHAs";
    py::register_exception<Error>(m, "SpiralError", PyExc_ValueError);
    m.def("run", &run, py::arg("args"), py::arg("stdin") = "",
          "Run the command-line tool; returns (status, stdout, stderr).");
    m.def("roots_json", &roots, py::arg("series"), py::arg("rank"), py::arg("twist") = 1);
    m.def("facet_json", &facet, py::arg("series"), py::arg("rank"), py::arg("twist"), py::arg("point"));
    m.def("c_parameters", &c_params, py::arg("series"), py::arg("rank"), py::arg("twist"), py::arg("point"),
          py::arg("registry") = "");
}
