#include <sstream>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutloc/cli.hpp"
#include "cutloc/cutlocus.hpp"
#include "cutloc/errors.hpp"
#include "cutloc/integrals.hpp"
#include "cutloc/json_io.hpp"
#include "cutloc/shapes.hpp"
#include "cutloc/symmetry.hpp"

namespace py = pybind11;
using namespace cutloc;

namespace {

py::array_t<double> column(const std::vector<CutSample>& samples, double (*get)(const CutSample&))
{
    py::array_t<double> a(static_cast<py::ssize_t>(samples.size()));
    auto w = a.mutable_unchecked<1>();
    for (std::size_t k = 0; k < samples.size(); ++k) w(k) = get(samples[k]);
    return a;
}

std::vector<CutSample> samples_for(const BoundaryCurve& c, std::size_t n, double tol)
{
    const BoundaryProjector proj(c, std::max<std::size_t>(4096, 2 * n));
    return compute_cut_samples(c, resample_arclength(c, n), proj, tol > 0 ? tol : default_tol(c));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Distance-function symmetry criterion for planar domains";

    // translators run newest first, so the base class goes in before its subclasses
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<InapplicableError>(m, "InapplicableError", PyExc_RuntimeError);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (exit code, stdout, stderr).");

    m.def("catalog_json", [] {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : shapes::catalog())
            j.push_back({{"name", e.name}, {"description", e.description}, {"schema", e.schema}, {"example", e.example}});
        return j.dump();
    });

    py::class_<BoundaryCurve>(m, "Curve")
        .def_static("from_json", [](const std::string& text) { return shapes::from_json_text(text); }, py::arg("text"))
        .def_property_readonly("length", &BoundaryCurve::length)
        .def_property_readonly("diameter", &BoundaryCurve::diameter)
        .def_property_readonly("area", [](const BoundaryCurve& c) { return area(c); })
        .def_property_readonly("perimeter", [](const BoundaryCurve& c) { return perimeter(c); })
        .def(
            "transformed",
            [](const BoundaryCurve& c, double scale, double angle, std::pair<double, double> shift) {
                return c.transformed(scale, angle, {shift.first, shift.second});
            },
            py::arg("scale"), py::arg("angle") = 0.0, py::arg("shift") = std::pair<double, double>{0.0, 0.0})
        .def(
            "cut_samples",
            [](const BoundaryCurve& c, std::size_t n, double tol) {
                const auto s = samples_for(c, n, tol);
                py::dict d;
                d["s"] = column(s, [](const CutSample& x) { return x.point.s; });
                d["x"] = column(s, [](const CutSample& x) { return x.point.position.x; });
                d["y"] = column(s, [](const CutSample& x) { return x.point.position.y; });
                d["kappa"] = column(s, [](const CutSample& x) { return x.point.curvature; });
                d["lambda"] = column(s, [](const CutSample& x) { return x.lambda; });
                d["phi"] = column(s, [](const CutSample& x) { return x.phi; });
                d["kappa_lambda"] = column(s, [](const CutSample& x) { return x.lambda_kappa; });
                return d;
            },
            py::arg("n") = 2048, py::arg("tol") = 0.0)
        .def(
            "report_json",
            [](const BoundaryCurve& c, std::size_t n, double tol) {
                const BoundaryProjector proj(c, std::max<std::size_t>(4096, 2 * n));
                SymmetryOptions opt;
                opt.tol = tol;
                const auto s = compute_cut_samples(c, resample_arclength(c, n), proj, tol > 0 ? tol : default_tol(c));
                return nlohmann::json(criterion_report(c, s, proj, opt)).dump();
            },
            py::arg("n") = 2048, py::arg("tol") = 0.0);
}
