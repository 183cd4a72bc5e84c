// Python bindings for the germlab core.  The full pipeline is exposed as
// canonical JSON (the same byte-stable serialization the CLI emits); the
// scalar invariants and the brute-force oracle are exposed directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germlab/oracle.hpp"
#include "germlab/parser.hpp"
#include "germlab/report.hpp"

namespace py = pybind11;
using namespace germlab;

namespace {

Ideal parse_ideal(const std::vector<std::string>& polys, const std::vector<std::string>& vars) {
    std::vector<Polynomial> gens;
    gens.reserve(polys.size());
    for (const auto& p : polys) gens.push_back(parse_poly(p, vars));
    return Ideal(std::move(gens));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Milnor/Tjurina invariants of isolated hypersurface singularities";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotIsolatedError>(m, "NotIsolatedError", PyExc_ValueError);
    py::register_exception<SmoothGermError>(m, "SmoothGermError", PyExc_ValueError);
    py::register_exception<NotConvenientError>(m, "NotConvenientError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

    m.def(
        "milnor_number",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return milnor_number(parse_poly(poly, vars));
        },
        py::arg("poly"), py::arg("vars"),
        "mu = dim S/J_f; raises NotIsolatedError when infinite");

    m.def(
        "tjurina_number",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return tjurina_number(parse_poly(poly, vars));
        },
        py::arg("poly"), py::arg("vars"),
        "tau = dim S/(J_f, f); raises NotIsolatedError when infinite");

    m.def(
        "analyze_json",
        [](const std::string& poly, const std::vector<std::string>& vars,
           const std::string& checks, std::uint64_t seed, int samples,
           std::uint32_t coeff_bound) {
            AnalyzeOptions opt;
            opt.checks = parse_check_selection(checks);
            opt.plan = SectionPlan{samples, seed, coeff_bound};
            return report_json(analyze(poly, parse_poly(poly, vars), opt));
        },
        py::arg("poly"), py::arg("vars"), py::arg("checks") = "algebra", py::arg("seed") = 0,
        py::arg("samples") = 3, py::arg("coeff_bound") = 20,
        "full invariant report as canonical JSON; domain problems land in the status field");

    m.def(
        "newton_number",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            const NewtonResult nr = newton_number(parse_poly(poly, vars));
            std::vector<std::string> vols;
            vols.reserve(nr.volumes.size());
            for (const auto& v : nr.volumes) vols.push_back(rat_str(v));
            // via string, so arbitrarily large Newton numbers stay exact
            py::int_ nu = py::reinterpret_steal<py::int_>(
                PyLong_FromString(nr.nu.get_str().c_str(), nullptr, 10));
            return py::make_tuple(nu, vols);
        },
        py::arg("poly"), py::arg("vars"),
        "(nu, [V_1..V_n]) for a convenient germ; raises NotConvenientError otherwise");

    m.def(
        "oracle_truncated_dim",
        [](const std::vector<std::string>& polys, const std::vector<std::string>& vars,
           std::uint64_t degree) { return truncated_dim(parse_ideal(polys, vars), degree); },
        py::arg("polys"), py::arg("vars"), py::arg("degree"),
        "brute-force dim S/(I + m^degree), independent of the standard-basis engine");
}
