#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mkdvb/equation.hpp"
#include "mkdvb/errors.hpp"
#include "mkdvb/functionals.hpp"
#include "mkdvb/grid.hpp"
#include "mkdvb/harness.hpp"
#include "mkdvb/profiles.hpp"
#include "mkdvb/resonance.hpp"

namespace py = pybind11;
using namespace mkdvb;

namespace {

RealField field_from_array(const PeriodicGrid& grid, py::array_t<double> samples) {
    auto buf = samples.request();
    if (buf.ndim != 1 || buf.shape[0] != grid.n)
        throw ParameterError("samples must be a 1-d array of length grid.n");
    const double* p = static_cast<const double*>(buf.ptr);
    return RealField{grid, std::vector<double>(p, p + grid.n)};
}

py::array_t<double> array_from_vector(const std::vector<double>& v) {
    // Shape + strides + pointer (no base handle) makes an owning copy.
    return py::array_t<double>({static_cast<py::ssize_t>(v.size())},
                               {static_cast<py::ssize_t>(sizeof(double))}, v.data());
}

py::array_t<double> array_from_field(const RealField& u) {
    return array_from_vector(u.samples);
}

} // namespace

PYBIND11_MODULE(_mkdvb, m) {
    m.doc() = "pseudospectral laboratory for the (M)KdV-Burgers family";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);
    py::register_exception<BlowUpError>(m, "BlowUpError", PyExc_RuntimeError);

    py::class_<PeriodicGrid>(m, "PeriodicGrid")
        .def_readonly("length", &PeriodicGrid::length)
        .def_readonly("n", &PeriodicGrid::n)
        .def("dx", &PeriodicGrid::dx)
        .def("x", &PeriodicGrid::x)
        .def("xi", &PeriodicGrid::xi);
    m.def("make_grid", &make_grid, py::arg("length"), py::arg("n"));

    m.def(
        "make_profile",
        [](const PeriodicGrid& grid, const std::string& profile, double amplitude,
           double width, int mode, int band, std::uint64_t seed) {
            DataSpec spec{profile, amplitude, width, mode, band, seed};
            return array_from_field(make_profile(grid, spec));
        },
        py::arg("grid"), py::arg("profile") = "gaussian", py::arg("amplitude") = 0.5,
        py::arg("width") = 2.0, py::arg("mode") = 1, py::arg("band") = 8,
        py::arg("seed") = 0);

    m.def(
        "sobolev_norm",
        [](const PeriodicGrid& grid, py::array_t<double> u, double sigma) {
            return sobolev_norm(forward_transform(field_from_array(grid, u)), sigma);
        },
        py::arg("grid"), py::arg("samples"), py::arg("sigma"));

    m.def(
        "evolve",
        [](const PeriodicGrid& grid, py::array_t<double> phi, const std::string& family,
           double eps, double alpha, double T, double dt, int record_every) {
            SolverConfig cfg;
            cfg.dt = dt;
            cfg.record_every = record_every;
            Trajectory traj = evolve(field_from_array(grid, phi),
                                     EquationSpec::make(family_from_name(family), eps, alpha),
                                     T, cfg);
            py::array_t<double> fields({traj.fields.size(), static_cast<size_t>(grid.n)});
            auto f = fields.mutable_unchecked<2>();
            for (size_t i = 0; i < traj.fields.size(); ++i)
                for (int j = 0; j < grid.n; ++j) f(i, j) = traj.fields[i].samples[j];
            return py::make_tuple(array_from_vector(traj.times), fields);
        },
        py::arg("grid"), py::arg("phi"), py::arg("family") = "mkdv", py::arg("eps") = 0.0,
        py::arg("alpha") = 1.0, py::arg("T") = 1.0, py::arg("dt") = 0.0,
        py::arg("record_every") = 1,
        "Integrate and return (times, fields) with one row per snapshot.");

    for (auto [name, fn] : std::initializer_list<
             std::pair<const char*, double (*)(const RealField&)>>{
             {"h1_mkdv", &h1_mkdv}, {"h1_kdv", &h1_kdv}, {"h2_mkdv", &h2_mkdv},
             {"h2p_mkdv", &h2p_mkdv}})
        m.def(name,
              [fn](const PeriodicGrid& grid, py::array_t<double> u) {
                  return fn(field_from_array(grid, u));
              },
              py::arg("grid"), py::arg("samples"));

    m.def(
        "miura_transform",
        [](const PeriodicGrid& grid, py::array_t<double> v) {
            return array_from_field(miura_transform(field_from_array(grid, v)));
        },
        py::arg("grid"), py::arg("samples"));

    m.def("resonance",
          [](double x1, double x2, double x3) { return resonance(x1, x2, x3).direct; },
          py::arg("xi1"), py::arg("xi2"), py::arg("xi3"));
    m.def("critical_regularity", &critical_regularity, py::arg("alpha"));

    m.def(
        "scaling_check",
        [](const PeriodicGrid& grid, py::array_t<double> phi, double lam, double eps,
           double alpha, double T, double dt) {
            SolverConfig cfg;
            cfg.dt = dt;
            return scaling_check(field_from_array(grid, phi), lam, eps, alpha, T, cfg);
        },
        py::arg("grid"), py::arg("phi"), py::arg("lam"), py::arg("eps"), py::arg("alpha"),
        py::arg("T"), py::arg("dt") = 0.0);

    m.def(
        "run_experiment",
        [](const std::string& config_json, const std::string& out_dir) {
            ExperimentConfig cfg = parse_config(config_json);
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            RunReport report = run(cfg);
            std::vector<std::string> written = emit_tables(report, cfg.out_dir);
            return py::make_tuple(report.status, written);
        },
        py::arg("config_json"), py::arg("out_dir") = "",
        "Run a configured experiment; returns (status, written file paths).");
}
