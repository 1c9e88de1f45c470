#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxspec/bounds.hpp"
#include "boxspec/cuboid.hpp"
#include "boxspec/error.hpp"
#include "boxspec/lattice.hpp"
#include "boxspec/numfmt.hpp"
#include "boxspec/optimizer.hpp"
#include "boxspec/report.hpp"
#include "boxspec/spectrum.hpp"
#include "boxspec/verify.hpp"

namespace py = pybind11;
using namespace boxspec;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet spectra of unit-volume boxes";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
  py::register_exception<InsufficientData>(m, "InsufficientData", error.ptr());

  py::class_<Cuboid>(m, "Cuboid")
      .def_static("from_sides", &Cuboid::from_sides, py::arg("a1"), py::arg("a2"))
      .def_static("from_three_sides", &Cuboid::from_three_sides, py::arg("a1"), py::arg("a2"), py::arg("a3"))
      .def_static("unit_cube", &Cuboid::unit_cube)
      .def_property_readonly("a1", &Cuboid::a1)
      .def_property_readonly("a2", &Cuboid::a2)
      .def_property_readonly("a3", &Cuboid::a3)
      .def_property_readonly("sides", [](const Cuboid& c) { return c.sides(); })
      .def("volume", &Cuboid::volume)
      .def("is_unit_cube", &Cuboid::is_unit_cube)
      .def("__eq__", [](const Cuboid& a, const Cuboid& b) { return a == b; })
      .def("__repr__", [](const Cuboid& c) {
        return "Cuboid(" + format_real(c.a1()) + ", " + format_real(c.a2()) + ", " + format_real(c.a3()) + ")";
      });

  py::class_<SpectralPoint>(m, "SpectralPoint")
      .def_readonly("value", &SpectralPoint::value)
      .def_readonly("indices", &SpectralPoint::indices)
      .def_property_readonly("multiplicity", &SpectralPoint::multiplicity);

  m.def("eigenvalue_of_index", &eigenvalue_of_index, py::arg("box"), py::arg("i"), py::arg("j"), py::arg("l"));
  m.def("count_upto", &count_upto, py::arg("box"), py::arg("lam"));
  m.def("kth_eigenvalue", [](const Cuboid& b, std::int64_t k) { return kth_eigenvalue(b, k); }, py::arg("box"),
        py::arg("k"));
  m.def("lowest_eigenvalues", [](const Cuboid& b, std::int64_t k) { return lowest_eigenvalues(b, k); },
        py::arg("box"), py::arg("k"));
  m.def("cube_upper_bound", &cube_upper_bound, py::arg("k"));

  py::class_<CountBundle>(m, "CountBundle")
      .def_readonly("lam", &CountBundle::lambda)
      .def_readonly("N", &CountBundle::N)
      .def_readonly("T", &CountBundle::T)
      .def_readonly("T_plane", &CountBundle::T_plane)
      .def_readonly("T_plane_pos", &CountBundle::T_plane_pos)
      .def_readonly("floors", &CountBundle::floors)
      .def("consistent", &CountBundle::consistent);

  m.def("count_bundle", &count_bundle, py::arg("box"), py::arg("lam"));
  m.def("count_full", &count_full, py::arg("box"), py::arg("lam"));
  m.def("gauss_sphere_count", &gauss_sphere_count, py::arg("radius"));
  m.def("gauss_circle_count", &gauss_circle_count, py::arg("radius"));
  m.def("r2", &r2, py::arg("n"));
  m.def("r3", &r3, py::arg("d"));
  m.def("divisor_count", &divisor_count, py::arg("n"));
  m.def("cube_multiplicity", &cube_multiplicity, py::arg("m"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("name", &BoundReport::name)
      .def_readonly("inputs", &BoundReport::inputs)
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("rhs", &BoundReport::rhs)
      .def_readonly("slack", &BoundReport::slack)
      .def_readonly("passed", &BoundReport::pass);

  m.def("a1_lower_bound", &a1_lower_bound);
  m.def("a3_upper_bound", &a3_upper_bound);
  m.def("polya_lower_bound", &polya_lower_bound, py::arg("k"));

  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init<>())
      .def_readwrite("grid", &OptimizerConfig::grid)
      .def_readwrite("basins", &OptimizerConfig::basins)
      .def_readwrite("max_iter", &OptimizerConfig::max_iter)
      .def_readwrite("side_tol", &OptimizerConfig::side_tol)
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("random_starts", &OptimizerConfig::random_starts)
      .def_readwrite("seed", &OptimizerConfig::seed)
      .def_readwrite("threads", &OptimizerConfig::threads);

  py::class_<OptimalRecord>(m, "OptimalRecord")
      .def_readonly("k", &OptimalRecord::k)
      .def_readonly("cuboid", &OptimalRecord::cuboid)
      .def_readonly("lambda_star", &OptimalRecord::lambda_star)
      .def_readonly("delta", &OptimalRecord::delta)
      .def_readonly("evaluations", &OptimalRecord::evaluations)
      .def_readonly("restarts_agreeing", &OptimalRecord::restarts_agreeing)
      .def_readonly("unique_within_tol", &OptimalRecord::unique_within_tol)
      .def_readonly("status", &OptimalRecord::status)
      .def("converged", &OptimalRecord::converged)
      .def("to_csv_row", [](const OptimalRecord& r) { return to_csv_row(r); });

  m.def("objective", [](std::int64_t k, double a1, double a2) { return objective(k, a1, a2); }, py::arg("k"),
        py::arg("a1"), py::arg("a2"));
  m.def("optimize_k", &optimize_k, py::arg("k"), py::arg("config") = OptimizerConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep", [](const std::vector<std::int64_t>& ks, const OptimizerConfig& c) { return sweep(ks, c); },
      py::arg("ks"), py::arg("config") = OptimizerConfig{}, py::call_guard<py::gil_scoped_release>());
  m.def("dyadic_ks", &dyadic_ks, py::arg("k_min"), py::arg("k_max"));
  m.def("optimize_csv_header", &optimize_csv_header);

  py::class_<VerifyRow>(m, "VerifyRow")
      .def_readonly("suite", &VerifyRow::suite)
      .def_readonly("report", &VerifyRow::report);

  m.def(
      "run_verify",
      [](const std::string& suite, std::int64_t samples, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.suite = parse_suite(suite);
        cfg.samples = samples;
        cfg.seed = seed;
        const VerifyResult r = run_verify(cfg);
        return py::make_tuple(r.rows, r.failures);
      },
      py::arg("suite") = "all", py::arg("samples") = 1000, py::arg("seed") = 0);
}
