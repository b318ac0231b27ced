#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mayer/beam.hpp"
#include "mayer/current_inversion.hpp"
#include "mayer/fresnel.hpp"
#include "mayer/lattice.hpp"
#include "mayer/trajectory.hpp"
#include "mayer/variational.hpp"

namespace py = pybind11;
using namespace mayer;

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-slit beam, Bohmian trajectories, lattice field checks";

  py::register_exception<Error>(m, "MayerError");

  py::class_<BeamParams>(m, "BeamParams")
      .def_static("from_w0_k", &BeamParams::from_w0_k, py::arg("W0"), py::arg("k"),
                  py::arg("lam") = 0.0)
      .def_static("from_z0_k", &BeamParams::from_z0_k, py::arg("z0"), py::arg("k"),
                  py::arg("lam") = 0.0)
      .def_readonly("W0", &BeamParams::W0)
      .def_readonly("z0", &BeamParams::z0)
      .def_readonly("k", &BeamParams::k)
      .def_readonly("lam", &BeamParams::lambda);

  py::enum_<CurvatureFormula>(m, "CurvatureFormula")
      .value("Standard", CurvatureFormula::Standard)
      .value("PaperLiteral", CurvatureFormula::PaperLiteral);

  py::class_<SlitConfig>(m, "SlitConfig")
      .def(py::init([](double a, CurvatureFormula f) {
             return SlitConfig{a, f};
           }),
           py::arg("a"), py::arg("curvature") = CurvatureFormula::Standard)
      .def_readwrite("a", &SlitConfig::a);

  py::class_<MadelungSample>(m, "MadelungSample")
      .def_readonly("rho", &MadelungSample::rho)
      .def_readonly("vx", &MadelungSample::vx)
      .def_readonly("vz", &MadelungSample::vz)
      .def_readonly("valid", &MadelungSample::valid);

  m.def("beam_width", &beam_width);
  m.def("gouy_phase", &gouy_phase);
  m.def("inverse_curvature", &inverse_curvature);
  m.def("slit_field", &slit_field);
  m.def("carrier_field", &carrier_field);
  m.def("madelung", &madelung, py::arg("x"), py::arg("z"), py::arg("p"),
        py::arg("s"), py::arg("h_fd"), py::arg("floor"));
  m.def("default_fd_step", &default_fd_step);
  m.def("default_density_floor", &default_density_floor);

  py::enum_<Termination>(m, "Termination")
      .value("ReachedScreen", Termination::ReachedScreen)
      .value("LeftDomain", Termination::LeftDomain)
      .value("DensityFloor", Termination::DensityFloor)
      .value("MaxSteps", Termination::MaxSteps);

  py::class_<TrajPoint>(m, "TrajPoint")
      .def_readonly("x", &TrajPoint::x)
      .def_readonly("z", &TrajPoint::z);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("points", &Trajectory::points)
      .def_readonly("weight", &Trajectory::weight)
      .def_readonly("terminated_by", &Trajectory::terminated_by);

  py::class_<IntegratorConfig>(m, "IntegratorConfig")
      .def(py::init<>())
      .def_readwrite("dz", &IntegratorConfig::dz)
      .def_readwrite("z_screen", &IntegratorConfig::z_screen)
      .def_readwrite("x_bounds", &IntegratorConfig::x_bounds)
      .def_readwrite("max_steps", &IntegratorConfig::max_steps)
      .def_readwrite("vz_min", &IntegratorConfig::vz_min);

  m.def("integrate_bohmian",
        [](double seed_x, double z_start, const BeamParams& p, const SlitConfig& s,
           const IntegratorConfig& cfg) {
          const VelocityField f = make_beam_velocity_field(
              p, s, default_fd_step(p), default_density_floor(p, s));
          return integrate_bohmian(seed_x, z_start, f, cfg);
        },
        py::arg("seed_x"), py::arg("z_start"), py::arg("p"), py::arg("s"),
        py::arg("cfg"));
  m.def("seed_uniform", &seed_uniform);

  py::class_<TransverseField>(m, "TransverseField")
      .def(py::init<>())
      .def_readwrite("samples", &TransverseField::samples)
      .def_readwrite("hx", &TransverseField::hx)
      .def_readwrite("x0", &TransverseField::x0)
      .def_readwrite("k", &TransverseField::k)
      .def("x", &TransverseField::x);
  m.def("fresnel_propagate", &propagate, py::arg("field"), py::arg("z"));

  py::class_<Lattice4>(m, "Lattice4")
      .def(py::init<std::array<std::size_t, 4>, std::array<double, 4>,
                    std::array<bool, 4>, std::array<double, 4>>(),
           py::arg("n"), py::arg("h"),
           py::arg("periodic") = std::array<bool, 4>{false, false, false, false},
           py::arg("origin") = std::array<double, 4>{0.0, 0.0, 0.0, 0.0});

  py::class_<VecFieldLattice>(m, "VecFieldLattice");

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("rms", &ResidualReport::rms)
      .def_readonly("max_abs", &ResidualReport::max_abs)
      .def_readonly("interior_count", &ResidualReport::interior_count);

  py::class_<KappaEstimate>(m, "KappaEstimate")
      .def_readonly("value", &KappaEstimate::value)
      .def_readonly("numerator", &KappaEstimate::numerator)
      .def_readonly("denominator", &KappaEstimate::denominator);

  m.def("make_plane_wave", &make_plane_wave);
  m.def("wave_norm", &wave_norm);
  m.def("proca_residual", &proca_residual);
  m.def("wave_residual", &wave_residual);
  m.def("divergence_report",
        [](const VecFieldLattice& pi) { return residual_report(divergence(pi)); });
  m.def("kappa_k1", &kappa_k1);
  m.def("kappa_k2", &kappa_k2, py::arg("pi"), py::arg("div_tol") = 1e-9);

  py::class_<CurrentSample>(m, "CurrentSample")
      .def(py::init([](Vec4 pi, double n0c) {
             return CurrentSample{pi, n0c};
           }),
           py::arg("pi"), py::arg("n0c") = 1.0);
  py::class_<DetPair>(m, "DetPair")
      .def_readonly("numeric", &DetPair::numeric)
      .def_readonly("closed_form", &DetPair::closed_form);
  py::class_<RecoveredVelocity>(m, "RecoveredVelocity")
      .def_readonly("v", &RecoveredVelocity::v)
      .def_readonly("rho", &RecoveredVelocity::rho);
  m.def("det_M", &det_M);
  m.def("recover_velocity", &recover_velocity, py::arg("sample"), py::arg("s"),
        py::arg("tol") = 1e-9);
}
