#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "mayer/beam.hpp"

using namespace mayer;
using doctest::Approx;

namespace {
const BeamParams kDefault = BeamParams::from_z0_k(50.0, 100.0);  // W0 = 1
const SlitConfig kTwoSlit{3.0, CurvatureFormula::Standard};
const SlitConfig kSingle{0.0, CurvatureFormula::Standard};
}  // namespace

TEST_CASE("factories agree on the coupled parameter") {
  const BeamParams a = BeamParams::from_w0_k(1.0, 100.0);
  const BeamParams b = BeamParams::from_z0_k(50.0, 100.0);
  const BeamParams c = BeamParams::from_w0_z0(1.0, 50.0);
  CHECK(a.z0 == Approx(50.0).epsilon(1e-14));
  CHECK(b.W0 == Approx(1.0).epsilon(1e-14));
  CHECK(c.k == Approx(100.0).epsilon(1e-14));
  CHECK(a.lambda == Approx(0.01).epsilon(1e-14));  // defaults to 1/k
}

TEST_CASE("beam_width") {
  CHECK(beam_width(0.0, kDefault) == Approx(kDefault.W0).epsilon(1e-15));
  CHECK(beam_width(kDefault.z0, kDefault) ==
        Approx(kDefault.W0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(beam_width(3.0 * kDefault.z0, kDefault) ==
        Approx(std::sqrt(10.0)).epsilon(1e-14));
}

TEST_CASE("inverse_curvature") {
  CHECK(inverse_curvature(0.0, kDefault, CurvatureFormula::Standard) == 0.0);
  CHECK(inverse_curvature(kDefault.z0, kDefault, CurvatureFormula::Standard) ==
        Approx(1.0 / (2.0 * kDefault.z0)).epsilon(1e-15));
  // both formulas coincide at z = z0
  CHECK(inverse_curvature(kDefault.z0, kDefault, CurvatureFormula::PaperLiteral) ==
        Approx(1.0 / (2.0 * kDefault.z0)).epsilon(1e-15));
  // continuity convention at the waist
  CHECK(inverse_curvature(0.0, kDefault, CurvatureFormula::PaperLiteral) == 0.0);
}

TEST_CASE("gouy_phase") {
  CHECK(gouy_phase(0.0, kDefault) == 0.0);
  CHECK(gouy_phase(kDefault.z0, kDefault) == Approx(M_PI / 4.0).epsilon(1e-15));
  CHECK(gouy_phase(1e9 * kDefault.z0, kDefault) == Approx(M_PI / 2.0).epsilon(1e-8));
  CHECK(gouy_phase(-kDefault.z0, kDefault) == Approx(-M_PI / 4.0).epsilon(1e-15));
}

TEST_CASE("slit_field symmetry and waist values") {
  for (double x : {0.3, -1.7, 4.2}) {
    for (double z : {0.0, 10.0, 130.0}) {
      const Complex l = slit_field(x, z, kDefault, kTwoSlit);
      const Complex r = slit_field(-x, z, kDefault, kTwoSlit);
      CHECK(std::abs(l - r) <= 1e-14 * std::max(1.0, std::abs(l)));
    }
  }
  const Complex on_axis = slit_field(0.0, 0.0, kDefault, kSingle);
  CHECK(on_axis.real() == Approx(2.0).epsilon(1e-15));
  CHECK(on_axis.imag() == Approx(0.0).epsilon(1e-15));

  const Complex sep = slit_field(0.0, 0.0, kDefault, kTwoSlit);
  CHECK(sep.real() == Approx(2.0 * std::exp(-9.0)).epsilon(1e-13));
  CHECK(sep.imag() == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("carrier_field is the slit field times a unimodular factor") {
  for (double x : {0.0, 1.1, -2.6}) {
    for (double z : {0.0, 7.5, 90.0}) {
      CHECK(std::abs(carrier_field(x, z, kDefault, kTwoSlit)) ==
            Approx(std::abs(slit_field(x, z, kDefault, kTwoSlit))).epsilon(1e-13));
    }
  }
  CHECK(std::abs(carrier_field(1.0, 0.0, kDefault, kTwoSlit) -
                 slit_field(1.0, 0.0, kDefault, kTwoSlit)) <= 1e-15);

  // z = pi/k flips the carrier sign
  const double z = M_PI / kDefault.k;
  const Complex c = carrier_field(0.0, z, kDefault, kSingle);
  const Complex v = slit_field(0.0, z, kDefault, kSingle);
  CHECK(std::abs(c + v) <= 1e-12 * std::abs(v));
}

TEST_CASE("madelung velocity on the symmetry axis") {
  const double h = default_fd_step(kDefault);
  const double floor = default_density_floor(kDefault, kTwoSlit);
  for (double z : {0.0, 12.0, 80.0}) {
    const MadelungSample m = madelung(0.0, z, kDefault, kTwoSlit, h, floor);
    REQUIRE(m.valid);
    CHECK(std::abs(m.vx) <= 1e-10);
  }
}

TEST_CASE("madelung at the single-beam waist center") {
  const double h = default_fd_step(kDefault);
  const MadelungSample m =
      madelung(0.0, 0.0, kDefault, kSingle, h, default_density_floor(kDefault, kSingle));
  REQUIRE(m.valid);
  CHECK(std::abs(m.vx) <= 1e-10);
  // lambda*k = 1 up to the Gouy-phase gradient lambda/z0 = 1/(k*z0)
  CHECK(m.vz == Approx(1.0).epsilon(2.0 / (kDefault.k * kDefault.z0) + 1e-6));
  CHECK(m.rho == Approx(4.0).epsilon(1e-10));  // both slit terms coincide at a = 0
}

TEST_CASE("madelung flags points below the density floor") {
  const double h = default_fd_step(kDefault);
  const double floor = default_density_floor(kDefault, kSingle);
  // rho = exp(-2*x^2/W0^2) ~ e^{-200} at x = 10, far below 1e-12
  const MadelungSample m = madelung(10.0, 0.0, kDefault, kSingle, h, floor);
  CHECK_FALSE(m.valid);
}

TEST_CASE("default step and floor") {
  CHECK(default_fd_step(kDefault) ==
        Approx(std::min(kDefault.W0, kDefault.lambda) / 100.0).epsilon(1e-15));
  // floor anchors at the slit-axis waist density
  const double rho_slit = std::norm(slit_field(3.0, 0.0, kDefault, kTwoSlit));
  CHECK(default_density_floor(kDefault, kTwoSlit) ==
        Approx(1e-12 * rho_slit).epsilon(1e-12));
}

TEST_CASE("invalid beam parameters throw") {
  CHECK_THROWS_AS(BeamParams::from_w0_k(-1.0, 100.0), ConfigError);
  CHECK_THROWS_AS(BeamParams::from_z0_k(50.0, 0.0), ConfigError);
}
