#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "mayer/errors.hpp"

namespace mayer {

using Complex = std::complex<double>;

enum class CurvatureFormula { Standard, PaperLiteral };

/// Gaussian-beam parameters. Lengths are measured in whatever unit the
/// caller chooses; the library default elsewhere is units of W0 with c = 1.
/// The three quantities are coupled by W0 = sqrt(2*z0/k); the factory
/// functions take two of them and derive the third.
struct BeamParams {
  double W0;      // waist radius
  double z0;      // Rayleigh range
  double k;       // wavenumber
  double lambda;  // phase length scale, defaults to 1/k

  static BeamParams from_w0_k(double W0, double k, double lambda = 0.0);
  static BeamParams from_z0_k(double z0, double k, double lambda = 0.0);
  static BeamParams from_w0_z0(double W0, double z0, double lambda = 0.0);
};

struct SlitConfig {
  double a = 0.0;  // slit half-separation; slit centers sit at x = +-a
  CurvatureFormula curvature_formula = CurvatureFormula::Standard;
};

struct MadelungSample {
  double rho = 0.0;
  double vx = std::numeric_limits<double>::quiet_NaN();
  double vz = std::numeric_limits<double>::quiet_NaN();
  bool valid = false;
};

/// W(z) = W0*sqrt(1 + z^2/z0^2)
double beam_width(double z, const BeamParams& p);

/// Inverse wavefront curvature C(z) = 1/R(z), finite at z = 0.
/// Standard:     C(z) = z/(z^2 + z0^2)
/// PaperLiteral: C(z) = 1/(z*(1 + z^2/z0^2)), with C(0) = 0 by the
///               continuity convention (the formula itself is singular there).
double inverse_curvature(double z, const BeamParams& p, CurvatureFormula f);

/// zeta(z) = atan(z/z0), odd, in (-pi/2, pi/2)
double gouy_phase(double z, const BeamParams& p);

/// Single Gaussian-beam envelope term centered at x = xc:
///   (W0/W) * exp(-(x-xc)^2/W^2) * exp(i*(k*(x-xc)^2*C/2 - zeta))
Complex gaussian_beam_term(double x, double z, double xc, const BeamParams& p,
                           CurvatureFormula f);

/// Two-slit transverse field v(x,z): sum of the beam terms centered at +-a.
Complex slit_field(double x, double z, const BeamParams& p, const SlitConfig& s);

/// v(x,z)*exp(i*k*z). The time factor exp(-i*omega*t) is dropped; it
/// contributes nothing to rho or to spatial phase gradients.
Complex carrier_field(double x, double z, const BeamParams& p, const SlitConfig& s);

/// Default finite-difference step: min(W0, lambda)/100.
double default_fd_step(const BeamParams& p);

/// Default density floor: 1e-12 times the waist density on a slit axis
/// (x = a, z = 0), i.e. relative to the peak of the field, not to the
/// midpoint between the slits.
double default_density_floor(const BeamParams& p, const SlitConfig& s);

/// Density and planar velocity at (x,z).
/// rho = |u|^2 and v_i = lambda*Im(conj(u)*d_i u)/|u|^2 with d_i u taken by
/// central differences of step h_fd on carrier_field. This equals d_i S~
/// wherever u != 0 and needs no phase unwrapping. Points with rho < floor
/// come back with valid = false.
MadelungSample madelung(double x, double z, const BeamParams& p, const SlitConfig& s,
                        double h_fd, double floor);

}  // namespace mayer
