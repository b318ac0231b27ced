#include "mayer/beam.hpp"

#include <cmath>

namespace mayer {

namespace {

void check_consistency(const BeamParams& p) {
  if (!(p.W0 > 0.0) || !(p.z0 > 0.0) || !(p.k > 0.0) || !(p.lambda > 0.0))
    throw ConfigError("BeamParams: W0, z0, k, lambda must all be positive");
  const double w0_derived = std::sqrt(2.0 * p.z0 / p.k);
  if (std::abs(p.W0 - w0_derived) / p.W0 > 1e-12)
    throw ConfigError("BeamParams: W0, z0, k violate W0 = sqrt(2*z0/k)");
}

BeamParams finish(BeamParams p, double lambda) {
  p.lambda = (lambda > 0.0) ? lambda : 1.0 / p.k;
  check_consistency(p);
  return p;
}

}  // namespace

BeamParams BeamParams::from_w0_k(double W0, double k, double lambda) {
  BeamParams p{W0, 0.5 * W0 * W0 * k, k, 0.0};
  return finish(p, lambda);
}

BeamParams BeamParams::from_z0_k(double z0, double k, double lambda) {
  BeamParams p{std::sqrt(2.0 * z0 / k), z0, k, 0.0};
  return finish(p, lambda);
}

BeamParams BeamParams::from_w0_z0(double W0, double z0, double lambda) {
  BeamParams p{W0, z0, 2.0 * z0 / (W0 * W0), 0.0};
  return finish(p, lambda);
}

double beam_width(double z, const BeamParams& p) {
  const double t = z / p.z0;
  return p.W0 * std::sqrt(1.0 + t * t);
}

double inverse_curvature(double z, const BeamParams& p, CurvatureFormula f) {
  switch (f) {
    case CurvatureFormula::Standard:
      return z / (z * z + p.z0 * p.z0);
    case CurvatureFormula::PaperLiteral:
      if (z == 0.0) return 0.0;
      return 1.0 / (z * (1.0 + (z / p.z0) * (z / p.z0)));
  }
  return 0.0;
}

double gouy_phase(double z, const BeamParams& p) {
  return std::atan(z / p.z0);
}

Complex gaussian_beam_term(double x, double z, double xc, const BeamParams& p,
                           CurvatureFormula f) {
  const double W = beam_width(z, p);
  const double C = inverse_curvature(z, p, f);
  const double zeta = gouy_phase(z, p);
  const double dx = x - xc;
  const double amp = (p.W0 / W) * std::exp(-dx * dx / (W * W));
  const double phase = 0.5 * p.k * dx * dx * C - zeta;
  return std::polar(amp, phase);
}

Complex slit_field(double x, double z, const BeamParams& p, const SlitConfig& s) {
  return gaussian_beam_term(x, z, s.a, p, s.curvature_formula) +
         gaussian_beam_term(x, z, -s.a, p, s.curvature_formula);
}

Complex carrier_field(double x, double z, const BeamParams& p, const SlitConfig& s) {
  return slit_field(x, z, p, s) * std::polar(1.0, p.k * z);
}

double default_fd_step(const BeamParams& p) {
  return std::min(p.W0, p.lambda) / 100.0;
}

double default_density_floor(const BeamParams& p, const SlitConfig& s) {
  const double rho_peak = std::norm(slit_field(s.a, 0.0, p, s));
  return 1e-12 * rho_peak;
}

MadelungSample madelung(double x, double z, const BeamParams& p, const SlitConfig& s,
                        double h_fd, double floor) {
  if (!(h_fd > 0.0)) throw ConfigError("madelung: h_fd must be positive");
  if (floor < 0.0) throw ConfigError("madelung: floor must be nonnegative");

  MadelungSample out;
  const Complex u = carrier_field(x, z, p, s);
  out.rho = std::norm(u);
  if (out.rho < floor) return out;  // valid stays false, velocities NaN

  const Complex dux =
      (carrier_field(x + h_fd, z, p, s) - carrier_field(x - h_fd, z, p, s)) /
      (2.0 * h_fd);
  const Complex duz =
      (carrier_field(x, z + h_fd, p, s) - carrier_field(x, z - h_fd, p, s)) /
      (2.0 * h_fd);

  out.vx = p.lambda * std::imag(std::conj(u) * dux) / out.rho;
  out.vz = p.lambda * std::imag(std::conj(u) * duz) / out.rho;
  out.valid = true;
  return out;
}

}  // namespace mayer
