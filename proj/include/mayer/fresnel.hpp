#pragma once

#include <complex>
#include <vector>

#include "mayer/errors.hpp"

namespace mayer {

/// Complex field sampled on a uniform transverse x-grid at a fixed z plane.
struct TransverseField {
  std::vector<std::complex<double>> samples;
  double hx = 0.0;
  double x0 = 0.0;  // coordinate of samples[0]
  double k = 0.0;

  double x(std::size_t i) const { return x0 + hx * double(i); }
};

/// 1D paraxial Green function
///   G(dx, z) = sqrt(k/(2*pi*z)) * exp(i*(k*dx^2/(2*z) - pi/4))
std::complex<double> fresnel_kernel(double dx, double z, double k);

/// Propagate by distance z > 0 with direct trapezoid quadrature of the
/// kernel convolution, times exp(i*k*z). The input window must be wide
/// enough that the edge amplitude is below 1e-6 of the peak.
TransverseField propagate(const TransverseField& field, double z);

}  // namespace mayer
