#include "mayer/fresnel.hpp"

#include <cmath>

namespace mayer {

std::complex<double> fresnel_kernel(double dx, double z, double k) {
  if (!(z > 0.0)) throw NonpositiveDistance("fresnel_kernel: z must be positive");
  const double amp = std::sqrt(k / (2.0 * M_PI * z));
  const double phase = 0.5 * k * dx * dx / z - 0.25 * M_PI;
  return std::polar(amp, phase);
}

TransverseField propagate(const TransverseField& field, double z) {
  if (!(z > 0.0)) throw NonpositiveDistance("propagate: z must be positive");
  const std::size_t n = field.samples.size();
  if (n < 16) throw ConfigError("propagate: need at least 16 samples");
  if (!(field.hx > 0.0)) throw ConfigError("propagate: hx must be positive");

  double peak = 0.0;
  for (const auto& s : field.samples) peak = std::max(peak, std::abs(s));
  const double edge = std::max(std::abs(field.samples.front()),
                               std::abs(field.samples.back()));
  if (peak > 0.0 && edge > 1e-6 * peak)
    throw WindowTooNarrow("propagate: edge amplitude above 1e-6 of peak");

  // kernel depends only on the sample offset; precompute the 2n-1 values
  std::vector<std::complex<double>> kern(2 * n - 1);
  for (std::size_t m = 0; m < 2 * n - 1; ++m) {
    const double dx = (double(m) - double(n - 1)) * field.hx;
    kern[m] = fresnel_kernel(dx, z, field.k);
  }

  const std::complex<double> carrier = std::polar(1.0, field.k * z);
  TransverseField out;
  out.hx = field.hx;
  out.x0 = field.x0;
  out.k = field.k;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> acc = 0.0;
    // trapezoid rule: half weight on the window endpoints
    for (std::size_t j = 0; j < n; ++j) {
      const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      acc += w * kern[i + (n - 1) - j] * field.samples[j];
    }
    out.samples[i] = carrier * acc * field.hx;
  }
  return out;
}

}  // namespace mayer
