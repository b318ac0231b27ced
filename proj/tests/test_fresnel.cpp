#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "mayer/beam.hpp"
#include "mayer/fresnel.hpp"

using namespace mayer;
using doctest::Approx;

namespace {

const BeamParams kBeam = BeamParams::from_z0_k(50.0, 100.0);  // W0 = 1

TransverseField sampled(std::size_t n, double half_window, double k,
                        const std::function<std::complex<double>(double)>& f) {
  TransverseField fld;
  fld.k = k;
  fld.hx = 2.0 * half_window / double(n - 1);
  fld.x0 = -half_window;
  fld.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) fld.samples[i] = f(fld.x(i));
  return fld;
}

double half_width_e2(const TransverseField& f) {
  std::size_t ipk = 0;
  double peak = 0.0;
  for (std::size_t i = 0; i < f.samples.size(); ++i)
    if (std::norm(f.samples[i]) > peak) {
      peak = std::norm(f.samples[i]);
      ipk = i;
    }
  const double thresh = peak / (M_E * M_E);
  for (std::size_t i = ipk; i + 1 < f.samples.size(); ++i) {
    const double a = std::norm(f.samples[i]), b = std::norm(f.samples[i + 1]);
    if (a >= thresh && b < thresh)
      return f.x(i) + (a - thresh) / (a - b) * f.hx - f.x(ipk);
  }
  return 0.0;
}

}  // namespace

TEST_CASE("kernel modulus and on-axis phase") {
  const double k = 100.0, z = 7.0;
  const double mod = std::sqrt(k / (2.0 * M_PI * z));
  for (double dx : {0.0, 0.3, -2.7}) {
    CHECK(std::abs(fresnel_kernel(dx, z, k)) == Approx(mod).epsilon(1e-14));
  }
  CHECK(std::arg(fresnel_kernel(0.0, z, k)) == Approx(-M_PI / 4.0).epsilon(1e-14));
  CHECK_THROWS_AS(fresnel_kernel(0.0, 0.0, k), NonpositiveDistance);
}

TEST_CASE("kernel integrates to unit modulus over a wide window") {
  const double k = 100.0, z = 10.0;
  // the truncated Fresnel integral oscillates toward 1 like the Fresnel
  // cornu spiral; a 120 sqrt(z/k) window brings it within ~1.5 percent
  const double half = 60.0 * std::sqrt(z / k);
  const std::size_t n = 120001;
  const double h = 2.0 * half / double(n - 1);
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * fresnel_kernel(-half + h * double(i), z, k) * h;
  }
  CHECK(std::abs(sum) == Approx(1.0).epsilon(0.015));
}

TEST_CASE("Gaussian waist propagates to the analytic width") {
  const TransverseField in = sampled(4096, 20.0, kBeam.k, [](double x) {
    return std::exp(-x * x);
  });
  const TransverseField out = propagate(in, kBeam.z0);
  CHECK(half_width_e2(out) ==
        Approx(kBeam.W0 * std::sqrt(2.0)).epsilon(0.005));
}

TEST_CASE("semigroup property") {
  const TransverseField in = sampled(4096, 20.0, kBeam.k, [](double x) {
    return std::exp(-x * x);
  });
  const TransverseField two = propagate(propagate(in, 25.0), 25.0);
  const TransverseField one = propagate(in, 50.0);
  double peak = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < one.samples.size(); ++i) {
    peak = std::max(peak, std::abs(one.samples[i]));
    diff = std::max(diff, std::abs(one.samples[i] - two.samples[i]));
  }
  CHECK(diff / peak <= 1e-6);
}

TEST_CASE("two-slit far-field fringe period") {
  const double a = 3.0;
  const SlitConfig s{a, CurvatureFormula::Standard};
  const TransverseField in = sampled(8192, 25.0, kBeam.k, [&](double x) {
    return slit_field(x, 0.0, kBeam, s);
  });
  const double z = 10.0 * kBeam.z0;
  const TransverseField out = propagate(in, z);

  // measure between the central dark fringes: the minima sit where the two
  // slit phases are opposite, so unlike the maxima they are not displaced by
  // the Gaussian envelope gradient
  const double period = M_PI * z / (kBeam.k * a);
  std::vector<double> minima;
  for (std::size_t i = 1; i + 1 < out.samples.size(); ++i) {
    const double c = std::norm(out.samples[i]);
    if (std::abs(out.x(i)) > 2.6 * period) continue;
    if (c < std::norm(out.samples[i - 1]) && c < std::norm(out.samples[i + 1]))
      minima.push_back(out.x(i));
  }
  REQUIRE(minima.size() >= 3);
  std::vector<double> gaps;
  for (std::size_t i = 1; i < minima.size(); ++i)
    gaps.push_back(minima[i] - minima[i - 1]);
  std::sort(gaps.begin(), gaps.end());
  const double measured = gaps[gaps.size() / 2];
  CHECK(measured == Approx(period).epsilon(0.02));
}

TEST_CASE("narrow window is rejected") {
  const TransverseField flat = sampled(512, 3.0, kBeam.k, [](double) {
    return std::complex<double>(1.0, 0.0);
  });
  CHECK_THROWS_AS(propagate(flat, 10.0), WindowTooNarrow);

  const TransverseField in = sampled(512, 20.0, kBeam.k, [](double x) {
    return std::exp(-x * x);
  });
  CHECK_THROWS_AS(propagate(in, -1.0), NonpositiveDistance);
}
