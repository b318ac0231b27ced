#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mayer/beam.hpp"
#include "mayer/trajectory.hpp"

using namespace mayer;
using doctest::Approx;

namespace {

const BeamParams kBeam = BeamParams::from_z0_k(50.0, 100.0);

VelocityField two_slit_field(double a) {
  const SlitConfig s{a, CurvatureFormula::Standard};
  return make_beam_velocity_field(kBeam, s, default_fd_step(kBeam),
                                  default_density_floor(kBeam, s));
}

IntegratorConfig fast_cfg() {
  IntegratorConfig c;
  c.dz = 0.05;
  c.z_screen = 100.0;
  c.x_bounds = 15.0;
  return c;
}

}  // namespace

TEST_CASE("seed_uniform") {
  CHECK(seed_uniform(1, -2.0, 4.0) == std::vector<double>{1.0});
  const auto three = seed_uniform(3, -1.0, 1.0);
  CHECK(three == std::vector<double>{-1.0, 0.0, 1.0});
  const auto five = seed_uniform(5, 0.0, 1.0);
  for (std::size_t i = 1; i < 5; ++i)
    CHECK(five[i] - five[i - 1] == Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(seed_uniform(0, 0.0, 1.0), ConfigError);
}

TEST_CASE("seed_density_sampled statistics and determinism") {
  const std::size_t n = 20000;
  const auto flat = seed_density_sampled(n, -1.0, 1.0,
                                         [](double) { return 1.0; }, 7);
  const double mean_flat =
      std::accumulate(flat.begin(), flat.end(), 0.0) / double(n);
  // uniform on [-1,1]: sigma = 2/sqrt(12)
  CHECK(std::abs(mean_flat) <= 3.0 * (2.0 / std::sqrt(12.0)) / std::sqrt(double(n)));

  const double mu = 0.4, sigma = 0.2;
  const auto gauss = seed_density_sampled(
      n, -1.0, 2.0,
      [&](double x) { return std::exp(-(x - mu) * (x - mu) / (2 * sigma * sigma)); },
      11);
  const double mean_g =
      std::accumulate(gauss.begin(), gauss.end(), 0.0) / double(n);
  CHECK(std::abs(mean_g - mu) <= 3.0 * sigma / std::sqrt(double(n)));

  const auto again = seed_density_sampled(n, -1.0, 2.0,
      [&](double x) { return std::exp(-(x - mu) * (x - mu) / (2 * sigma * sigma)); },
      11);
  CHECK(gauss == again);

  CHECK_THROWS_AS(
      seed_density_sampled(10, 0.0, 1.0, [](double) { return 0.0; }, 1),
      ZeroDensityRange);
}

TEST_CASE("landing_histogram") {
  std::vector<Trajectory> trajs(6);
  for (auto& t : trajs) {
    t.points = {{0.0, 0.0}, {0.0, 1.0}};
    t.terminated_by = Termination::ReachedScreen;
  }
  CHECK(landing_histogram(trajs, 3, -1.0, 1.0) ==
        std::vector<std::size_t>{0, 6, 0});

  // mirror-symmetric landings give a symmetric histogram
  std::vector<Trajectory> mirror;
  for (double x : {-0.8, -0.3, 0.3, 0.8}) {
    Trajectory t;
    t.points = {{x, 1.0}};
    t.terminated_by = Termination::ReachedScreen;
    mirror.push_back(t);
  }
  const auto h = landing_histogram(mirror, 4, -1.0, 1.0);
  CHECK(h[0] == h[3]);
  CHECK(h[1] == h[2]);
}

TEST_CASE("on-axis trajectory of the single beam stays on axis") {
  const Trajectory t = integrate_bohmian(0.0, 0.0, two_slit_field(0.0), fast_cfg());
  REQUIRE(t.terminated_by == Termination::ReachedScreen);
  for (const TrajPoint& pt : t.points) CHECK(std::abs(pt.x) <= 1e-10 * kBeam.W0);
}

TEST_CASE("mirror seeds produce mirror trajectories") {
  const VelocityField f = two_slit_field(3.0);
  const Trajectory l = integrate_bohmian(-3.4, 0.0, f, fast_cfg());
  const Trajectory r = integrate_bohmian(3.4, 0.0, f, fast_cfg());
  REQUIRE(l.points.size() == r.points.size());
  for (std::size_t i = 0; i < l.points.size(); ++i)
    CHECK(std::abs(l.points[i].x + r.points[i].x) <= 1e-9 * kBeam.W0);
}

TEST_CASE("seed below the density floor throws, ensemble converts it") {
  const VelocityField f = two_slit_field(0.0);
  CHECK_THROWS_AS(integrate_bohmian(12.0, 0.0, f, fast_cfg()), SeedInvalid);

  const auto trajs = integrate_ensemble({0.0, 12.0}, 0.0, f, fast_cfg());
  CHECK(trajs[0].terminated_by == Termination::ReachedScreen);
  CHECK(trajs[1].terminated_by == Termination::DensityFloor);
  CHECK(trajs[1].points.size() == 1);
}

TEST_CASE("ensemble matches per-seed integration and reports no crossings") {
  const VelocityField f = two_slit_field(3.0);
  IntegratorConfig cfg = fast_cfg();
  cfg.dz = 0.1;
  const auto seeds = seed_uniform(21, -4.5, 4.5);
  std::size_t crossings = 99;
  const auto ens = integrate_ensemble(seeds, 0.0, f, cfg, &crossings);
  CHECK(crossings == 0);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const Trajectory solo = integrate_bohmian(seeds[i], 0.0, f, cfg);
    REQUIRE(ens[i].points.size() == solo.points.size());
    for (std::size_t j = 0; j < solo.points.size(); ++j)
      CHECK(ens[i].points[j].x == Approx(solo.points[j].x).epsilon(1e-14));
  }
}

TEST_CASE("landing bands match the density maxima at the screen") {
  const SlitConfig s{3.0, CurvatureFormula::Standard};
  const VelocityField f = two_slit_field(3.0);
  IntegratorConfig cfg = fast_cfg();
  const auto seeds = seed_uniform(200, -5.0, 5.0);
  const auto trajs = integrate_ensemble(seeds, 0.0, f, cfg);

  std::vector<double> landings;
  for (const auto& t : trajs)
    if (t.terminated_by == Termination::ReachedScreen)
      landings.push_back(t.points.back().x);
  std::sort(landings.begin(), landings.end());
  REQUIRE(landings.size() > 100);

  // density maxima and interior minima over the landing span
  std::vector<double> maxima, minima;
  {
    const double lo = landings.front() - 1e-9, hi = landings.back() + 1e-9;
    const std::size_t np = 8001;
    const double h = (hi - lo) / double(np - 1);
    std::vector<double> rho(np);
    for (std::size_t i = 0; i < np; ++i)
      rho[i] = std::norm(slit_field(lo + h * double(i), cfg.z_screen, kBeam, s));
    for (std::size_t i = 1; i + 1 < np; ++i) {
      if (rho[i] > rho[i - 1] && rho[i] > rho[i + 1])
        maxima.push_back(lo + h * double(i));
      if (rho[i] < rho[i - 1] && rho[i] < rho[i + 1] && !maxima.empty())
        minima.push_back(lo + h * double(i));
    }
    while (!minima.empty() && !maxima.empty() && minima.back() > maxima.back())
      minima.pop_back();
  }
  REQUIRE(maxima.size() > 1);

  // landing bands: basins delimited by the density minima; a band is a basin
  // that received at least one landing
  std::vector<std::size_t> basin_counts(minima.size() + 1, 0);
  std::size_t idx = 0;
  for (double x : landings) {
    while (idx < minima.size() && x > minima[idx]) ++idx;
    ++basin_counts[idx];
  }
  std::size_t bands = 0;
  for (std::size_t c : basin_counts)
    if (c > 0) ++bands;

  CHECK(bands == maxima.size());
}

TEST_CASE("eikonal rays in a homogeneous medium are straight") {
  IntegratorConfig cfg;
  cfg.dz = 0.01;
  cfg.z_screen = 5.0;
  cfg.x_bounds = 100.0;
  const IndexField unit = [](double, double) { return 1.0; };

  // grad S = (0, 1): vertical line
  {
    const Trajectory t = integrate_eikonal_ray(
        1.5, 0.0, [](double, double) { return Gradient2{0.0, 1.0}; }, unit, cfg);
    for (const auto& pt : t.points) CHECK(std::abs(pt.x - 1.5) <= 1e-12);
  }
  // grad S = (1,1)/sqrt(2): 45 degree line
  {
    const double r = 1.0 / std::sqrt(2.0);
    const Trajectory t = integrate_eikonal_ray(
        0.0, 0.0, [&](double, double) { return Gradient2{r, r}; }, unit, cfg);
    for (const auto& pt : t.points) CHECK(std::abs(pt.x - pt.z) <= 1e-12);
  }
  // radial phase: rays run along straight radii
  {
    const GradientField radial = [](double x, double z) {
      const double r = std::hypot(x, z);
      return Gradient2{x / r, z / r};
    };
    const double x0 = 0.6, z0 = 0.8;
    const Trajectory t = integrate_eikonal_ray(x0, z0, radial, unit, cfg);
    for (const auto& pt : t.points)
      CHECK(std::abs(pt.x * z0 - pt.z * x0) <= 1e-9 * std::hypot(pt.x, pt.z));
  }
}
