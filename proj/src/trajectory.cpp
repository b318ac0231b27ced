#include "mayer/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace mayer {

VelocityField make_beam_velocity_field(const BeamParams& p, const SlitConfig& s,
                                       double h_fd, double floor) {
  return [p, s, h_fd, floor](double x, double z) {
    return madelung(x, z, p, s, h_fd, floor);
  };
}

namespace {

struct Walker {
  double x = 0.0;
  bool live = false;
  Termination done = Termination::MaxSteps;
};

// One RK4 step of dx/dz = vx/vz from (x, z) to z + dz. Returns false (and
// sets `reason`) when any stage sample is unusable.
bool rk4_step(const VelocityField& field, const IntegratorConfig& cfg, double z,
              double dz, double& x, Termination& reason) {
  auto slope = [&](double xs, double zs, double& out) {
    if (std::abs(xs) > cfg.x_bounds) {
      reason = Termination::LeftDomain;
      return false;
    }
    const MadelungSample m = field(xs, zs);
    if (!m.valid || m.vz < cfg.vz_min) {
      reason = Termination::DensityFloor;
      return false;
    }
    out = m.vx / m.vz;
    return true;
  };
  double k1, k2, k3, k4;
  if (!slope(x, z, k1)) return false;
  if (!slope(x + 0.5 * dz * k1, z + 0.5 * dz, k2)) return false;
  if (!slope(x + 0.5 * dz * k2, z + 0.5 * dz, k3)) return false;
  if (!slope(x + dz * k3, z + dz, k4)) return false;
  x += dz * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
  if (std::abs(x) > cfg.x_bounds) {
    reason = Termination::LeftDomain;
    return false;
  }
  return true;
}

void validate_cfg(const IntegratorConfig& cfg) {
  if (!(cfg.dz > 0.0)) throw ConfigError("IntegratorConfig: dz must be positive");
  if (cfg.max_steps == 0) throw ConfigError("IntegratorConfig: max_steps must be positive");
  if (!(cfg.vz_min > 0.0)) throw ConfigError("IntegratorConfig: vz_min must be positive");
}

}  // namespace

Trajectory integrate_bohmian(double seed_x, double z_start,
                             const VelocityField& field,
                             const IntegratorConfig& cfg) {
  validate_cfg(cfg);
  const MadelungSample seed = field(seed_x, z_start);
  if (!seed.valid) throw SeedInvalid("integrate_bohmian: seed density below floor");
  if (seed.vz < cfg.vz_min) throw SeedInvalid("integrate_bohmian: seed vz below vz_min");

  Trajectory traj;
  traj.weight = std::sqrt(seed.rho);
  traj.points.push_back({seed_x, z_start});

  double x = seed_x;
  double z = z_start;
  Termination reason = Termination::MaxSteps;
  for (std::size_t step = 0; step < cfg.max_steps; ++step) {
    if (z >= cfg.z_screen - 1e-12 * cfg.dz) {
      traj.terminated_by = Termination::ReachedScreen;
      return traj;
    }
    const double dz = std::min(cfg.dz, cfg.z_screen - z);
    if (!rk4_step(field, cfg, z, dz, x, reason)) {
      traj.terminated_by = reason;
      return traj;
    }
    z += dz;
    traj.points.push_back({x, z});
  }
  traj.terminated_by = Termination::MaxSteps;
  return traj;
}

std::vector<Trajectory> integrate_ensemble(const std::vector<double>& seeds_x,
                                           double z_start,
                                           const VelocityField& field,
                                           const IntegratorConfig& cfg,
                                           std::size_t* crossings,
                                           bool keep_points) {
  validate_cfg(cfg);
  const std::size_t n = seeds_x.size();
  std::vector<Trajectory> trajs(n);
  std::vector<Walker> w(n);

  for (std::size_t i = 0; i < n; ++i) {
    trajs[i].points.push_back({seeds_x[i], z_start});
    const MadelungSample seed = field(seeds_x[i], z_start);
    if (!seed.valid || seed.vz < cfg.vz_min) {
      trajs[i].terminated_by = Termination::DensityFloor;
      continue;
    }
    trajs[i].weight = std::sqrt(seed.rho);
    w[i].x = seeds_x[i];
    w[i].live = true;
  }
  if (crossings) *crossings = 0;

  double z = z_start;
  for (std::size_t step = 0; step < cfg.max_steps; ++step) {
    if (z >= cfg.z_screen - 1e-12 * cfg.dz) break;
    const double dz = std::min(cfg.dz, cfg.z_screen - z);
    bool any_live = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!w[i].live) continue;
      Termination reason = Termination::MaxSteps;
      if (!rk4_step(field, cfg, z, dz, w[i].x, reason)) {
        w[i].live = false;
        w[i].done = reason;
        trajs[i].terminated_by = reason;
        continue;
      }
      any_live = true;
      if (keep_points)
        trajs[i].points.push_back({w[i].x, z + dz});
    }
    z += dz;
    if (crossings) {
      // seeds are assumed sorted ascending; count order inversions among
      // trajectories still being integrated
      double prev = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        if (!w[i].live) continue;
        if (w[i].x <= prev) ++(*crossings);
        prev = w[i].x;
      }
    }
    if (!any_live) break;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!w[i].live) continue;
    if (!keep_points)
      trajs[i].points.push_back({w[i].x, z});
    trajs[i].terminated_by = (z >= cfg.z_screen - 1e-12 * cfg.dz)
                                 ? Termination::ReachedScreen
                                 : Termination::MaxSteps;
  }
  return trajs;
}

Trajectory integrate_eikonal_ray(double seed_x, double seed_z,
                                 const GradientField& grad_S,
                                 const IndexField& n, const IntegratorConfig& cfg) {
  validate_cfg(cfg);
  auto deriv = [&](double x, double z, double& dx, double& dz) {
    const double nv = n(x, z);
    if (!(nv > 0.0)) throw SeedInvalid("integrate_eikonal_ray: n <= 0 along path");
    const Gradient2 g = grad_S(x, z);
    dx = g.gx / nv;
    dz = g.gz / nv;
  };

  Trajectory traj;
  traj.weight = 1.0;
  traj.points.push_back({seed_x, seed_z});
  double x = seed_x, z = seed_z;
  const double ds = cfg.dz;  // arclength step
  for (std::size_t step = 0; step < cfg.max_steps; ++step) {
    if (z >= cfg.z_screen) {
      traj.terminated_by = Termination::ReachedScreen;
      return traj;
    }
    if (std::abs(x) > cfg.x_bounds) {
      traj.terminated_by = Termination::LeftDomain;
      return traj;
    }
    double k1x, k1z, k2x, k2z, k3x, k3z, k4x, k4z;
    deriv(x, z, k1x, k1z);
    deriv(x + 0.5 * ds * k1x, z + 0.5 * ds * k1z, k2x, k2z);
    deriv(x + 0.5 * ds * k2x, z + 0.5 * ds * k2z, k3x, k3z);
    deriv(x + ds * k3x, z + ds * k3z, k4x, k4z);
    x += ds * (k1x + 2.0 * k2x + 2.0 * k3x + k4x) / 6.0;
    z += ds * (k1z + 2.0 * k2z + 2.0 * k3z + k4z) / 6.0;
    traj.points.push_back({x, z});
  }
  traj.terminated_by = Termination::MaxSteps;
  return traj;
}

std::vector<double> seed_uniform(std::size_t n, double x_min, double x_max) {
  if (n == 0) throw ConfigError("seed_uniform: n must be >= 1");
  if (!(x_min < x_max)) throw ConfigError("seed_uniform: x_min must be < x_max");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = 0.5 * (x_min + x_max);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    out[i] = x_min + (x_max - x_min) * double(i) / double(n - 1);
  return out;
}

std::vector<double> seed_density_sampled(std::size_t n, double x_min, double x_max,
                                         const std::function<double(double)>& rho,
                                         std::uint64_t rng_seed) {
  if (n == 0) throw ConfigError("seed_density_sampled: n must be >= 1");
  if (!(x_min < x_max)) throw ConfigError("seed_density_sampled: x_min must be < x_max");

  constexpr std::size_t kTable = 4096;
  const double h = (x_max - x_min) / double(kTable - 1);
  std::vector<double> xs(kTable), cdf(kTable);
  std::vector<double> dens(kTable);
  for (std::size_t i = 0; i < kTable; ++i) {
    xs[i] = x_min + h * double(i);
    dens[i] = rho(xs[i]);
    if (dens[i] < 0.0) throw ZeroDensityRange("seed_density_sampled: rho < 0");
  }
  cdf[0] = 0.0;
  for (std::size_t i = 1; i < kTable; ++i)
    cdf[i] = cdf[i - 1] + 0.5 * h * (dens[i - 1] + dens[i]);
  const double total = cdf.back();
  if (!(total > 0.0))
    throw ZeroDensityRange("seed_density_sampled: rho vanishes on the whole range");

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double target = unif(rng) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    std::size_t i = (it == cdf.begin()) ? 1 : std::size_t(it - cdf.begin());
    if (i >= kTable) i = kTable - 1;
    const double c0 = cdf[i - 1], c1 = cdf[i];
    const double t = (c1 > c0) ? (target - c0) / (c1 - c0) : 0.5;
    out[j] = xs[i - 1] + t * h;
  }
  return out;
}

std::vector<std::size_t> landing_histogram(const std::vector<Trajectory>& trajs,
                                           std::size_t bins, double x_min,
                                           double x_max) {
  if (bins == 0) throw ConfigError("landing_histogram: bins must be >= 1");
  std::vector<std::size_t> counts(bins, 0);
  const double width = (x_max - x_min) / double(bins);
  for (const Trajectory& t : trajs) {
    if (t.terminated_by != Termination::ReachedScreen || t.points.empty()) continue;
    const double x = t.points.back().x;
    if (x < x_min || x >= x_max) continue;
    auto b = std::size_t((x - x_min) / width);
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  return counts;
}

}  // namespace mayer
