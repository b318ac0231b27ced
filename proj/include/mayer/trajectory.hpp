#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mayer/beam.hpp"
#include "mayer/errors.hpp"

namespace mayer {

enum class Termination { ReachedScreen, LeftDomain, DensityFloor, MaxSteps };

struct TrajPoint {
  double x;
  double z;
};

struct Trajectory {
  std::vector<TrajPoint> points;  // z strictly increasing
  double weight = 0.0;            // rho^{1/2} at the seed
  Termination terminated_by = Termination::MaxSteps;
};

struct IntegratorConfig {
  double dz = 0.025;
  double z_screen = 100.0;
  double x_bounds = 15.0;
  std::size_t max_steps = 200000;
  double vz_min = 0.1;
};

/// Planar velocity field sampled at (x,z). Same contract as MadelungSample.
using VelocityField = std::function<MadelungSample(double x, double z)>;

/// Velocity field backed by the two-slit beam (finite-difference Madelung).
VelocityField make_beam_velocity_field(const BeamParams& p, const SlitConfig& s,
                                       double h_fd, double floor);

/// Integrate dx/dz = vx/vz with classical fixed-step RK4 in z.
/// Throws SeedInvalid when the seed itself is below the density floor or has
/// vz < vz_min; later failures are recorded in terminated_by instead.
Trajectory integrate_bohmian(double seed_x, double z_start,
                             const VelocityField& field,
                             const IntegratorConfig& cfg);

/// Lockstep integration of many seeds over a shared z grid. Equivalent to
/// calling integrate_bohmian per seed (same RK4 stages), but seeds that throw
/// SeedInvalid become one-point DensityFloor trajectories, and when
/// `crossings` is non-null the x-ordering of live trajectories is checked at
/// every step, counting violations.
std::vector<Trajectory> integrate_ensemble(const std::vector<double>& seeds_x,
                                           double z_start,
                                           const VelocityField& field,
                                           const IntegratorConfig& cfg,
                                           std::size_t* crossings = nullptr,
                                           bool keep_points = true);

/// Eikonal rays: dr/ds = grad(S~)/n, RK4 in arclength s.
struct Gradient2 {
  double gx;
  double gz;
};
using GradientField = std::function<Gradient2(double x, double z)>;
using IndexField = std::function<double(double x, double z)>;

Trajectory integrate_eikonal_ray(double seed_x, double seed_z,
                                 const GradientField& grad_S,
                                 const IndexField& n, const IntegratorConfig& cfg);

/// n equally spaced values on [x_min, x_max], endpoints included (midpoint
/// for n = 1).
std::vector<double> seed_uniform(std::size_t n, double x_min, double x_max);

/// n draws from the normalized restriction of rho to [x_min, x_max] via
/// inverse-CDF lookup on a 4096-point table. Deterministic given rng_seed.
std::vector<double> seed_density_sampled(std::size_t n, double x_min, double x_max,
                                         const std::function<double(double)>& rho,
                                         std::uint64_t rng_seed);

/// Histogram of terminal x positions over [x_min, x_max) for trajectories
/// that reached the screen. Out-of-range landings are dropped.
std::vector<std::size_t> landing_histogram(const std::vector<Trajectory>& trajs,
                                           std::size_t bins, double x_min,
                                           double x_max);

}  // namespace mayer
