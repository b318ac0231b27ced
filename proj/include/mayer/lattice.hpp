#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "mayer/errors.hpp"
#include "mayer/grids.hpp"

namespace mayer {

using Vec4 = std::array<double, 4>;

/// Minkowski metric signature (+1, -1, -1, -1); x^0 = ct.
constexpr double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Raise (or lower; the operation is an involution) a 4-tuple of components.
Vec4 raise_index(const Vec4& w);

/// Minkowski scalar product of contravariant tuples: a_mu b^mu.
double minkowski_dot(const Vec4& a, const Vec4& b);

/// Uniform 4D grid. Axes flagged periodic wrap in the difference stencils;
/// the rest fall back to one-sided second-order stencils at the boundary.
struct Lattice4 {
  std::array<std::size_t, 4> n{};
  std::array<double, 4> h{};
  std::array<bool, 4> periodic{};
  std::array<double, 4> origin{};

  Lattice4() = default;
  Lattice4(std::array<std::size_t, 4> n_, std::array<double, 4> h_,
           std::array<bool, 4> periodic_ = {false, false, false, false},
           std::array<double, 4> origin_ = {0.0, 0.0, 0.0, 0.0});

  std::size_t size() const { return n[0] * n[1] * n[2] * n[3]; }
  std::size_t index(std::size_t i0, std::size_t i1, std::size_t i2,
                    std::size_t i3) const {
    return ((i0 * n[1] + i1) * n[2] + i2) * n[3] + i3;
  }
  double coord(int mu, std::size_t i) const {
    return origin[std::size_t(mu)] + h[std::size_t(mu)] * double(i);
  }
  double cell_volume() const { return h[0] * h[1] * h[2] * h[3]; }
  bool fully_periodic() const {
    return periodic[0] && periodic[1] && periodic[2] && periodic[3];
  }
  bool congruent(const Lattice4& o) const { return n == o.n && h == o.h; }
};

struct ScalarLattice {
  Lattice4 lattice;
  std::vector<double> values;

  ScalarLattice() = default;
  explicit ScalarLattice(const Lattice4& lat)
      : lattice(lat), values(lat.size(), 0.0) {}
};

/// Contravariant four-vector field pi^mu sampled per site.
struct VecFieldLattice {
  Lattice4 lattice;
  std::array<std::vector<double>, 4> comp;

  VecFieldLattice() = default;
  explicit VecFieldLattice(const Lattice4& lat) : lattice(lat) {
    for (auto& c : comp) c.assign(lat.size(), 0.0);
  }
};

/// Antisymmetric K^{ab}; only the six independent components are stored, in
/// the order (01, 02, 03, 12, 13, 23).
struct AntisymTensorLattice {
  Lattice4 lattice;
  std::array<std::vector<double>, 6> comp;

  AntisymTensorLattice() = default;
  explicit AntisymTensorLattice(const Lattice4& lat) : lattice(lat) {
    for (auto& c : comp) c.assign(lat.size(), 0.0);
  }

  static int slot(int a, int b);  // index into comp for a < b
  /// K^{ab} at a site, any index order (sign handled, diagonal = 0).
  double at(int a, int b, std::size_t site) const;
};

struct KappaEstimate {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
};

/// Discrete d_mu of a scalar field (2nd-order central; periodic wrap or
/// one-sided boundary stencils).
ScalarLattice partial(const ScalarLattice& f, int mu);

/// d_mu pi^mu
ScalarLattice divergence(const VecFieldLattice& pi);

/// box f = d0^2 f - d1^2 f - d2^2 f - d3^2 f (narrow second differences)
ScalarLattice dalembertian(const ScalarLattice& f);

/// K^{ab} = d^a pi^b - d^b pi^a, indices raised before differencing.
AntisymTensorLattice field_tensor(const VecFieldLattice& pi);

/// RMS over all sites of a scalar lattice.
ResidualReport residual_report(const ScalarLattice& f);

/// d_a K^{ab} - kappa*pi^b, combined over b.
ResidualReport maxwell_residual(const AntisymTensorLattice& K,
                                const VecFieldLattice& pi, double kappa);

/// Cyclic identity d^a K^{bc} + d^b K^{ca} + d^c K^{ab} over the four
/// distinct index triples (triples with a repeated index vanish structurally).
ResidualReport bianchi_residual(const AntisymTensorLattice& K);

/// box pi^nu = 0 residual (first probabilistic model).
ResidualReport wave_residual(const VecFieldLattice& pi);

/// (box + 1/lambda^2) pi^mu residual.
ResidualReport proca_residual(const VecFieldLattice& pi, double lambda);

/// Same operator applied to each stored component of K.
ResidualReport proca_residual_K(const AntisymTensorLattice& K, double lambda);

/// kappa = -[sum (d_s pi_m)(d^s pi^m) dV] / [sum pi_m pi^m dV]; requires a
/// fully periodic lattice so the discrete surface terms cancel exactly.
KappaEstimate kappa_k1(const VecFieldLattice& pi);

/// kappa = -(1/2)[sum K_sm K^sm dV] / [sum pi_m pi^m dV] with K from
/// field_tensor. Valid only for (discretely) divergence-free pi; the RMS
/// divergence is checked against div_tol times the derivative scale.
KappaEstimate kappa_k2(const VecFieldLattice& pi, double div_tol = 1e-9);

/// Builds pi_nu = rho*v_nu with rho = n0c*(v_nu v^nu)^{-1/2} and returns the
/// (box pi, div pi) residual pair. Throws NonTimelikeField if v_nu v^nu <= 0
/// anywhere.
std::pair<ResidualReport, ResidualReport> first_model_residuals(
    const VecFieldLattice& v, double n0c);

/// pi^mu(x) = eps^mu * cos(k_nu x^nu + phase), with covariant k. On periodic
/// axes each k_mu*L_mu must be a multiple of 2*pi.
VecFieldLattice make_plane_wave(const Vec4& eps, const Vec4& k_cov, double phase,
                                const Lattice4& lat);

/// The continuum field tensor of the same plane wave, sampled exactly:
/// K^{ab}(x) = -sin(k_nu x^nu + phase) * (k^a eps^b - k^b eps^a).
AntisymTensorLattice sample_plane_wave_tensor(const Vec4& eps, const Vec4& k_cov,
                                              double phase, const Lattice4& lat);

/// k_mu k^mu for a covariant wave vector.
double wave_norm(const Vec4& k_cov);

}  // namespace mayer
