#pragma once

#include <functional>
#include <utility>

#include "mayer/grids.hpp"
#include "mayer/lattice.hpp"

namespace mayer {

/// Linear auxiliary function S(x) = p_mu x^mu with covariant momentum p.
struct LinearAux {
  Vec4 p{};  // covariant components

  double S(const Vec4& x) const {
    return p[0] * x[0] + p[1] * x[1] + p[2] * x[2] + p[3] * x[3];
  }
};

/// Velocity field specification. FromAux yields the constant field
/// v^mu = s * eta^{mu nu} p_nu (any positive rescaling of a solution is again
/// a solution of the fundamental equations). Custom accepts an arbitrary
/// callable, used for counterexample fields.
struct VelocitySpec {
  enum class Kind { FromAux, ExplicitConstant, Custom };
  Kind kind = Kind::ExplicitConstant;
  LinearAux aux{};
  double scale = 1.0;
  Vec4 constant{};
  std::function<Vec4(const Vec4&)> custom;

  static VelocitySpec from_aux(const LinearAux& aux, double scale = 1.0);
  static VelocitySpec explicit_constant(const Vec4& v);
  static VelocitySpec custom_field(std::function<Vec4(const Vec4&)> f);

  /// Contravariant velocity at x.
  Vec4 evaluate(const Vec4& x) const;
};

/// L(x,v) = m*c*(eta_{mu nu} v^mu v^nu)^{1/2} = m*c*phi.
/// Returns {L, phi}; throws NonTimelikeVelocity unless v_nu v^nu > 0.
std::pair<double, double> free_lagrangian(const Vec4& v, double m, double c);

struct FundamentalResiduals {
  double first = 0.0;  // L - v^mu d_mu S
  Vec4 second{};       // dL/dv^mu - d_mu S, covariant components
};

/// Residuals of the two fundamental equations at x, with dL/dv^mu = m*c*v_mu/phi
/// and d_mu S = p_mu evaluated analytically.
FundamentalResiduals fundamental_residuals(const VelocitySpec& spec,
                                           const LinearAux& aux, const Vec4& x,
                                           double m, double c);

/// eta^{mu nu} p_mu p_nu - m^2 c^2
double hj_residual(const LinearAux& aux, double m, double c);

/// Integrates dx^mu/ds = v^mu(x) with RK4 and returns the maximum distance of
/// the curve from the chord through its endpoints, normalized by path length.
double straightness_check(const VelocitySpec& spec, const Vec4& seed_x, double s_max,
                          std::size_t steps);

/// Along the integrated curve, finite-differences d/ds of the analytic
/// momentum m*c*v_mu/phi and subtracts dL/dx^mu (= 0 for the free Lagrangian).
ResidualReport euler_lagrange_residual(const VelocitySpec& spec, const Vec4& seed_x,
                                       double s_max, std::size_t steps, double m,
                                       double c);

}  // namespace mayer
