#pragma once

#include <utility>

#include "mayer/grids.hpp"

namespace mayer {

/// Residual of the Helmholtz equation, lap(U) + (n*k)^2*U, with the 5-point
/// Laplacian. Statistics cover the interior (2-point boundary margin excluded).
ResidualReport helmholtz_residual(const ComplexGrid2& U, double k,
                                  const ScalarGrid2& n);

/// Residuals of the optical real/imaginary split of the Helmholtz equation
/// for U = a*exp(-i*S~/lambda_bar):
///   first  = |grad S~|^2 - n^2 - lambda_bar^2 * lap(a)/a
///   second = 2*grad(a).grad(S~) + a*lap(S~)
std::pair<ResidualReport, ResidualReport> optical_split_residuals(
    const ScalarGrid2& a, const ScalarGrid2& S, const ScalarGrid2& n,
    double lambda_bar);

/// Residuals of the stationary Schrodinger split for Psi = R*exp(i*S/hbar),
/// S(r,t) = -E*t + S(r):
///   first  = -E + |grad S|^2/(2m) + V - (hbar^2/2m)*lap(R)/R
///   second = div(R^2 * grad(S)/m)
std::pair<ResidualReport, ResidualReport> schrodinger_split_residuals(
    const ScalarGrid2& R, const ScalarGrid2& S, const ScalarGrid2& V, double m,
    double hbar, double E);

/// Q = -hbar^2 * lap(R) / (2*m*R), pointwise. Interior uses central stencils,
/// the boundary ring one-sided second-order ones.
ScalarGrid2 quantum_potential(const ScalarGrid2& R, double m, double hbar);

/// Residuals of the relativistic short-wave split on a (t, x, z) section with
/// metric diag(+1,-1,-1), for u = rho^{1/2}*exp(i*S~/lambda):
///   first  = eta^{mn} dS~ dS~ - 1 - lambda^2 * box(rho^{1/2})/rho^{1/2}
///   second = 2*eta^{mn} dS~ d(rho^{1/2}) + rho^{1/2}*box(S~)
std::pair<ResidualReport, ResidualReport> shortwave_split_residuals(
    const ScalarGrid3& rho, const ScalarGrid3& S, double lambda);

/// Zeroth- and first-order (in lambda) limits of the short-wave split:
///   first  = eta^{mn} dS~ dS~ - 1
///   second = d_n(rho * d^n S~)
std::pair<ResidualReport, ResidualReport> hj_continuity_check(const ScalarGrid3& rho,
                                                              const ScalarGrid3& S);

}  // namespace mayer
