#pragma once

#include <array>
#include <utility>

#include "mayer/lattice.hpp"

namespace mayer {

struct CurrentSample {
  Vec4 pi{};         // contravariant components
  double n0c = 1.0;  // n0*c scale, > 0
};

using Mat4 = std::array<std::array<double, 4>, 4>;

struct DetPair {
  double numeric = 0.0;      // cofactor expansion of build_M
  double closed_form = 0.0;  // (n0c)^6 * [(n0c)^2 - pi_nu pi^nu]
};

struct RecoveredVelocity {
  Vec4 v{};
  double rho = 0.0;
};

/// The squared-component system matrix: M (v^2-vector) = 0, with rows built
/// from (n0c)^2 and the component squares pi_nu^2.
Mat4 build_M(const CurrentSample& c);

/// Plain cofactor-expansion determinant of a 4x4 matrix.
double det4(const Mat4& m);

/// Numeric determinant of build_M alongside its closed form.
DetPair det_M(const CurrentSample& c);

/// The one-parameter family v = s*pi, rho = 1/s. Requires pi timelike and the
/// normalization pi_nu pi^nu = (n0c)^2 within tol (exactly the det M = 0
/// solvability condition); otherwise NoNontrivialSolution.
RecoveredVelocity recover_velocity(const CurrentSample& c, double s,
                                   double tol = 1e-9);

}  // namespace mayer
