#include "mayer/current_inversion.hpp"

#include <cmath>

namespace mayer {

Mat4 build_M(const CurrentSample& c) {
  if (!(c.n0c > 0.0)) throw ConfigError("build_M: n0c must be positive");
  const double scale2 = c.n0c * c.n0c;
  Mat4 M{};

  const double p0sq = c.pi[0] * c.pi[0];
  M[0][0] = scale2 - p0sq;
  M[0][1] = M[0][2] = M[0][3] = p0sq;
  for (int i = 1; i < 4; ++i) {
    const double pisq = c.pi[std::size_t(i)] * c.pi[std::size_t(i)];
    for (int j = 0; j < 4; ++j) M[std::size_t(i)][std::size_t(j)] = pisq;
    M[std::size_t(i)][0] = -pisq;
    M[std::size_t(i)][std::size_t(i)] = scale2 + pisq;
  }
  return M;
}

double det4(const Mat4& m) {
  auto det3 = [](double a, double b, double c, double d, double e, double f, double g,
                 double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  };
  double det = 0.0;
  for (int col = 0; col < 4; ++col) {
    double minor[3][3];
    for (int r = 1; r < 4; ++r) {
      int mc = 0;
      for (int cc = 0; cc < 4; ++cc) {
        if (cc == col) continue;
        minor[r - 1][mc++] = m[std::size_t(r)][std::size_t(cc)];
      }
    }
    const double cof = det3(minor[0][0], minor[0][1], minor[0][2], minor[1][0],
                            minor[1][1], minor[1][2], minor[2][0], minor[2][1],
                            minor[2][2]);
    det += ((col % 2 == 0) ? 1.0 : -1.0) * m[0][std::size_t(col)] * cof;
  }
  return det;
}

DetPair det_M(const CurrentSample& c) {
  DetPair out;
  out.numeric = det4(build_M(c));
  const double scale2 = c.n0c * c.n0c;
  out.closed_form = scale2 * scale2 * scale2 * (scale2 - minkowski_dot(c.pi, c.pi));
  return out;
}

RecoveredVelocity recover_velocity(const CurrentSample& c, double s, double tol) {
  if (!(c.n0c > 0.0)) throw ConfigError("recover_velocity: n0c must be positive");
  if (!(s > 0.0)) throw ConfigError("recover_velocity: s must be positive");
  const double norm2 = minkowski_dot(c.pi, c.pi);
  if (!(norm2 > 0.0)) throw NotTimelike("recover_velocity: pi must be timelike");
  const double scale2 = c.n0c * c.n0c;
  if (std::abs(norm2 - scale2) > tol * scale2)
    throw NoNontrivialSolution(
        "recover_velocity: pi_nu pi^nu != (n0c)^2, det M != 0 has only the trivial "
        "solution");

  RecoveredVelocity out;
  for (int mu = 0; mu < 4; ++mu) out.v[std::size_t(mu)] = s * c.pi[std::size_t(mu)];
  out.rho = 1.0 / s;
  return out;
}

}  // namespace mayer
