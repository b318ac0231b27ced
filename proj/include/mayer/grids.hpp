#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "mayer/errors.hpp"

namespace mayer {

struct ResidualReport {
  double rms = 0.0;
  double max_abs = 0.0;
  std::size_t interior_count = 0;
};

/// Uniform 2D grid over the (x, z) plane, row-major with x fastest.
template <typename T>
struct Grid2 {
  std::size_t nx = 0, nz = 0;
  double hx = 0.0, hz = 0.0;
  double x0 = 0.0, z0 = 0.0;
  std::vector<T> values;

  Grid2() = default;
  Grid2(std::size_t nx_, std::size_t nz_, double hx_, double hz_, double x0_ = 0.0,
        double z0_ = 0.0)
      : nx(nx_), nz(nz_), hx(hx_), hz(hz_), x0(x0_), z0(z0_), values(nx_ * nz_, T{}) {
    if (nx < 5 || nz < 5)
      throw ConfigError("Grid2: need at least 5 points per axis");
    if (!(hx > 0.0) || !(hz > 0.0)) throw ConfigError("Grid2: spacings must be positive");
  }

  T& at(std::size_t i, std::size_t j) { return values[j * nx + i]; }
  const T& at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
  double x(std::size_t i) const { return x0 + hx * double(i); }
  double z(std::size_t j) const { return z0 + hz * double(j); }

  static Grid2 sampled(std::size_t nx, std::size_t nz, double hx, double hz, double x0,
                       double z0, const std::function<T(double, double)>& f) {
    Grid2 g(nx, nz, hx, hz, x0, z0);
    for (std::size_t j = 0; j < nz; ++j)
      for (std::size_t i = 0; i < nx; ++i) g.at(i, j) = f(g.x(i), g.z(j));
    return g;
  }

  bool congruent(const Grid2& o) const {
    return nx == o.nx && nz == o.nz && hx == o.hx && hz == o.hz && x0 == o.x0 &&
           z0 == o.z0;
  }
};

using ScalarGrid2 = Grid2<double>;
using ComplexGrid2 = Grid2<std::complex<double>>;

/// Uniform 3D section (x0 = ct, x1, x3) of Minkowski space, metric
/// diag(+1,-1,-1). Storage is row-major with the last axis fastest.
struct ScalarGrid3 {
  std::array<std::size_t, 3> n{};
  std::array<double, 3> h{};
  std::array<double, 3> origin{};
  std::vector<double> values;

  ScalarGrid3() = default;
  ScalarGrid3(std::array<std::size_t, 3> n_, std::array<double, 3> h_,
              std::array<double, 3> origin_ = {0.0, 0.0, 0.0})
      : n(n_), h(h_), origin(origin_), values(n_[0] * n_[1] * n_[2], 0.0) {
    for (int a = 0; a < 3; ++a) {
      if (n[a] < 5) throw ConfigError("ScalarGrid3: need at least 5 points per axis");
      if (!(h[a] > 0.0)) throw ConfigError("ScalarGrid3: spacings must be positive");
    }
  }

  double& at(std::size_t i, std::size_t j, std::size_t k) {
    return values[(i * n[1] + j) * n[2] + k];
  }
  double at(std::size_t i, std::size_t j, std::size_t k) const {
    return values[(i * n[1] + j) * n[2] + k];
  }
  double coord(int axis, std::size_t idx) const {
    return origin[std::size_t(axis)] + h[std::size_t(axis)] * double(idx);
  }

  static ScalarGrid3 sampled(std::array<std::size_t, 3> n, std::array<double, 3> h,
                             std::array<double, 3> origin,
                             const std::function<double(double, double, double)>& f) {
    ScalarGrid3 g(n, h, origin);
    for (std::size_t i = 0; i < n[0]; ++i)
      for (std::size_t j = 0; j < n[1]; ++j)
        for (std::size_t k = 0; k < n[2]; ++k)
          g.at(i, j, k) = f(g.coord(0, i), g.coord(1, j), g.coord(2, k));
    return g;
  }

  bool congruent(const ScalarGrid3& o) const {
    return n == o.n && h == o.h && origin == o.origin;
  }
};

/// Accumulates interior-point residuals into rms/max statistics.
class ResidualAccumulator {
 public:
  void add(double r) {
    sum_sq_ += r * r;
    max_ = std::max(max_, std::abs(r));
    ++count_;
  }
  ResidualReport report() const {
    ResidualReport rep;
    rep.interior_count = count_;
    rep.max_abs = max_;
    rep.rms = count_ ? std::sqrt(sum_sq_ / double(count_)) : 0.0;
    return rep;
  }

 private:
  double sum_sq_ = 0.0;
  double max_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace mayer
