#include "mayer/eikonal_madelung.hpp"

#include <cmath>

namespace mayer {

namespace {

template <typename T>
void check_congruent(const Grid2<T>& a, const ScalarGrid2& b, const char* who) {
  if (a.nx != b.nx || a.nz != b.nz || a.hx != b.hx || a.hz != b.hz)
    throw GridMismatch(std::string(who) + ": grids not congruent");
}

// Central first/second differences at an interior point.
template <typename T>
T dx1(const Grid2<T>& g, std::size_t i, std::size_t j) {
  return (g.at(i + 1, j) - g.at(i - 1, j)) / (2.0 * g.hx);
}
template <typename T>
T dz1(const Grid2<T>& g, std::size_t i, std::size_t j) {
  return (g.at(i, j + 1) - g.at(i, j - 1)) / (2.0 * g.hz);
}
template <typename T>
T lap5(const Grid2<T>& g, std::size_t i, std::size_t j) {
  const T dxx = (g.at(i + 1, j) - 2.0 * g.at(i, j) + g.at(i - 1, j)) / (g.hx * g.hx);
  const T dzz = (g.at(i, j + 1) - 2.0 * g.at(i, j) + g.at(i, j - 1)) / (g.hz * g.hz);
  return dxx + dzz;
}

constexpr std::size_t kMargin = 2;

}  // namespace

ResidualReport helmholtz_residual(const ComplexGrid2& U, double k,
                                  const ScalarGrid2& n) {
  check_congruent(U, n, "helmholtz_residual");
  ResidualAccumulator acc;
  for (std::size_t j = kMargin; j + kMargin < U.nz; ++j)
    for (std::size_t i = kMargin; i + kMargin < U.nx; ++i) {
      const double nk = n.at(i, j) * k;
      acc.add(std::abs(lap5(U, i, j) + nk * nk * U.at(i, j)));
    }
  return acc.report();
}

std::pair<ResidualReport, ResidualReport> optical_split_residuals(
    const ScalarGrid2& a, const ScalarGrid2& S, const ScalarGrid2& n,
    double lambda_bar) {
  check_congruent(S, a, "optical_split_residuals");
  check_congruent(S, n, "optical_split_residuals");
  ResidualAccumulator eikonal, transport;
  for (std::size_t j = kMargin; j + kMargin < a.nz; ++j)
    for (std::size_t i = kMargin; i + kMargin < a.nx; ++i) {
      const double av = a.at(i, j);
      if (!(av > 0.0))
        throw NonpositiveAmplitude("optical_split_residuals: a <= 0 on interior");
      const double Sx = dx1(S, i, j), Sz = dz1(S, i, j);
      const double nv = n.at(i, j);
      eikonal.add(Sx * Sx + Sz * Sz - nv * nv -
                  lambda_bar * lambda_bar * lap5(a, i, j) / av);
      transport.add(2.0 * (dx1(a, i, j) * Sx + dz1(a, i, j) * Sz) +
                    av * lap5(S, i, j));
    }
  return {eikonal.report(), transport.report()};
}

std::pair<ResidualReport, ResidualReport> schrodinger_split_residuals(
    const ScalarGrid2& R, const ScalarGrid2& S, const ScalarGrid2& V, double m,
    double hbar, double E) {
  check_congruent(S, R, "schrodinger_split_residuals");
  check_congruent(S, V, "schrodinger_split_residuals");
  ResidualAccumulator hj, continuity;
  // continuity residual div(R^2 grad S / m) is expanded with the product
  // rule so that only R and S stencils enter:
  //   (2 R grad R . grad S + R^2 lap S) / m
  for (std::size_t j = kMargin; j + kMargin < R.nz; ++j)
    for (std::size_t i = kMargin; i + kMargin < R.nx; ++i) {
      const double Rv = R.at(i, j);
      if (!(Rv > 0.0))
        throw NonpositiveAmplitude("schrodinger_split_residuals: R <= 0 on interior");
      const double Sx = dx1(S, i, j), Sz = dz1(S, i, j);
      hj.add(-E + (Sx * Sx + Sz * Sz) / (2.0 * m) + V.at(i, j) -
             (hbar * hbar / (2.0 * m)) * lap5(R, i, j) / Rv);
      continuity.add((2.0 * Rv * (dx1(R, i, j) * Sx + dz1(R, i, j) * Sz) +
                      Rv * Rv * lap5(S, i, j)) /
                     m);
    }
  return {hj.report(), continuity.report()};
}

ScalarGrid2 quantum_potential(const ScalarGrid2& R, double m, double hbar) {
  ScalarGrid2 Q(R.nx, R.nz, R.hx, R.hz, R.x0, R.z0);
  const double pref = -hbar * hbar / (2.0 * m);

  // one-sided second derivative, second order: (2f0 - 5f1 + 4f2 - f3)/h^2
  auto d2 = [](double f0, double f1, double f2, double f3, double h) {
    return (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (h * h);
  };
  auto dxx = [&](std::size_t i, std::size_t j) {
    if (i == 0) return d2(R.at(0, j), R.at(1, j), R.at(2, j), R.at(3, j), R.hx);
    if (i + 1 == R.nx)
      return d2(R.at(i, j), R.at(i - 1, j), R.at(i - 2, j), R.at(i - 3, j), R.hx);
    return (R.at(i + 1, j) - 2.0 * R.at(i, j) + R.at(i - 1, j)) / (R.hx * R.hx);
  };
  auto dzz = [&](std::size_t i, std::size_t j) {
    if (j == 0) return d2(R.at(i, 0), R.at(i, 1), R.at(i, 2), R.at(i, 3), R.hz);
    if (j + 1 == R.nz)
      return d2(R.at(i, j), R.at(i, j - 1), R.at(i, j - 2), R.at(i, j - 3), R.hz);
    return (R.at(i, j + 1) - 2.0 * R.at(i, j) + R.at(i, j - 1)) / (R.hz * R.hz);
  };

  for (std::size_t j = 0; j < R.nz; ++j)
    for (std::size_t i = 0; i < R.nx; ++i) {
      const double Rv = R.at(i, j);
      if (!(Rv > 0.0)) throw NonpositiveAmplitude("quantum_potential: R <= 0");
      Q.at(i, j) = pref * (dxx(i, j) + dzz(i, j)) / Rv;
    }
  return Q;
}

namespace {

// Minkowski helpers on a (t, x, z) section; eta = diag(+1, -1, -1).
constexpr double kEta3[3] = {1.0, -1.0, -1.0};

double d1(const ScalarGrid3& g, int axis, std::size_t i, std::size_t j,
          std::size_t k) {
  const std::size_t idx[3] = {i, j, k};
  std::size_t p[3] = {i, j, k}, q[3] = {i, j, k};
  ++p[axis];
  --q[axis];
  (void)idx;
  return (g.at(p[0], p[1], p[2]) - g.at(q[0], q[1], q[2])) /
         (2.0 * g.h[std::size_t(axis)]);
}

double box3(const ScalarGrid3& g, std::size_t i, std::size_t j, std::size_t k) {
  double out = 0.0;
  for (int a = 0; a < 3; ++a) {
    std::size_t p[3] = {i, j, k}, q[3] = {i, j, k};
    ++p[a];
    --q[a];
    const double h = g.h[std::size_t(a)];
    out += kEta3[a] *
           (g.at(p[0], p[1], p[2]) - 2.0 * g.at(i, j, k) + g.at(q[0], q[1], q[2])) /
           (h * h);
  }
  return out;
}

void check_congruent3(const ScalarGrid3& a, const ScalarGrid3& b, const char* who) {
  if (!a.congruent(b)) throw GridMismatch(std::string(who) + ": grids not congruent");
}

}  // namespace

std::pair<ResidualReport, ResidualReport> shortwave_split_residuals(
    const ScalarGrid3& rho, const ScalarGrid3& S, double lambda) {
  check_congruent3(rho, S, "shortwave_split_residuals");
  ScalarGrid3 amp(rho.n, rho.h, rho.origin);
  for (std::size_t idx = 0; idx < rho.values.size(); ++idx) {
    if (!(rho.values[idx] > 0.0))
      throw NonpositiveDensity("shortwave_split_residuals: rho <= 0");
    amp.values[idx] = std::sqrt(rho.values[idx]);
  }

  ResidualAccumulator hj, cont;
  for (std::size_t i = kMargin; i + kMargin < S.n[0]; ++i)
    for (std::size_t j = kMargin; j + kMargin < S.n[1]; ++j)
      for (std::size_t k = kMargin; k + kMargin < S.n[2]; ++k) {
        double grad2 = 0.0, cross = 0.0;
        for (int a = 0; a < 3; ++a) {
          const double dS = d1(S, a, i, j, k);
          grad2 += kEta3[a] * dS * dS;
          cross += kEta3[a] * dS * d1(amp, a, i, j, k);
        }
        const double av = amp.at(i, j, k);
        hj.add(grad2 - 1.0 - lambda * lambda * box3(amp, i, j, k) / av);
        cont.add(2.0 * cross + av * box3(S, i, j, k));
      }
  return {hj.report(), cont.report()};
}

std::pair<ResidualReport, ResidualReport> hj_continuity_check(const ScalarGrid3& rho,
                                                              const ScalarGrid3& S) {
  check_congruent3(rho, S, "hj_continuity_check");
  for (double r : rho.values)
    if (!(r > 0.0)) throw NonpositiveDensity("hj_continuity_check: rho <= 0");

  // current components w^a = rho * eta^{aa} * d_a S, built on the 1-point
  // margin so its own central difference is available on the 2-point interior
  std::array<ScalarGrid3, 3> w = {ScalarGrid3(rho.n, rho.h, rho.origin),
                                  ScalarGrid3(rho.n, rho.h, rho.origin),
                                  ScalarGrid3(rho.n, rho.h, rho.origin)};
  for (std::size_t i = 1; i + 1 < S.n[0]; ++i)
    for (std::size_t j = 1; j + 1 < S.n[1]; ++j)
      for (std::size_t k = 1; k + 1 < S.n[2]; ++k)
        for (int a = 0; a < 3; ++a)
          w[std::size_t(a)].at(i, j, k) =
              rho.at(i, j, k) * kEta3[a] * d1(S, a, i, j, k);

  ResidualAccumulator hj, cont;
  for (std::size_t i = kMargin; i + kMargin < S.n[0]; ++i)
    for (std::size_t j = kMargin; j + kMargin < S.n[1]; ++j)
      for (std::size_t k = kMargin; k + kMargin < S.n[2]; ++k) {
        double grad2 = 0.0, div = 0.0;
        for (int a = 0; a < 3; ++a) {
          const double dS = d1(S, a, i, j, k);
          grad2 += kEta3[a] * dS * dS;
          div += d1(w[std::size_t(a)], a, i, j, k);
        }
        hj.add(grad2 - 1.0);
        cont.add(div);
      }
  return {hj.report(), cont.report()};
}

}  // namespace mayer
