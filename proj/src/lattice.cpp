#include "mayer/lattice.hpp"

#include <cmath>

namespace mayer {

Vec4 raise_index(const Vec4& w) {
  return {w[0], -w[1], -w[2], -w[3]};
}

double minkowski_dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

Lattice4::Lattice4(std::array<std::size_t, 4> n_, std::array<double, 4> h_,
                   std::array<bool, 4> periodic_, std::array<double, 4> origin_)
    : n(n_), h(h_), periodic(periodic_), origin(origin_) {
  for (int mu = 0; mu < 4; ++mu) {
    if (n[std::size_t(mu)] < 5)
      throw ConfigError("Lattice4: need at least 5 points per axis");
    if (!(h[std::size_t(mu)] > 0.0))
      throw ConfigError("Lattice4: spacings must be positive");
  }
}

int AntisymTensorLattice::slot(int a, int b) {
  // (01, 02, 03, 12, 13, 23)
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[a][b];
}

double AntisymTensorLattice::at(int a, int b, std::size_t site) const {
  if (a == b) return 0.0;
  const int s = slot(a, b);
  const double v = comp[std::size_t(s)][site];
  return a < b ? v : -v;
}

namespace {

// Applies a 1D difference along `mu` to every lattice line.
// stencil(values, line base index, stride, count) -> writes output line.
template <typename LineOp>
void for_each_line(const Lattice4& lat, int mu, LineOp&& op) {
  const std::array<std::size_t, 4>& n = lat.n;
  std::size_t stride = 1;
  for (int a = 3; a > mu; --a) stride *= n[std::size_t(a)];
  // iterate over all sites with i_mu = 0; each is the base of one line
  std::array<std::size_t, 4> i{0, 0, 0, 0};
  const std::size_t count = n[std::size_t(mu)];
  for (i[0] = 0; i[0] < (mu == 0 ? 1 : n[0]); ++i[0])
    for (i[1] = 0; i[1] < (mu == 1 ? 1 : n[1]); ++i[1])
      for (i[2] = 0; i[2] < (mu == 2 ? 1 : n[2]); ++i[2])
        for (i[3] = 0; i[3] < (mu == 3 ? 1 : n[3]); ++i[3])
          op(lat.index(i[0], i[1], i[2], i[3]), stride, count);
}

void first_difference(const Lattice4& lat, const std::vector<double>& f, int mu,
                      std::vector<double>& out) {
  const double h = lat.h[std::size_t(mu)];
  const bool per = lat.periodic[std::size_t(mu)];
  for_each_line(lat, mu, [&](std::size_t base, std::size_t s, std::size_t m) {
    if (per) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t jp = (j + 1) % m, jm = (j + m - 1) % m;
        out[base + j * s] = (f[base + jp * s] - f[base + jm * s]) / (2.0 * h);
      }
    } else {
      out[base] = (-3.0 * f[base] + 4.0 * f[base + s] - f[base + 2 * s]) / (2.0 * h);
      for (std::size_t j = 1; j + 1 < m; ++j)
        out[base + j * s] = (f[base + (j + 1) * s] - f[base + (j - 1) * s]) / (2.0 * h);
      const std::size_t e = m - 1;
      out[base + e * s] =
          (3.0 * f[base + e * s] - 4.0 * f[base + (e - 1) * s] + f[base + (e - 2) * s]) /
          (2.0 * h);
    }
  });
}

void second_difference(const Lattice4& lat, const std::vector<double>& f, int mu,
                       std::vector<double>& out) {
  const double h2 = lat.h[std::size_t(mu)] * lat.h[std::size_t(mu)];
  const bool per = lat.periodic[std::size_t(mu)];
  for_each_line(lat, mu, [&](std::size_t base, std::size_t s, std::size_t m) {
    if (per) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t jp = (j + 1) % m, jm = (j + m - 1) % m;
        out[base + j * s] =
            (f[base + jp * s] - 2.0 * f[base + j * s] + f[base + jm * s]) / h2;
      }
    } else {
      out[base] = (2.0 * f[base] - 5.0 * f[base + s] + 4.0 * f[base + 2 * s] -
                   f[base + 3 * s]) /
                  h2;
      for (std::size_t j = 1; j + 1 < m; ++j)
        out[base + j * s] = (f[base + (j + 1) * s] - 2.0 * f[base + j * s] +
                             f[base + (j - 1) * s]) /
                            h2;
      const std::size_t e = m - 1;
      out[base + e * s] = (2.0 * f[base + e * s] - 5.0 * f[base + (e - 1) * s] +
                           4.0 * f[base + (e - 2) * s] - f[base + (e - 3) * s]) /
                          h2;
    }
  });
}

void check_congruent(const Lattice4& a, const Lattice4& b, const char* who) {
  if (!a.congruent(b)) throw GridMismatch(std::string(who) + ": lattices not congruent");
}

}  // namespace

ScalarLattice partial(const ScalarLattice& f, int mu) {
  if (mu < 0 || mu > 3) throw ConfigError("partial: index must be in 0..3");
  ScalarLattice out(f.lattice);
  first_difference(f.lattice, f.values, mu, out.values);
  return out;
}

ScalarLattice divergence(const VecFieldLattice& pi) {
  ScalarLattice out(pi.lattice);
  std::vector<double> d(pi.lattice.size());
  for (int mu = 0; mu < 4; ++mu) {
    first_difference(pi.lattice, pi.comp[std::size_t(mu)], mu, d);
    for (std::size_t s = 0; s < d.size(); ++s) out.values[s] += d[s];
  }
  return out;
}

ScalarLattice dalembertian(const ScalarLattice& f) {
  ScalarLattice out(f.lattice);
  std::vector<double> d(f.lattice.size());
  for (int mu = 0; mu < 4; ++mu) {
    second_difference(f.lattice, f.values, mu, d);
    for (std::size_t s = 0; s < d.size(); ++s) out.values[s] += eta(mu) * d[s];
  }
  return out;
}

AntisymTensorLattice field_tensor(const VecFieldLattice& pi) {
  AntisymTensorLattice K(pi.lattice);
  std::vector<double> d(pi.lattice.size());
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const int slot = AntisymTensorLattice::slot(a, b);
      auto& out = K.comp[std::size_t(slot)];
      // d^a pi^b
      first_difference(pi.lattice, pi.comp[std::size_t(b)], a, d);
      for (std::size_t s = 0; s < d.size(); ++s) out[s] = eta(a) * d[s];
      // - d^b pi^a
      first_difference(pi.lattice, pi.comp[std::size_t(a)], b, d);
      for (std::size_t s = 0; s < d.size(); ++s) out[s] -= eta(b) * d[s];
    }
  return K;
}

ResidualReport residual_report(const ScalarLattice& f) {
  ResidualAccumulator acc;
  for (double v : f.values) acc.add(v);
  return acc.report();
}

ResidualReport maxwell_residual(const AntisymTensorLattice& K,
                                const VecFieldLattice& pi, double kappa) {
  check_congruent(K.lattice, pi.lattice, "maxwell_residual");
  ResidualAccumulator acc;
  std::vector<double> col(K.lattice.size());
  std::vector<double> d(K.lattice.size());
  for (int b = 0; b < 4; ++b) {
    std::fill(col.begin(), col.end(), 0.0);
    for (int a = 0; a < 4; ++a) {
      if (a == b) continue;
      const int slot = AntisymTensorLattice::slot(a, b);
      const double sign = (a < b) ? 1.0 : -1.0;
      first_difference(K.lattice, K.comp[std::size_t(slot)], a, d);
      for (std::size_t s = 0; s < d.size(); ++s) col[s] += sign * d[s];
    }
    for (std::size_t s = 0; s < col.size(); ++s)
      acc.add(col[s] - kappa * pi.comp[std::size_t(b)][s]);
  }
  return acc.report();
}

ResidualReport bianchi_residual(const AntisymTensorLattice& K) {
  static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  ResidualAccumulator acc;
  const std::size_t size = K.lattice.size();
  std::vector<double> term(size), d(size);
  for (const auto& t : triples) {
    const int a = t[0], b = t[1], c = t[2];
    std::fill(term.begin(), term.end(), 0.0);
    // d^a K^{bc}
    first_difference(K.lattice, K.comp[std::size_t(AntisymTensorLattice::slot(b, c))],
                     a, d);
    for (std::size_t s = 0; s < size; ++s) term[s] += eta(a) * d[s];
    // d^b K^{ca} = -d^b K^{ac}
    first_difference(K.lattice, K.comp[std::size_t(AntisymTensorLattice::slot(a, c))],
                     b, d);
    for (std::size_t s = 0; s < size; ++s) term[s] -= eta(b) * d[s];
    // d^c K^{ab}
    first_difference(K.lattice, K.comp[std::size_t(AntisymTensorLattice::slot(a, b))],
                     c, d);
    for (std::size_t s = 0; s < size; ++s) term[s] += eta(c) * d[s];
    for (std::size_t s = 0; s < size; ++s) acc.add(term[s]);
  }
  return acc.report();
}

namespace {

ResidualReport klein_gordon_residual(const Lattice4& lat,
                                     const std::array<const std::vector<double>*, 6>&
                                         comps,
                                     int ncomp, double mass_sq) {
  ResidualAccumulator acc;
  std::vector<double> box(lat.size()), d(lat.size());
  for (int c = 0; c < ncomp; ++c) {
    const std::vector<double>& f = *comps[std::size_t(c)];
    std::fill(box.begin(), box.end(), 0.0);
    for (int mu = 0; mu < 4; ++mu) {
      second_difference(lat, f, mu, d);
      for (std::size_t s = 0; s < d.size(); ++s) box[s] += eta(mu) * d[s];
    }
    for (std::size_t s = 0; s < box.size(); ++s) acc.add(box[s] + mass_sq * f[s]);
  }
  return acc.report();
}

}  // namespace

ResidualReport wave_residual(const VecFieldLattice& pi) {
  return klein_gordon_residual(
      pi.lattice, {&pi.comp[0], &pi.comp[1], &pi.comp[2], &pi.comp[3], nullptr, nullptr},
      4, 0.0);
}

ResidualReport proca_residual(const VecFieldLattice& pi, double lambda) {
  if (!(lambda > 0.0)) throw ConfigError("proca_residual: lambda must be positive");
  return klein_gordon_residual(
      pi.lattice, {&pi.comp[0], &pi.comp[1], &pi.comp[2], &pi.comp[3], nullptr, nullptr},
      4, 1.0 / (lambda * lambda));
}

ResidualReport proca_residual_K(const AntisymTensorLattice& K, double lambda) {
  if (!(lambda > 0.0)) throw ConfigError("proca_residual_K: lambda must be positive");
  return klein_gordon_residual(K.lattice,
                               {&K.comp[0], &K.comp[1], &K.comp[2], &K.comp[3],
                                &K.comp[4], &K.comp[5]},
                               6, 1.0 / (lambda * lambda));
}

namespace {

double pi_norm_integral(const VecFieldLattice& pi) {
  double den = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const auto& c = pi.comp[std::size_t(mu)];
    double s = 0.0;
    for (double v : c) s += v * v;
    den += eta(mu) * s;
  }
  return den * pi.lattice.cell_volume();
}

void require_kappa_preconditions(const VecFieldLattice& pi, double den) {
  if (!pi.lattice.fully_periodic())
    throw NonPeriodicLattice("kappa estimators require a fully periodic lattice");
  double scale = 0.0;
  for (const auto& c : pi.comp)
    for (double v : c) scale += v * v;
  scale *= pi.lattice.cell_volume();
  if (std::abs(den) <= 1e-12 * scale)
    throw VanishingDenominator("kappa estimator: pi_mu pi^mu integrates to ~0");
}

}  // namespace

KappaEstimate kappa_k1(const VecFieldLattice& pi) {
  const double den = pi_norm_integral(pi);
  require_kappa_preconditions(pi, den);

  double num = 0.0;
  std::vector<double> d(pi.lattice.size());
  for (int sigma = 0; sigma < 4; ++sigma)
    for (int mu = 0; mu < 4; ++mu) {
      first_difference(pi.lattice, pi.comp[std::size_t(mu)], sigma, d);
      double s = 0.0;
      for (double v : d) s += v * v;
      num += eta(sigma) * eta(mu) * s;
    }
  num *= pi.lattice.cell_volume();

  KappaEstimate est;
  est.numerator = num;
  est.denominator = den;
  est.value = -num / den;
  return est;
}

KappaEstimate kappa_k2(const VecFieldLattice& pi, double div_tol) {
  const double den = pi_norm_integral(pi);
  require_kappa_preconditions(pi, den);

  // derivative scale for the divergence check
  std::vector<double> d(pi.lattice.size());
  double deriv_sq = 0.0;
  for (int sigma = 0; sigma < 4; ++sigma)
    for (int mu = 0; mu < 4; ++mu) {
      first_difference(pi.lattice, pi.comp[std::size_t(mu)], sigma, d);
      for (double v : d) deriv_sq += v * v;
    }
  const double deriv_rms = std::sqrt(deriv_sq / double(16 * pi.lattice.size()));
  const ResidualReport div = residual_report(divergence(pi));
  if (div.rms > div_tol * deriv_rms)
    throw DivergenceTooLarge("kappa_k2: pi is not divergence-free at tolerance");

  const AntisymTensorLattice K = field_tensor(pi);
  double ksq = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const auto& c = K.comp[std::size_t(AntisymTensorLattice::slot(a, b))];
      double s = 0.0;
      for (double v : c) s += v * v;
      // K_ab K^ab counts each unordered pair twice; eta signs from lowering
      ksq += 2.0 * eta(a) * eta(b) * s;
    }
  ksq *= pi.lattice.cell_volume();

  KappaEstimate est;
  est.numerator = 0.5 * ksq;
  est.denominator = den;
  est.value = -0.5 * ksq / den;
  return est;
}

std::pair<ResidualReport, ResidualReport> first_model_residuals(
    const VecFieldLattice& v, double n0c) {
  if (!(n0c > 0.0)) throw ConfigError("first_model_residuals: n0c must be positive");
  VecFieldLattice pi(v.lattice);
  const std::size_t size = v.lattice.size();
  for (std::size_t s = 0; s < size; ++s) {
    const Vec4 vv{v.comp[0][s], v.comp[1][s], v.comp[2][s], v.comp[3][s]};
    const double norm2 = minkowski_dot(vv, vv);
    if (!(norm2 > 0.0))
      throw NonTimelikeField("first_model_residuals: v_nu v^nu <= 0 at a site");
    const double rho = n0c / std::sqrt(norm2);
    for (int mu = 0; mu < 4; ++mu)
      pi.comp[std::size_t(mu)][s] = rho * vv[std::size_t(mu)];
  }
  return {wave_residual(pi), residual_report(divergence(pi))};
}

namespace {

void check_commensurate(const Vec4& k_cov, const Lattice4& lat) {
  for (int mu = 0; mu < 4; ++mu) {
    if (!lat.periodic[std::size_t(mu)]) continue;
    const double L = lat.h[std::size_t(mu)] * double(lat.n[std::size_t(mu)]);
    const double cycles = k_cov[std::size_t(mu)] * L / (2.0 * M_PI);
    if (std::abs(cycles - std::round(cycles)) > 1e-9)
      throw IncommensurateWave("plane wave incommensurate with periodic lattice");
  }
}

template <typename PerSite>
void for_each_site(const Lattice4& lat, PerSite&& f) {
  std::array<std::size_t, 4> i{};
  std::size_t s = 0;
  for (i[0] = 0; i[0] < lat.n[0]; ++i[0])
    for (i[1] = 0; i[1] < lat.n[1]; ++i[1])
      for (i[2] = 0; i[2] < lat.n[2]; ++i[2])
        for (i[3] = 0; i[3] < lat.n[3]; ++i[3], ++s) f(i, s);
}

}  // namespace

VecFieldLattice make_plane_wave(const Vec4& eps, const Vec4& k_cov, double phase,
                                const Lattice4& lat) {
  check_commensurate(k_cov, lat);
  VecFieldLattice pi(lat);
  for_each_site(lat, [&](const std::array<std::size_t, 4>& i, std::size_t s) {
    double theta = phase;
    for (int mu = 0; mu < 4; ++mu)
      theta += k_cov[std::size_t(mu)] * lat.coord(mu, i[std::size_t(mu)]);
    const double c = std::cos(theta);
    for (int mu = 0; mu < 4; ++mu) pi.comp[std::size_t(mu)][s] = eps[std::size_t(mu)] * c;
  });
  return pi;
}

AntisymTensorLattice sample_plane_wave_tensor(const Vec4& eps, const Vec4& k_cov,
                                              double phase, const Lattice4& lat) {
  check_commensurate(k_cov, lat);
  const Vec4 k_up = raise_index(k_cov);
  AntisymTensorLattice K(lat);
  for_each_site(lat, [&](const std::array<std::size_t, 4>& i, std::size_t s) {
    double theta = phase;
    for (int mu = 0; mu < 4; ++mu)
      theta += k_cov[std::size_t(mu)] * lat.coord(mu, i[std::size_t(mu)]);
    const double msin = -std::sin(theta);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        K.comp[std::size_t(AntisymTensorLattice::slot(a, b))][s] =
            msin * (k_up[std::size_t(a)] * eps[std::size_t(b)] -
                    k_up[std::size_t(b)] * eps[std::size_t(a)]);
  });
  return K;
}

double wave_norm(const Vec4& k_cov) {
  return k_cov[0] * k_cov[0] - k_cov[1] * k_cov[1] - k_cov[2] * k_cov[2] -
         k_cov[3] * k_cov[3];
}

}  // namespace mayer
