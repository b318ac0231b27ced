#include "mayer/variational.hpp"

#include <cmath>

namespace mayer {

VelocitySpec VelocitySpec::from_aux(const LinearAux& aux, double scale) {
  if (!(scale > 0.0)) throw ConfigError("VelocitySpec: scale must be positive");
  VelocitySpec s;
  s.kind = Kind::FromAux;
  s.aux = aux;
  s.scale = scale;
  return s;
}

VelocitySpec VelocitySpec::explicit_constant(const Vec4& v) {
  VelocitySpec s;
  s.kind = Kind::ExplicitConstant;
  s.constant = v;
  return s;
}

VelocitySpec VelocitySpec::custom_field(std::function<Vec4(const Vec4&)> f) {
  VelocitySpec s;
  s.kind = Kind::Custom;
  s.custom = std::move(f);
  return s;
}

Vec4 VelocitySpec::evaluate(const Vec4& x) const {
  switch (kind) {
    case Kind::FromAux: {
      const Vec4 p_up = raise_index(aux.p);
      return {scale * p_up[0], scale * p_up[1], scale * p_up[2], scale * p_up[3]};
    }
    case Kind::ExplicitConstant:
      return constant;
    case Kind::Custom:
      return custom(x);
  }
  return {};
}

std::pair<double, double> free_lagrangian(const Vec4& v, double m, double c) {
  const double norm2 = minkowski_dot(v, v);
  if (!(norm2 > 0.0))
    throw NonTimelikeVelocity("free_lagrangian: v_nu v^nu must be positive");
  const double phi = std::sqrt(norm2);
  return {m * c * phi, phi};
}

FundamentalResiduals fundamental_residuals(const VelocitySpec& spec,
                                           const LinearAux& aux, const Vec4& x,
                                           double m, double c) {
  const Vec4 v = spec.evaluate(x);
  const auto [L, phi] = free_lagrangian(v, m, c);

  FundamentalResiduals out;
  double vdS = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    vdS += v[std::size_t(mu)] * aux.p[std::size_t(mu)];
  out.first = L - vdS;

  const Vec4 v_low = raise_index(v);  // lowering is the same sign flip
  for (int mu = 0; mu < 4; ++mu)
    out.second[std::size_t(mu)] =
        m * c * v_low[std::size_t(mu)] / phi - aux.p[std::size_t(mu)];
  return out;
}

double hj_residual(const LinearAux& aux, double m, double c) {
  const Vec4 p_up = raise_index(aux.p);
  double norm = 0.0;
  for (int mu = 0; mu < 4; ++mu) norm += aux.p[std::size_t(mu)] * p_up[std::size_t(mu)];
  return norm - m * m * c * c;
}

namespace {

std::vector<Vec4> integrate_flow(const VelocitySpec& spec, const Vec4& seed_x,
                                 double s_max, std::size_t steps) {
  if (steps == 0) throw ConfigError("flow integration: steps must be >= 1");
  const double ds = s_max / double(steps);
  std::vector<Vec4> path;
  path.reserve(steps + 1);
  Vec4 x = seed_x;
  path.push_back(x);
  auto add = [](const Vec4& a, const Vec4& b, double w) {
    return Vec4{a[0] + w * b[0], a[1] + w * b[1], a[2] + w * b[2], a[3] + w * b[3]};
  };
  for (std::size_t i = 0; i < steps; ++i) {
    const Vec4 k1 = spec.evaluate(x);
    const Vec4 k2 = spec.evaluate(add(x, k1, 0.5 * ds));
    const Vec4 k3 = spec.evaluate(add(x, k2, 0.5 * ds));
    const Vec4 k4 = spec.evaluate(add(x, k3, ds));
    for (int mu = 0; mu < 4; ++mu)
      x[std::size_t(mu)] += ds / 6.0 *
                            (k1[std::size_t(mu)] + 2.0 * k2[std::size_t(mu)] +
                             2.0 * k3[std::size_t(mu)] + k4[std::size_t(mu)]);
    path.push_back(x);
  }
  return path;
}

double euclidean_norm(const Vec4& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

}  // namespace

double straightness_check(const VelocitySpec& spec, const Vec4& seed_x, double s_max,
                          std::size_t steps) {
  const std::vector<Vec4> path = integrate_flow(spec, seed_x, s_max, steps);
  const Vec4& a = path.front();
  const Vec4& b = path.back();
  Vec4 chord{};
  for (int mu = 0; mu < 4; ++mu)
    chord[std::size_t(mu)] = b[std::size_t(mu)] - a[std::size_t(mu)];
  const double chord_len = euclidean_norm(chord);

  double path_len = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    Vec4 d{};
    for (int mu = 0; mu < 4; ++mu)
      d[std::size_t(mu)] = path[i][std::size_t(mu)] - path[i - 1][std::size_t(mu)];
    path_len += euclidean_norm(d);
  }
  if (!(path_len > 0.0)) return 0.0;

  // distance from the chord: component of (x - a) orthogonal to chord
  double max_dev = 0.0;
  for (const Vec4& x : path) {
    Vec4 r{};
    for (int mu = 0; mu < 4; ++mu)
      r[std::size_t(mu)] = x[std::size_t(mu)] - a[std::size_t(mu)];
    double dev;
    if (chord_len > 0.0) {
      double t = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        t += r[std::size_t(mu)] * chord[std::size_t(mu)];
      t /= chord_len * chord_len;
      Vec4 perp{};
      for (int mu = 0; mu < 4; ++mu)
        perp[std::size_t(mu)] = r[std::size_t(mu)] - t * chord[std::size_t(mu)];
      dev = euclidean_norm(perp);
    } else {
      dev = euclidean_norm(r);
    }
    max_dev = std::max(max_dev, dev);
  }
  return max_dev / path_len;
}

ResidualReport euler_lagrange_residual(const VelocitySpec& spec, const Vec4& seed_x,
                                       double s_max, std::size_t steps, double m,
                                       double c) {
  const std::vector<Vec4> path = integrate_flow(spec, seed_x, s_max, steps);
  const double ds = s_max / double(steps);

  // analytic conjugate momentum m*c*v_mu/phi along the curve
  std::vector<Vec4> mom(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vec4 v = spec.evaluate(path[i]);
    const auto [L, phi] = free_lagrangian(v, m, c);
    (void)L;
    const Vec4 v_low = raise_index(v);
    for (int mu = 0; mu < 4; ++mu)
      mom[i][std::size_t(mu)] = m * c * v_low[std::size_t(mu)] / phi;
  }

  // dL/dx^mu = 0 for the free Lagrangian, so the residual is d(mom)/ds alone
  ResidualAccumulator acc;
  for (std::size_t i = 1; i + 1 < mom.size(); ++i)
    for (int mu = 0; mu < 4; ++mu)
      acc.add((mom[i + 1][std::size_t(mu)] - mom[i - 1][std::size_t(mu)]) / (2.0 * ds));
  return acc.report();
}

}  // namespace mayer
