#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "mayer/current_inversion.hpp"

using namespace mayer;
using doctest::Approx;

TEST_CASE("build_M structure") {
  const double n0c = 1.5;
  const double s2 = n0c * n0c;

  // pi = 0: scaled identity
  const Mat4 I = build_M({{0, 0, 0, 0}, n0c});
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(I[std::size_t(r)][std::size_t(c)] ==
            Approx(r == c ? s2 : 0.0).epsilon(1e-15));

  // pi = (n0c,0,0,0): row 0 is (0, s2, s2, s2), rows 1..3 stay diagonal
  const Mat4 M = build_M({{n0c, 0, 0, 0}, n0c});
  CHECK(M[0][0] == Approx(0.0).epsilon(1e-15));
  for (int c = 1; c < 4; ++c) CHECK(M[0][std::size_t(c)] == Approx(s2).epsilon(1e-15));
  for (int r = 1; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(M[std::size_t(r)][std::size_t(c)] ==
            Approx(r == c ? s2 : 0.0).epsilon(1e-15));

  // only squares of the components enter
  const CurrentSample plus{{0.7, -1.2, 0.4, 2.0}, n0c};
  const CurrentSample minus{{-0.7, 1.2, -0.4, -2.0}, n0c};
  const Mat4 A = build_M(plus), B = build_M(minus);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(A[std::size_t(r)][std::size_t(c)] == B[std::size_t(r)][std::size_t(c)]);

  CHECK_THROWS_AS(build_M({{1, 0, 0, 0}, 0.0}), ConfigError);
}

TEST_CASE("determinant identity") {
  const double n0c = 1.0;
  CHECK(det_M({{0, 0, 0, 0}, n0c}).numeric == Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const CurrentSample c{{unif(rng), unif(rng), unif(rng), unif(rng)}, n0c};
    const DetPair d = det_M(c);
    CHECK(std::abs(d.numeric - d.closed_form) <=
          1e-12 * std::max(1.0, std::abs(d.closed_form)));
  }

  // normalized current: det vanishes, a nontrivial kernel exists
  const double chi = 0.8;
  const DetPair dz =
      det_M({{n0c * std::cosh(chi), n0c * std::sinh(chi), 0, 0}, n0c});
  CHECK(std::abs(dz.closed_form) <= 1e-14);
  CHECK(std::abs(dz.numeric) <= 1e-12);
}

TEST_CASE("recover_velocity") {
  const double n0c = 1.0;
  const auto rest = recover_velocity({{n0c, 0, 0, 0}, n0c}, 1.0);
  CHECK(rest.v == Vec4{n0c, 0, 0, 0});
  CHECK(rest.rho == Approx(1.0).epsilon(1e-15));
  CHECK(minkowski_dot(rest.v, rest.v) == Approx(n0c * n0c).epsilon(1e-14));

  const double chi = 0.9;
  const CurrentSample boosted{
      {n0c * std::cosh(chi), n0c * std::sinh(chi), 0, 0}, n0c};
  for (double s : {0.1, 1.0, 10.0}) {
    const auto rv = recover_velocity(boosted, s);
    for (int mu = 0; mu < 4; ++mu)
      CHECK(rv.rho * rv.v[std::size_t(mu)] ==
            Approx(boosted.pi[std::size_t(mu)]).epsilon(1e-14));
    // phi(v) = s * n0c
    CHECK(std::sqrt(minkowski_dot(rv.v, rv.v)) == Approx(s * n0c).epsilon(1e-13));
  }

  // unnormalized current: det M != 0, only the trivial solution
  const CurrentSample off{{std::sqrt(2.0) * n0c * std::cosh(chi),
                           std::sqrt(2.0) * n0c * std::sinh(chi), 0, 0},
                          n0c};
  CHECK_THROWS_AS(recover_velocity(off, 1.0), NoNontrivialSolution);

  // spacelike current rejected before the normalization test
  CHECK_THROWS_AS(recover_velocity({{0.2, 1.0, 0, 0}, n0c}, 1.0), NotTimelike);
}
