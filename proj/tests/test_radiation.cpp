#include <doctest.h>

#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/fields.hpp"
#include "scalartail/motions.hpp"
#include "scalartail/radiation.hpp"
#include "scalartail/specfun.hpp"
#include "support/oracles.hpp"

using namespace scalartail;

namespace {
constexpr double kFourPi = 4.0 * 3.141592653589793238462643383279502884;
}

TEST_CASE("stress energy basics") {
  const SymTensor4 zero = stress_energy({}, 0.0, 1.0);
  CHECK(zero.max_abs() == 0.0);

  // null gradient, k0 = 0: T ~ k k, traceless
  const FourVector k{1, 1, 0, 0};
  const SymTensor4 t = stress_energy(k * 0.7, 0.3, 0.0);
  CHECK(std::fabs(t.trace()) < 1e-16);
  CHECK(t(0, 0) == doctest::Approx(0.49 / kFourPi));
  CHECK(t(0, 1) == doctest::Approx(0.49 / kFourPi));
  CHECK(t.max_asymmetry() == 0.0);

  // static Yukawa T^00 = (1/8pi)[(phi')^2 + k0^2 phi^2]
  const double g = 0.8, k0 = 1.3, r = 1.7;
  const double phi = yukawa_potential(g, k0, r);
  const double dphi = yukawa_potential_gradient(g, k0, r);
  const SymTensor4 ty = stress_energy({0.0, dphi, 0.0, 0.0}, phi, k0);
  CHECK(ty(0, 0) ==
        doctest::Approx((dphi * dphi + k0 * k0 * phi * phi) / (2 * kFourPi))
            .epsilon(1e-14));
}

TEST_CASE("massless split") {
  const WorldlineSample rest{0.0, {0, 0, 0, 0}, {1, 0, 0, 0},
                             {0, 0.6, 0, 0}};
  const FourVector n{0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0};
  const FourVector k = rest.u + n;
  const double r = 2.2, g = 0.9;

  // a = 0: no radiative part
  WorldlineSample inertial = rest;
  inertial.a = {};
  CHECK(massless_split(inertial, k, r, g).rad.max_abs() == 0.0);

  // T_rad^00 = g^2 (a.n)^2/(4 pi r^2) in the rest frame
  const MasslessSplit split = massless_split(rest, k, r, g);
  const double an = dot(rest.a, k);
  CHECK(split.rad(0, 0) ==
        doctest::Approx(g * g * an * an / (kFourPi * r * r)).epsilon(1e-14));

  // rad + bound equals the stress tensor of the direct massless field
  const FourVector grad_direct =
      k * (-g * an / r) + (k - rest.u) * (-g / (r * r));
  const SymTensor4 direct = stress_energy(grad_direct, 0.0, 0.0);
  const SymTensor4 sum = split.rad + split.bound;
  CHECK((sum - direct).max_abs() < 1e-12 * direct.max_abs() + 1e-15);

  // non-null k rejected
  const FourVector bad{1, 0.5, 0, 0};
  CHECK_THROWS_AS(massless_split(rest, bad, r, g), DomainError);
}

TEST_CASE("angular moments closed forms") {
  CHECK(angular_moment_0() == 1.0);

  const FourVector rest{1, 0, 0, 0};
  CHECK(max_abs(angular_moment_1(rest) - rest) == 0.0);
  const SymTensor4 m2 = angular_moment_2(rest);
  CHECK(m2(0, 0) == doctest::Approx(1.0));
  CHECK(m2(1, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(m2(2, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(m2(0, 1) == 0.0);

  // contraction identities: (1/4pi) int (k.k) k^... = 0
  const FourVector u{std::sqrt(2.0), 1.0, 0, 0};
  const SymTensor4 mb2 = angular_moment_2(u);
  CHECK(std::fabs(mb2.trace()) < 1e-14);
  const Rank3Tensor4 mb3 = angular_moment_3(u);
  for (int a = 0; a < 4; ++a) {
    double tr = -mb3[a][0][0] + mb3[a][1][1] + mb3[a][2][2] + mb3[a][3][3];
    CHECK(std::fabs(tr) < 1e-14);
  }

  const FourVector not_unit{1, 0.5, 0, 0};
  CHECK_THROWS_AS(angular_moment_1(not_unit), DomainError);
}

TEST_CASE("direct radiated momentum: uniform motion and kicked arc") {
  const double g = 0.7;
  const Worldline uniform = Worldline::uniform_line(
      {0, 0, 0, 0}, {1.25, 0.75, 0, 0}, -10.0, 10.0, 41);
  CHECK(max_abs(p_dir_rad(uniform, g, 8.0)) < 1e-15);
  CHECK(M_dir_rad(uniform, g, 8.0).max_abs() < 1e-15);

  const SmoothMotion kick =
      kicked_motion(0.8, -2.0, 2.0, {0, 0, 1}, {-6, 0, 0, 0}, -6.0);
  const Worldline line = discretize_motion(kick, -6.0, 6.0, 481);

  // independent Simpson oracle on the analytic motion
  const auto rate = [&](double s) -> std::array<double, 4> {
    const FourVector u = kick.velocity(s);
    const FourVector a = kick.acceleration(s);
    const double a2 = dot(a, a);
    return {a2 * u.t, a2 * u.x, a2 * u.y, a2 * u.z};
  };
  const auto want = oracle::simpson_vec(rate, -2.0, 2.0, 4000);
  const FourVector got = p_dir_rad(line, g, 5.0);
  for (int i = 0; i < 4; ++i)
    CHECK(got[i] == doctest::Approx(g * g / 3.0 * want[i]).epsilon(1e-8));

  // half-Larmor rate on the arc: d p^0/dtau = (g^2/3) a^2 u^0
  const double h = 1e-3;
  const double fd =
      (max_abs(p_dir_rad(line, g, 0.0 + h) - p_dir_rad(line, g, 0.0 - h))) /
      (2 * h);
  const FourVector u0 = kick.velocity(0.0);
  const FourVector a0 = kick.acceleration(0.0);
  CHECK(fd == doctest::Approx(g * g / 3.0 * dot(a0, a0) * u0.t).epsilon(1e-5));
}

TEST_CASE("direct radiated angular momentum vs quadrature oracle") {
  const double g = 0.7;
  const SmoothMotion kick =
      kicked_motion(0.8, -2.0, 2.0, {0, 0, 1}, {-6, 0, 0, 0}, -6.0);
  const Worldline line = discretize_motion(kick, -6.0, 6.0, 481);

  const oracle::CachedMotion cache(kick, -6.0, 6.0, 1200);
  const auto rate = [&](double s) -> std::array<double, 6> {
    const WorldlineSample smp = cache.sample(s);
    const AntisymTensor4 m =
        wedge(smp.z, smp.u) * dot(smp.a, smp.a) + wedge(smp.u, smp.a);
    return m.c;
  };
  const auto want = oracle::simpson_vec(rate, -2.0, 2.0, 4000);
  const AntisymTensor4 got = M_dir_rad(line, g, 5.0);
  for (int i = 0; i < 6; ++i)
    CHECK(got.c[i] == doctest::Approx(g * g / 3.0 * want[i]).epsilon(1e-7));

  // antisymmetry is structural
  CHECK(got(1, 2) == -got(2, 1));
  CHECK(got(0, 0) == 0.0);
}

TEST_CASE("tail kernel") {
  const ChargeParams p{1.0, 0.8, 1.4};

  // uniform motion: f(z1,z2) = f(z2,z1) (both vanish identically)
  const FourVector u{1.25, 0.75, 0, 0};
  const WorldlineSample s1{1.0, u * 1.0, u, {}};
  const WorldlineSample s2{-1.5, u * -1.5, u, {}};
  const TailKernelEval k12 = tail_kernel(s1, s2, p);
  CHECK(max_abs(k12.f) < 1e-15);
  CHECK(k12.r2 == doctest::Approx(2.5));
  CHECK(k12.w == doctest::Approx(p.k0 * 2.5));

  // static worldline, dtau = 1/k0: componentwise vs the direct formula
  const WorldlineSample a1{0.0, {0, 0, 0, 0}, {1, 0, 0, 0}, {}};
  const WorldlineSample a2{-1.0 / p.k0,
                           {-1.0 / p.k0, 0, 0, 0},
                           {1, 0, 0, 0},
                           {}};
  const TailKernelEval ks = tail_kernel(a1, a2, p);
  const double dtau = 1.0 / p.k0;
  // f = g k0 J1(k0 dtau)/dtau [ q/r2^2 - u/r2 ], q = (dtau,0,0,0), r2 = dtau
  const double pref = p.g * p.k0 * bessel_j1(p.k0 * dtau) / dtau;
  CHECK(ks.f.t ==
        doctest::Approx(pref * (dtau / (dtau * dtau) - 1.0 / dtau)));
  CHECK(ks.w == doctest::Approx(1.0));

  // spacelike separation rejected
  const WorldlineSample b2{-0.1, {-0.1, 3.0, 0, 0}, {1, 0, 0, 0}, {}};
  CHECK_THROWS_AS(tail_kernel(a1, b2, p), DomainError);
}

TEST_CASE("tail forces: trivial cases") {
  const ChargeParams p{1.0, 0.8, 1.2};
  const Worldline uniform = Worldline::uniform_line(
      {0, 0, 0, 0}, {1.25, 0.75, 0, 0}, -10.0, 10.0, 41);

  const auto [fr, fa] = tail_forces(uniform, p, 3.0, 3.0);
  CHECK(max_abs(fa) == 0.0);           // empty interval
  CHECK(max_abs(fr) < 1e-11);          // uniform motion

  const ChargeParams massless{1.0, 0.8, 0.0};
  const auto [fr0, fa0] = tail_forces(uniform, massless, 1.0, 3.0);
  CHECK(max_abs(fr0) == 0.0);
  CHECK(max_abs(fa0) == 0.0);
}

TEST_CASE("advanced tail force vs direct Simpson") {
  const ChargeParams p{1.0, 0.8, 1.2};
  const SmoothMotion kick =
      kicked_motion(0.7, -3.0, 1.0, {1, 0, 0}, {-8, 0, 0, 0}, -8.0);
  const Worldline line = discretize_motion(kick, -8.0, 6.0, 561);
  const double tau1 = -1.0, tau = 4.0;
  const auto [fr, fa] = tail_forces(line, p, tau1, tau);

  const oracle::CachedMotion cache(kick, -8.0, 6.0, 1400);
  const WorldlineSample s1 = cache.sample(tau1);
  const auto f_adv = [&](double t2) -> std::array<double, 4> {
    const WorldlineSample s2 = cache.sample(t2);
    const FourVector q = s1.z - s2.z;
    const double w = p.k0 * std::sqrt(std::max(0.0, -dot(q, q)));
    const double kappa = p.k0 * p.k0 * kernel_j1_over_w(w);
    const double r2 = -dot(q, s2.u);
    FourVector br;
    if (t2 - tau1 < 1e-7)
      br = s2.a * 0.5;
    else
      br = q * ((1.0 + dot(q, s2.a)) / (r2 * r2)) - s2.u * (1.0 / r2);
    const FourVector v = br * (p.g * p.g * kappa);
    return {v.t, v.x, v.y, v.z};
  };
  const auto want = oracle::simpson_vec(f_adv, tau1, tau, 4000);
  for (int i = 0; i < 4; ++i)
    CHECK(fa[i] == doctest::Approx(want[i]).epsilon(1e-7));
}

TEST_CASE("tail Noether flows on uniform motion") {
  const ChargeParams p{1.0, 0.6, 1.0};
  const Worldline uniform = Worldline::uniform_line(
      {0, 0, 0, 0}, {1.25, 0.75, 0, 0}, -10.0, 10.0, 41);

  CHECK(max_abs(p_tail_rad(uniform, p, 8.0)) < 1e-10);
  CHECK(M_tail_rad(uniform, p, 8.0).max_abs() < 1e-10);

  const FourVector u = uniform.eval(8.0).u;
  const FourVector bound = p_tail_bound(uniform, p, 8.0);
  const FourVector want = u * (-0.5 * p.g * p.g * p.k0);
  CHECK(max_abs(bound - want) < 1e-9);
}

TEST_CASE("radiative tail momentum vs brute-force nested oracle") {
  const ChargeParams p{1.0, 0.5, 1.0};
  const SmoothMotion kick =
      kicked_motion(0.6, -3.0, 0.0, {1, 0, 0}, {-9, 0, 0, 0}, -9.0);
  const Worldline line = discretize_motion(kick, -9.0, 5.0, 561);
  const double tau = 3.0;

  const FourVector got = p_tail_rad(line, p, tau);

  // Brute force: outer Simpson over tau1 in [-9, tau] (the integrand vanishes
  // when both points sit on the uniform prehistory), inner split into a
  // Simpson part on [-9, tau1] and an independently accelerated oscillatory
  // tail over the straight prehistory.
  const oracle::CachedMotion cache(kick, -9.0, 5.0, 1400);
  const auto sym_integrand = [&](const WorldlineSample& s1, double t2) {
    const WorldlineSample s2 = cache.sample(t2);
    const FourVector q = s1.z - s2.z;
    const double w = p.k0 * std::sqrt(std::max(0.0, -dot(q, q)));
    const double kappa = p.k0 * p.k0 * kernel_j1_over_w(w);
    const double r2 = -dot(q, s2.u);
    const double r1 = -dot(q, s1.u);
    const FourVector br = q * ((1.0 + dot(q, s2.a)) / (r2 * r2) +
                               (1.0 - dot(q, s1.a)) / (r1 * r1)) -
                          s2.u * (1.0 / r2) - s1.u * (1.0 / r1);
    return br * kappa;
  };

  const auto inner = [&](double t1) -> std::array<double, 4> {
    const WorldlineSample s1 = cache.sample(t1);
    std::array<double, 4> acc{};
    if (t1 > -9.0) {
      const auto f = [&](double t2) -> std::array<double, 4> {
        if (t1 - t2 < 1e-6) return {};
        const FourVector v = sym_integrand(s1, t2);
        return {v.t, v.x, v.y, v.z};
      };
      acc = oracle::simpson_vec(f, -9.0, t1, 600);
    }
    for (int c = 0; c < 4; ++c) {
      const double v = oracle::oscillatory_tail(
          [&](double xi) {
            if (t1 - (-9.0 - xi) < 1e-6) return 0.0;
            return sym_integrand(s1, -9.0 - xi)[c];
          },
          0.0, 0.7, 40);
      acc[c] += v;
    }
    return acc;
  };

  const auto outer = oracle::simpson_vec(inner, -9.0, tau, 72);
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(std::fabs(got[i] - (-0.5 * p.g * p.g) * outer[i]) < 1e-6);
  }
}

TEST_CASE("ordering identity for the radiative double integral") {
  // Swapping the double-integration order (and the kernel arguments) leaves
  // the triangle integral unchanged.
  const ChargeParams p{1.0, 0.5, 1.0};
  const SmoothMotion kick =
      kicked_motion(0.6, -3.0, 0.0, {1, 0, 0}, {-9, 0, 0, 0}, -9.0);
  const double tau = 2.0;

  const oracle::CachedMotion cache(kick, -9.0, 5.0, 1400);
  const auto f_pair = [&](double t1, double t2) {
    const WorldlineSample s1 = cache.sample(t1);
    const WorldlineSample s2 = cache.sample(t2);
    const FourVector q = s1.z - s2.z;
    const double w = p.k0 * std::sqrt(std::max(0.0, -dot(q, q)));
    const double kappa = p.k0 * p.k0 * kernel_j1_over_w(w);
    const double r2 = -dot(q, s2.u);
    return (q * ((1.0 + dot(q, s2.a)) / (r2 * r2)) - s2.u * (1.0 / r2)) *
           kappa;
  };

  // A = int_{-6}^{tau} dt1 int_{-6}^{t1} dt2 [f(t1,t2) - f(t2,t1)]
  const auto inner_a = [&](double t1) -> std::array<double, 4> {
    const auto f = [&](double t2) -> std::array<double, 4> {
      if (t1 - t2 < 1e-6) return {};
      const FourVector v = f_pair(t1, t2) - f_pair(t2, t1);
      return {v.t, v.x, v.y, v.z};
    };
    return oracle::simpson_vec(f, -6.0, t1, 240);
  };
  // B = int_{-6}^{tau} dt1 int_{t1}^{tau} dt2 [f(t2,t1) - f(t1,t2)]
  const auto inner_b = [&](double t1) -> std::array<double, 4> {
    const auto f = [&](double t2) -> std::array<double, 4> {
      if (t2 - t1 < 1e-6) return {};
      const FourVector v = f_pair(t2, t1) - f_pair(t1, t2);
      return {v.t, v.x, v.y, v.z};
    };
    return oracle::simpson_vec(f, t1, tau, 240);
  };
  const auto A = oracle::simpson_vec(inner_a, -6.0, tau, 112);
  const auto B = oracle::simpson_vec(inner_b, -6.0, tau, 112);
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(A[i] - B[i]) < 5e-8);
}
