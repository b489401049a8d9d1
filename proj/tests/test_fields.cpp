#include <doctest.h>

#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/fields.hpp"
#include "scalartail/motions.hpp"

using namespace scalartail;

namespace {

Worldline static_line(double tau_min = -80.0, double tau_max = 2.0) {
  return Worldline::uniform_line({tau_min, 0, 0, 0}, {1, 0, 0, 0}, tau_min,
                                 tau_max, 83);
}

}  // namespace

TEST_CASE("static charge reduces to the Yukawa potential") {
  const ChargeParams p{1.0, 0.9, 1.0};
  const Worldline line = static_line();
  for (int i = 0; i < 50; ++i) {
    const double r = 0.1 * std::pow(100.0, i / 49.0);
    const FourVector x{0.0, r, 0.0, 0.0};
    const double phi = phi_retarded(line, p, x);
    const double want = yukawa_potential(p.g, p.k0, r);
    CHECK(std::fabs(phi - want) / want < 1e-8);
  }
}

TEST_CASE("massless limit: exact Coulomb-like potential, zero tail") {
  const ChargeParams p{1.0, 0.9, 0.0};
  const Worldline line = static_line();
  const FourVector x{0.0, 2.5, 0.0, 0.0};
  CHECK(phi_retarded(line, p, x) == doctest::Approx(p.g / 2.5).epsilon(1e-11));
  const FieldStrength f = grad_phi_retarded(line, p, x);
  CHECK(max_abs(f.tail_part) == 0.0);
  CHECK(f.grad.x == doctest::Approx(-p.g / (2.5 * 2.5)).epsilon(1e-11));
  CHECK(std::fabs(f.grad.t) < 1e-14);
}

TEST_CASE("static advanced potential equals the retarded one") {
  const ChargeParams p{1.0, 0.5, 1.3};
  const Worldline line =
      Worldline::uniform_line({-60.0, 0, 0, 0}, {1, 0, 0, 0}, -60.0, 60.0, 121);
  for (const double r : {0.3, 1.0, 4.0}) {
    const FourVector x{0.0, 0.0, r, 0.0};
    const double ret = phi_retarded(line, p, x);
    const double adv = phi_advanced(line, p, x);
    CHECK(adv == doctest::Approx(ret).epsilon(1e-9));
    CHECK(ret ==
          doctest::Approx(yukawa_potential(p.g, p.k0, r)).epsilon(1e-8));

    const FieldStrength fr = grad_phi_retarded(line, p, x);
    const FieldStrength fa = grad_phi_advanced(line, p, x);
    CHECK(max_abs(fr.grad - fa.grad) < 1e-8);
    CHECK(fr.grad.y ==
          doctest::Approx(yukawa_potential_gradient(p.g, p.k0, r))
              .epsilon(1e-8));
    CHECK(std::fabs(fr.grad.t) < 1e-9);
  }
}

TEST_CASE("advanced tail without posthistory raises HistoryExhausted") {
  std::vector<WorldlineSample> samples;
  for (int i = 0; i <= 40; ++i) {
    const double tau = -20.0 + i;
    samples.push_back({tau, {tau, 0, 0, 0}, {1, 0, 0, 0}, {}});
  }
  const Worldline line(samples);  // prehistory only
  const ChargeParams p{1.0, 0.5, 1.0};
  CHECK_THROWS_AS(phi_advanced(line, p, {0.0, 1.0, 0.0, 0.0}),
                  HistoryExhausted);
  // massless advanced works without the closure
  const ChargeParams p0{1.0, 0.5, 0.0};
  CHECK(phi_advanced(line, p0, {0.0, 1.0, 0.0, 0.0}) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("boosted charge matches the boosted Yukawa solution") {
  const double v = 0.6;
  const double gamma = 1.0 / std::sqrt(1.0 - v * v);
  const ChargeParams p{1.0, 0.8, 1.2};
  const Worldline line = Worldline::uniform_line(
      {0, 0, 0, 0}, {gamma, gamma * v, 0, 0}, -120.0, 120.0, 241);

  const auto boosted = [&](const FourVector& x) {
    const double rp = std::sqrt(gamma * gamma * (x.x - v * x.t) *
                                    (x.x - v * x.t) +
                                x.y * x.y + x.z * x.z);
    return yukawa_potential(p.g, p.k0, rp);
  };

  for (const FourVector x : {FourVector{0.0, 1.5, 0.0, 0.0},
                             FourVector{2.0, 0.3, 1.2, -0.4},
                             FourVector{-1.0, -0.8, 0.5, 0.9}}) {
    CAPTURE(x.t);
    const double phi = phi_retarded(line, p, x);
    CHECK(std::fabs(phi - boosted(x)) / std::fabs(boosted(x)) < 1e-7);
    const double adv = phi_advanced(line, p, x);
    CHECK(std::fabs(adv - boosted(x)) / std::fabs(boosted(x)) < 1e-7);
  }
}

TEST_CASE("gradient matches central differences of the potential") {
  const ChargeParams p{1.0, 0.6, 1.0};
  const SmoothMotion motion =
      kicked_motion(0.5, -6.0, -2.0, {1, 0, 0}, {-20, 0, 0, 0}, -20.0);
  const Worldline line = discretize_motion(motion, -20.0, 4.0, 601);

  const FourVector x{1.0, 2.0, 1.0, 0.5};
  const FieldStrength f = grad_phi_retarded(line, p, x);
  const double h = 1e-4 / p.k0;
  for (int mu = 0; mu < 4; ++mu) {
    FourVector xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    const double fd =
        (phi_retarded(line, p, xp) - phi_retarded(line, p, xm)) / (2.0 * h);
    // raise the index: contravariant time component flips sign
    const double want = mu == 0 ? -fd : fd;
    CHECK(std::fabs(f.grad[mu] - want) < 1e-5);
  }
  CHECK(max_abs(f.grad - (f.direct_part + f.tail_part)) < 1e-15);
}

TEST_CASE("tail stays bounded approaching the light cone from inside") {
  const ChargeParams p{1.0, 0.6, 1.0};
  const SmoothMotion motion =
      kicked_motion(0.5, -6.0, -2.0, {1, 0, 0}, {-20, 0, 0, 0}, -20.0);
  const Worldline line = discretize_motion(motion, -20.0, 4.0, 601);

  // Approach a point on the light cone of the kick era along a timelike path.
  const WorldlineSample e = line.eval(-4.0);
  const FourVector on_cone = e.z + FourVector{3.0, 0.0, 3.0, 0.0};
  double first = 0.0;
  for (const double lam : {1e-2, 1e-4, 1e-6}) {
    const FourVector x = on_cone + FourVector{lam, 0.0, 0.0, 0.0};
    const FieldStrength f = grad_phi_retarded(line, p, x);
    const double norm = max_abs(f.tail_part);
    if (first == 0.0) first = norm;
    CHECK(norm < 10.0 * first + 1.0);
    CHECK(std::isfinite(norm));
  }
}

TEST_CASE("on-worldline guard") {
  const ChargeParams p{1.0, 0.5, 1.0};
  const Worldline line = static_line();
  CHECK_THROWS_AS(phi_retarded(line, p, {0.0, 1e-11, 0.0, 0.0}),
                  OnWorldlineError);
}

TEST_CASE("yukawa two-body force") {
  // massless limit
  const auto f0 = yukawa_force(2.0, 3.0, 0.0, {2.0, 0.0, 0.0});
  CHECK(f0[0] == doctest::Approx(-6.0 / 4.0));
  CHECK(f0[1] == 0.0);

  // k0 r = 1: magnitude g1 g2 2 e^{-1} / r^2, attractive for like signs
  const double r = 2.0, k0 = 0.5;
  const auto f1 = yukawa_force(1.5, 2.0, k0, {0.0, r, 0.0});
  CHECK(f1[1] ==
        doctest::Approx(-1.5 * 2.0 * 2.0 * std::exp(-1.0) / (r * r)));

  // opposite signs repel
  const auto f2 = yukawa_force(1.0, -1.0, 0.3, {1.0, 0.0, 0.0});
  CHECK(f2[0] > 0.0);

  CHECK_THROWS_AS(yukawa_force(1.0, 1.0, 1.0, {0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("charge params validation") {
  const ChargeParams bad_mass{-1.0, 0.1, 1.0};
  const ChargeParams bad_k0{1.0, 0.1, -0.5};
  const ChargeParams ok{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad_mass.validate(), DomainError);
  CHECK_THROWS_AS(bad_k0.validate(), DomainError);
  CHECK_NOTHROW(ok.validate());
}
