#include "scalartail/motions.hpp"

#include <cmath>
#include <random>

#include "scalartail/errors.hpp"

namespace scalartail {

namespace {

// 8-point Gauss-Legendre on [-1,1].
constexpr double kGx8[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double kGw8[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

FourVector gl8(const std::function<FourVector(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  FourVector acc;
  for (int i = 0; i < 8; ++i) acc += f(c + h * kGx8[i]) * (h * kGw8[i]);
  return acc;
}

struct Smoothstep {
  // Quintic smoothstep: s(0)=0, s(1)=1, s'=s''=0 at both ends.
  static double s(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
  }
  static double ds(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return 30.0 * x * x * (1.0 - x) * (1.0 - x);
  }
};

}  // namespace

FourVector motion_displacement(const SmoothMotion& m, double tau_a,
                               double tau_b) {
  const int panels =
      std::max(1, static_cast<int>(std::ceil(std::fabs(tau_b - tau_a) / 0.5)));
  FourVector acc;
  for (int i = 0; i < panels; ++i) {
    const double lo = tau_a + (tau_b - tau_a) * i / panels;
    const double hi = tau_a + (tau_b - tau_a) * (i + 1) / panels;
    acc += gl8(m.velocity, lo, hi);
  }
  return acc;
}

WorldlineSample motion_sample(const SmoothMotion& m, double tau) {
  WorldlineSample s;
  s.tau = tau;
  s.z = m.z_ref + motion_displacement(m, m.tau_ref, tau);
  s.u = m.velocity(tau);
  s.a = m.acceleration(tau);
  return s;
}

Worldline discretize_motion(const SmoothMotion& m, double tau_min,
                            double tau_max, int n_samples) {
  if (n_samples < 2) throw DomainError("discretize_motion: need >= 2 samples");
  std::vector<WorldlineSample> samples;
  samples.reserve(n_samples);
  WorldlineSample s = motion_sample(m, tau_min);
  samples.push_back(s);
  for (int i = 1; i < n_samples; ++i) {
    const double tau =
        tau_min + (tau_max - tau_min) * static_cast<double>(i) / (n_samples - 1);
    const FourVector dz = motion_displacement(m, samples.back().tau, tau);
    WorldlineSample next;
    next.tau = tau;
    next.z = samples.back().z + dz;
    next.u = m.velocity(tau);
    next.a = m.acceleration(tau);
    samples.push_back(next);
  }
  const FourVector u_pre = samples.front().u;
  const FourVector u_post = samples.back().u;
  return Worldline(std::move(samples), u_pre, u_post);
}

SmoothMotion kicked_motion(double eta_final, double kick_on, double kick_off,
                           const std::array<double, 3>& axis,
                           const FourVector& z_ref, double tau_ref) {
  if (!(kick_off > kick_on)) throw DomainError("kicked_motion: bad ramp window");
  const double norm =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  const std::array<double, 3> n = {axis[0] / norm, axis[1] / norm,
                                   axis[2] / norm};
  const double span = kick_off - kick_on;

  SmoothMotion m;
  m.z_ref = z_ref;
  m.tau_ref = tau_ref;
  m.velocity = [=](double tau) -> FourVector {
    const double eta = eta_final * Smoothstep::s((tau - kick_on) / span);
    const double sh = std::sinh(eta);
    return {std::cosh(eta), sh * n[0], sh * n[1], sh * n[2]};
  };
  m.acceleration = [=](double tau) -> FourVector {
    const double x = (tau - kick_on) / span;
    const double eta = eta_final * Smoothstep::s(x);
    const double etadot = eta_final * Smoothstep::ds(x) / span;
    const double sh = std::sinh(eta);
    const double ch = std::cosh(eta);
    return {etadot * sh, etadot * ch * n[0], etadot * ch * n[1],
            etadot * ch * n[2]};
  };
  return m;
}

SmoothMotion random_smooth_motion(std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  struct Wave {
    double c, omega, phase;
  };
  std::array<Wave, 3> eta_waves;
  for (auto& w : eta_waves)
    w = {0.3 + 0.7 * uni(rng), 0.3 + 1.2 * uni(rng),
         2.0 * 3.141592653589793 * uni(rng)};
  const Wave theta_wave{0.25 + 0.25 * uni(rng), 0.2 + 0.6 * uni(rng),
                        2.0 * 3.141592653589793 * uni(rng)};
  const Wave phi_wave{0.25 + 0.25 * uni(rng), 0.2 + 0.6 * uni(rng),
                      2.0 * 3.141592653589793 * uni(rng)};
  const double theta0 = 0.5 + 2.0 * uni(rng);
  const double phi0 = 2.0 * 3.141592653589793 * uni(rng);
  const double amp = amplitude;

  // Envelope confines the acceleration to a finite window so that the
  // discretized line has honest uniform closures.
  const auto envelope = [](double tau) {
    return Smoothstep::s((tau + 8.0) / 2.0) * Smoothstep::s((8.0 - tau) / 2.0);
  };
  const auto envelope_d = [](double tau) {
    return Smoothstep::ds((tau + 8.0) / 2.0) / 2.0 *
               Smoothstep::s((8.0 - tau) / 2.0) -
           Smoothstep::s((tau + 8.0) / 2.0) *
               Smoothstep::ds((8.0 - tau) / 2.0) / 2.0;
  };

  const auto eta_raw = [=](double tau) {
    double e = 0.0;
    for (const auto& w : eta_waves) e += w.c * std::sin(w.omega * tau + w.phase);
    return amp * e;
  };
  const auto eta_raw_d = [=](double tau) {
    double e = 0.0;
    for (const auto& w : eta_waves)
      e += w.c * w.omega * std::cos(w.omega * tau + w.phase);
    return amp * e;
  };
  const auto theta = [=](double tau) {
    return theta0 + theta_wave.c * std::sin(theta_wave.omega * tau +
                                            theta_wave.phase);
  };
  const auto theta_d = [=](double tau) {
    return theta_wave.c * theta_wave.omega *
           std::cos(theta_wave.omega * tau + theta_wave.phase);
  };
  const auto phi = [=](double tau) {
    return phi0 + phi_wave.c * std::sin(phi_wave.omega * tau + phi_wave.phase);
  };
  const auto phi_d = [=](double tau) {
    return phi_wave.c * phi_wave.omega *
           std::cos(phi_wave.omega * tau + phi_wave.phase);
  };

  SmoothMotion m;
  m.z_ref = {0.0, 0.0, 0.0, 0.0};
  m.tau_ref = 0.0;
  m.velocity = [=](double tau) -> FourVector {
    const double eta = envelope(tau) * eta_raw(tau);
    const double th = theta(tau), ph = phi(tau);
    const double sh = std::sinh(eta);
    return {std::cosh(eta), sh * std::sin(th) * std::cos(ph),
            sh * std::sin(th) * std::sin(ph), sh * std::cos(th)};
  };
  m.acceleration = [=](double tau) -> FourVector {
    const double env = envelope(tau);
    const double eta = env * eta_raw(tau);
    const double etadot = envelope_d(tau) * eta_raw(tau) + env * eta_raw_d(tau);
    const double th = theta(tau), ph = phi(tau);
    const double thd = theta_d(tau), phd = phi_d(tau);
    const double sh = std::sinh(eta), ch = std::cosh(eta);
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    // d/dtau of (cosh, sinh * n(theta, phi))
    return {etadot * sh,
            etadot * ch * st * cp + sh * (thd * ct * cp - phd * st * sp),
            etadot * ch * st * sp + sh * (thd * ct * sp + phd * st * cp),
            etadot * ch * ct - sh * thd * st};
  };
  return m;
}

}  // namespace scalartail
