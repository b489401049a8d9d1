#pragma once

#include <cstdint>
#include <functional>

#include "scalartail/four_vector.hpp"
#include "scalartail/worldline.hpp"

namespace scalartail {

// Analytic motion prescribed through a rapidity profile: exact u.u = -1 and
// u.a = 0 by construction, positions recovered by high-order quadrature of u.
struct SmoothMotion {
  std::function<FourVector(double)> velocity;
  std::function<FourVector(double)> acceleration;
  FourVector z_ref;    // position at tau_ref
  double tau_ref = 0.0;
};

// Exact displacement int_{tau_a}^{tau_b} u dtau (composite Gauss-Legendre).
FourVector motion_displacement(const SmoothMotion& m, double tau_a,
                               double tau_b);

// Exact sample of the motion (z by quadrature from z_ref).
WorldlineSample motion_sample(const SmoothMotion& m, double tau);

// Sampled worldline on [tau_min, tau_max] with uniform closures on both ends
// when the acceleration vanishes there.
Worldline discretize_motion(const SmoothMotion& m, double tau_min,
                            double tau_max, int n_samples);

// Rapidity ramp from 0 to eta_final over [kick_on, kick_off] along a fixed
// axis, C2 smooth (quintic smoothstep); uniform motion outside the ramp.
SmoothMotion kicked_motion(double eta_final, double kick_on, double kick_off,
                           const std::array<double, 3>& axis,
                           const FourVector& z_ref, double tau_ref);

// Deterministic pseudo-random smooth wiggle: bounded rapidity and slowly
// turning axis, all derivatives analytic.
SmoothMotion random_smooth_motion(std::uint64_t seed, double amplitude = 0.3);

}  // namespace scalartail
