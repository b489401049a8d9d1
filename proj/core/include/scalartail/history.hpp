#pragma once

#include "scalartail/four_vector.hpp"
#include "scalartail/quadrature.hpp"
#include "scalartail/worldline.hpp"

// Shared history-integral sweeps. Every tail quantity in the theory is an
// integral over the source's past (or future) worldline of k0^2 J1(w)/w or
// k0^4 J2(w)/w^2 times rational factors in q = x - z(s); the sweeps below
// evaluate the finite sampled segment adaptively and close the uniform
// pre-/post-history with the oscillatory Bessel-tail quadrature.
namespace scalartail::history {

// Integrals over s in (-inf, tau_upper] with kappa = k0^2 J1(w)/w,
// w = k0 sqrt(-(q.q)), q = z_obs - z(s), r_s = -(q.u_s), r_obs = -(q.u_obs):
//   i1          = int kappa ds
//   bracket     = int kappa [ (1+(q.a_s)) q / r_s^2 - u_s / r_s ] ds
//   q_over_robs = int kappa q / r_obs ds
struct WeightedIntegrals {
  double i1 = 0.0;
  FourVector bracket;
  FourVector q_over_robs;
};
WeightedIntegrals weighted_integrals(const Worldline& w, double k0,
                                     const FourVector& z_obs,
                                     const FourVector& u_obs, double tau_upper,
                                     const quad::Options& opt = {});

// Same range with kappa2 = k0^4 J2(w)/w^2:
//   q_term    = int kappa2 q ds
//   robs_term = int kappa2 r_obs ds
struct J2Integrals {
  FourVector q_term;
  double robs_term = 0.0;
};
J2Integrals j2_integrals(const Worldline& w, double k0, const FourVector& z_obs,
                         const FourVector& u_obs, double tau_upper,
                         const quad::Options& opt = {});

// Field-point tails for the potential and its gradient:
//   phi_integral  = int kappa ds
//   grad_integral = int kappa [ (1+(K.a)) K / r^2 - u / r ] ds, K = x - z(s)
// retarded: s in (-inf, tau_ret]; advanced: s in [tau_adv, +inf), which
// requires the worldline's uniform post-history closure.
struct FieldTail {
  double phi_integral = 0.0;
  FourVector grad_integral;
};
FieldTail field_tail_retarded(const Worldline& w, double k0,
                              const FourVector& x, double tau_ret,
                              const quad::Options& opt = {});
FieldTail field_tail_advanced(const Worldline& w, double k0,
                              const FourVector& x, double tau_adv,
                              const quad::Options& opt = {});

// Inner integrals of the radiative double path integrals at outer point s1:
//   p_term = int_{-inf}^{tau1} kappa [ (1+(q.a2)) q / r2^2 - u2 / r2
//                                    + (1-(q.a1)) q / r1^2 - u1 / r1 ] dtau2
//   m_term = int_{-inf}^{tau1} kappa [ (1+(q.a2))/r2^2 (z1 ^ z2)
//                                    + (z1 ^ u2)/r2
//                                    + (1-(q.a1))/r1^2 (z1 ^ z2)
//                                    + (z2 ^ u1)/r1 ] dtau2
// with q = z1 - z2, r_i = -(q.u_i). Both integrands vanish linearly at the
// coincidence tau2 -> tau1 and identically on uniform motion.
struct RadiativeInner {
  FourVector p_term;
  AntisymTensor4 m_term;
};
RadiativeInner radiative_inner(const Worldline& w, double k0,
                               const WorldlineSample& s1,
                               const quad::Options& opt = {});

}  // namespace scalartail::history
