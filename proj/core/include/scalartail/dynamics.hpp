#pragma once

#include <vector>

#include "scalartail/external_potential.hpp"
#include "scalartail/fields.hpp"
#include "scalartail/four_vector.hpp"
#include "scalartail/quadrature.hpp"
#include "scalartail/worldline.hpp"

namespace scalartail {

enum class EomMode { Effective, HarishChandra };
enum class SchottMode { OrderReduced, ExplicitThirdOrder };

// Dynamical mass m(tau) = m0 + g^2 int_{-inf}^{tau} k0^2 J1(w)/w ds
// - g phi_ext(z(tau)); the uniform pre-history contributes exactly g^2 k0.
double dynamical_mass(const Worldline& hist, double tau, const ChargeParams& p,
                      const ExternalPotential& ext,
                      const quad::Options& opt = {});

// Dressed four-momentum m u - (g^2/3) a - (g^2/2) int kappa q/r_tau ds.
FourVector dressed_momentum(const Worldline& hist, double tau,
                            const ChargeParams& p, const ExternalPotential& ext,
                            const quad::Options& opt = {});

// Tail self-force, orthogonal to u by construction (the projected tail
// integral of the retarded field strength on the worldline).
FourVector self_force(const Worldline& hist, double tau, const ChargeParams& p,
                      const quad::Options& opt = {});

// Minkowski force of the external potential, orthogonal to u:
// g (eta^{ma} + u^m u^a) d_a phi_ext.
FourVector external_force(const WorldlineSample& s, const ExternalPotential& ext,
                          double g);

// Everything the equation of motion needs at one worldline point.
struct EomTerms {
  double m = 0.0;
  double mdot = 0.0;
  FourVector tail;     // g^2 int kappa [(1+(q.a_s)) q/r_s^2 - u_s/r_s] ds
  FourVector f_self;   // projection of tail orthogonal to u
  FourVector f_ext;
  FourVector schott;   // (g^2/3)(adot - a^2 u)
  FourVector accel;    // acceleration implied by the requested mode
};
EomTerms eom_terms(const Worldline& hist, double tau, const ChargeParams& p,
                   const ExternalPotential& ext, EomMode mode,
                   const FourVector& adot, const quad::Options& opt = {});

// Acceleration from the chosen form of the equation of motion, with adot
// taken from the history interpolant at tau.
FourVector eom_rhs(const Worldline& hist, double tau, const ChargeParams& p,
                   const ExternalPotential& ext, EomMode mode,
                   const quad::Options& opt = {});

// Second derivative of the velocity interpolant (the jerk feeding the Schott
// term when no reduction of order is applied).
FourVector worldline_jerk(const Worldline& hist, double tau);

struct IntegrateOptions {
  double tau_end = 1.0;
  double dt = 0.01;
  EomMode eom = EomMode::Effective;
  SchottMode schott = SchottMode::OrderReduced;
  int max_corrector_iters = 8;
  double corrector_tol = 1e-10;
  int max_halvings = 10;
  bool track_flows = true;
  quad::Options quad;
};

struct StepRecord {
  double tau = 0.0;
  FourVector z, u, a;
  double m = 0.0;
  FourVector res_p;        // momentum balance residual over the step
  AntisymTensor4 res_M;    // angular momentum balance residual
  double rel_p = 0.0;
  double rel_M = 0.0;
  FourVector p_dir_rad;    // cumulative flows at this node
  FourVector p_tail_rad;
  FourVector p_tail_bound;
  AntisymTensor4 M_rad;    // direct + tail radiated angular momentum
};

struct BalanceReport {
  double max_rel_p = 0.0;
  double max_rel_M = 0.0;
  double max_abs_p = 0.0;
  double max_abs_M = 0.0;
  long steps = 0;
  long rejected_steps = 0;
};

struct Trajectory {
  Worldline history;
  std::vector<StepRecord> records;
  BalanceReport balance;
  double final_mass = 0.0;
};

// History-dependent predictor-corrector integrator: each step extends the
// worldline by Hermite extrapolation and re-evaluates the tail integrals
// against the extended history until the acceleration fixed point converges.
// Non-convergent steps halve dt (up to max_halvings, then NumericalFailure).
Trajectory integrate(const ChargeParams& p, const ExternalPotential& ext,
                     const FourVector& z0, const FourVector& u0, double tau0,
                     const IntegrateOptions& opt);

// Appendix-style mass cross-check: reconstructs m(tau) on a grid by
// integrating d(p.u)/dtau through the balance route and compares with the
// direct quadrature of the mass formula; returns the max discrepancy.
double mass_crosscheck(const Worldline& hist, const ChargeParams& p,
                       const ExternalPotential& ext, int grid_points = 33,
                       const quad::Options& opt = {});

}  // namespace scalartail
