#pragma once

#include <array>

#include "scalartail/four_vector.hpp"
#include "scalartail/quadrature.hpp"
#include "scalartail/worldline.hpp"

namespace scalartail {

struct ChargeParams {
  double m0 = 1.0;  // bare mass
  double g = 0.0;   // scalar charge
  double k0 = 0.0;  // field mass parameter (reciprocal length)

  void validate() const;
};

// Field strength Phi^mu = eta^{mu nu} d phi / d x^nu (contravariant, like
// every four-vector here). grad = direct_part + tail_part.
struct FieldStrength {
  FourVector grad;
  FourVector direct_part;
  FourVector tail_part;
};

struct FieldEval {
  double phi = 0.0;
  FieldStrength strength;
  double tau_emission = 0.0;  // retarded or advanced proper time
};

// Retarded potential of the charge at field point x: g/r at the retarded
// point minus the history tail integral over (-inf, tau_ret], with the
// uniform pre-history closed by the oscillatory tail quadrature.
double phi_retarded(const Worldline& w, const ChargeParams& p,
                    const FourVector& x, const quad::Options& opt = {});

// Advanced counterpart, integrating over [tau_adv, +inf); requires a uniform
// post-history closure when k0 > 0.
double phi_advanced(const Worldline& w, const ChargeParams& p,
                    const FourVector& x, const quad::Options& opt = {});

FieldStrength grad_phi_retarded(const Worldline& w, const ChargeParams& p,
                                const FourVector& x,
                                const quad::Options& opt = {});
FieldStrength grad_phi_advanced(const Worldline& w, const ChargeParams& p,
                                const FourVector& x,
                                const quad::Options& opt = {});

// Potential and field strength in one pass (shared quadratures).
FieldEval eval_field_retarded(const Worldline& w, const ChargeParams& p,
                              const FourVector& x,
                              const quad::Options& opt = {});
FieldEval eval_field_advanced(const Worldline& w, const ChargeParams& p,
                              const FourVector& x,
                              const quad::Options& opt = {});

// Static two-body Yukawa force on charge 2 at separation r12 from charge 1:
// F = -g1 g2 e^{-k0 r}(1 + k0 r)/r^2 * n12. Attractive for like signs.
std::array<double, 3> yukawa_force(double g1, double g2, double k0,
                                   const std::array<double, 3>& r12);

// Static Yukawa closed forms used as oracles and by the harness.
double yukawa_potential(double g, double k0, double r);
double yukawa_potential_gradient(double g, double k0, double r);

}  // namespace scalartail
