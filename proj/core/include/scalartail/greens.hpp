#pragma once

#include "scalartail/four_vector.hpp"

namespace scalartail {

// Synge world function in flat spacetime: half the squared interval.
double synge_sigma(const FourVector& x, const FourVector& y);

enum class GreensKind { Symmetric, Retarded, Advanced };

// Evaluation of a massive-scalar Green's function away from the delta support.
// The delta(sigma) piece is distributional and is reported symbolically as
// direct_weight (its coefficient on the supporting cone); tail_value is the
// smooth interior part.
struct GreensEval {
  double direct_weight = 0.0;
  double tail_value = 0.0;
  bool inside_cone = false;
};

// Green's functions of (box - k0^2)G = -delta^4, normalized so that the
// retarded one is (1/4pi)[delta(sigma) - k0 J1(k0 sqrt(-2 sigma)) /
// sqrt(-2 sigma)] on and inside the past cone of x. The symmetric function is
// the Dirac half-sum (G_ret + G_adv)/2.
GreensEval greens_tail(const FourVector& x, const FourVector& y, double k0,
                       GreensKind kind);

// Tail part of the radiative combination G_ret - G_sym = (G_ret - G_adv)/2;
// antisymmetric under exchange of x and y.
double greens_radiative_combination(const FourVector& x, const FourVector& y,
                                    double k0);

}  // namespace scalartail
