#pragma once

#include "scalartail/quadrature.hpp"

namespace scalartail {

// Field energy of a static charge integrated over r in [eps, inf):
// p0 = g^2/(2 eps) - g^2 k0 / 2 + O(eps). divergent_part is the exact
// Coulomb-like g^2/(2 eps); finite_part = total_numeric - divergent_part.
struct StaticEnergy {
  double divergent_part = 0.0;
  double finite_part = 0.0;
  double total_numeric = 0.0;
};

StaticEnergy static_energy(double g, double k0, double eps,
                           const quad::Options& opt = {});

// Closed form of the same integral, (g^2/2) e^{-2 k0 eps} (1/eps + k0).
double static_energy_closed_form(double g, double k0, double eps);

}  // namespace scalartail
