#include "scalartail/static_energy.hpp"

#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/fields.hpp"

namespace scalartail {

StaticEnergy static_energy(double g, double k0, double eps,
                           const quad::Options& opt) {
  if (!(eps > 0.0)) throw DomainError("static_energy: eps must be positive");
  if (!(k0 >= 0.0)) throw DomainError("static_energy: k0 must be >= 0");

  // 4 pi r^2 T^00 = (r^2/2) [ (phi')^2 + k0^2 phi^2 ].
  const auto energy_density = [&](double r) {
    const double phi = yukawa_potential(g, k0, r);
    const double dphi = yukawa_potential_gradient(g, k0, r);
    return 0.5 * r * r * (dphi * dphi + k0 * k0 * phi * phi);
  };

  StaticEnergy out;
  out.divergent_part = 0.5 * g * g / eps;

  if (k0 > 0.0) {
    const double r_cut = eps + 60.0 / k0;  // remainder < e^{-120} relative
    quad::Options o = opt;
    o.rel_tol = std::min(opt.rel_tol, 1e-11);
    out.total_numeric = quad::integrate_adaptive(energy_density, eps, r_cut, o);
  } else {
    // Pure Coulomb-like integrand g^2/(2 r^2): finite window plus exact tail.
    const double r_cut = 1e6 * eps;
    quad::Options o = opt;
    o.rel_tol = std::min(opt.rel_tol, 1e-11);
    out.total_numeric =
        quad::integrate_adaptive(energy_density, eps, r_cut, o) +
        0.5 * g * g / r_cut;
  }
  out.finite_part = out.total_numeric - out.divergent_part;
  return out;
}

double static_energy_closed_form(double g, double k0, double eps) {
  return 0.5 * g * g * std::exp(-2.0 * k0 * eps) * (1.0 / eps + k0);
}

}  // namespace scalartail
