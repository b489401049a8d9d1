#pragma once

#include <array>
#include <string>

#include "scalartail/four_vector.hpp"

namespace scalartail {

// Analytic external scalar potentials. Restricting to closed-form descriptors
// keeps grad exact (no differencing noise in the equation of motion).
class ExternalPotential {
 public:
  enum class Kind { None, UniformGradient, GaussianPulse, YukawaWell };

  static ExternalPotential none();
  // phi(x) = G_mu x^mu with covariant components G.
  static ExternalPotential uniform_gradient(const FourVector& grad_covariant);
  // phi(x) = A exp(-(x0 - t0)^2 / (2 sigma^2)) (d . x_spatial)
  static ExternalPotential gaussian_pulse(double amplitude, double t_center,
                                          double sigma,
                                          const std::array<double, 3>& dir);
  // phi(x) = A exp(-kappa |x - c|) / |x - c|
  static ExternalPotential yukawa_well(double amplitude, double kappa,
                                       const std::array<double, 3>& center);

  double phi(const FourVector& x) const;
  // Contravariant gradient Phi^mu = eta^{mu nu} d phi / d x^nu.
  FourVector grad(const FourVector& x) const;

  bool is_zero() const { return kind_ == Kind::None; }
  Kind kind() const { return kind_; }
  std::string kind_name() const;

  double amplitude = 0.0;
  double t_center = 0.0;
  double sigma = 1.0;
  double kappa = 0.0;
  std::array<double, 3> direction{};
  std::array<double, 3> center{};
  FourVector gradient_covariant;

 private:
  Kind kind_ = Kind::None;
};

}  // namespace scalartail
