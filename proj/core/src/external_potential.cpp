#include "scalartail/external_potential.hpp"

#include <cmath>

#include "scalartail/errors.hpp"

namespace scalartail {

ExternalPotential ExternalPotential::none() { return {}; }

ExternalPotential ExternalPotential::uniform_gradient(
    const FourVector& grad_covariant) {
  ExternalPotential p;
  p.kind_ = Kind::UniformGradient;
  p.gradient_covariant = grad_covariant;
  return p;
}

ExternalPotential ExternalPotential::gaussian_pulse(
    double amplitude, double t_center, double sigma,
    const std::array<double, 3>& dir) {
  if (!(sigma > 0.0)) throw DomainError("gaussian_pulse: sigma must be > 0");
  ExternalPotential p;
  p.kind_ = Kind::GaussianPulse;
  p.amplitude = amplitude;
  p.t_center = t_center;
  p.sigma = sigma;
  p.direction = dir;
  return p;
}

ExternalPotential ExternalPotential::yukawa_well(
    double amplitude, double kappa, const std::array<double, 3>& center) {
  if (!(kappa >= 0.0)) throw DomainError("yukawa_well: kappa must be >= 0");
  ExternalPotential p;
  p.kind_ = Kind::YukawaWell;
  p.amplitude = amplitude;
  p.kappa = kappa;
  p.center = center;
  return p;
}

double ExternalPotential::phi(const FourVector& x) const {
  switch (kind_) {
    case Kind::None:
      return 0.0;
    case Kind::UniformGradient:
      return gradient_covariant.t * x.t + gradient_covariant.x * x.x +
             gradient_covariant.y * x.y + gradient_covariant.z * x.z;
    case Kind::GaussianPulse: {
      const double arg = (x.t - t_center) / sigma;
      const double env = amplitude * std::exp(-0.5 * arg * arg);
      return env * (direction[0] * x.x + direction[1] * x.y +
                    direction[2] * x.z);
    }
    case Kind::YukawaWell: {
      const double dx = x.x - center[0];
      const double dy = x.y - center[1];
      const double dz = x.z - center[2];
      const double rho = std::sqrt(dx * dx + dy * dy + dz * dz);
      return amplitude * std::exp(-kappa * rho) / rho;
    }
  }
  return 0.0;
}

FourVector ExternalPotential::grad(const FourVector& x) const {
  switch (kind_) {
    case Kind::None:
      return {};
    case Kind::UniformGradient:
      return {-gradient_covariant.t, gradient_covariant.x,
              gradient_covariant.y, gradient_covariant.z};
    case Kind::GaussianPulse: {
      const double arg = (x.t - t_center) / sigma;
      const double env = amplitude * std::exp(-0.5 * arg * arg);
      const double dxpart =
          direction[0] * x.x + direction[1] * x.y + direction[2] * x.z;
      const double dphi_dt = -arg / sigma * env * dxpart;
      return {-dphi_dt, env * direction[0], env * direction[1],
              env * direction[2]};
    }
    case Kind::YukawaWell: {
      const double dx = x.x - center[0];
      const double dy = x.y - center[1];
      const double dz = x.z - center[2];
      const double rho = std::sqrt(dx * dx + dy * dy + dz * dz);
      const double dphi_drho =
          -amplitude * std::exp(-kappa * rho) * (1.0 + kappa * rho) /
          (rho * rho);
      return {0.0, dphi_drho * dx / rho, dphi_drho * dy / rho,
              dphi_drho * dz / rho};
    }
  }
  return {};
}

std::string ExternalPotential::kind_name() const {
  switch (kind_) {
    case Kind::None:
      return "none";
    case Kind::UniformGradient:
      return "uniform_gradient";
    case Kind::GaussianPulse:
      return "gaussian_pulse";
    case Kind::YukawaWell:
      return "yukawa_well";
  }
  return "none";
}

}  // namespace scalartail
