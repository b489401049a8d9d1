#include "scalartail/fields.hpp"

#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/history.hpp"

namespace scalartail {

namespace {

double min_approach_distance(double k0, const FourVector& x) {
  if (k0 > 0.0) return 1e-9 / k0;
  return 1e-12 * (1.0 + std::fabs(x.t) + spatial_norm(x));
}

FieldEval eval_field(const Worldline& w, const ChargeParams& p,
                     const FourVector& x, bool retarded,
                     const quad::Options& opt) {
  p.validate();
  const double tau_e = retarded ? w.retarded_time(x) : w.advanced_time(x);
  const WorldlineSample s = w.eval(tau_e);
  const FourVector K = x - s.z;
  const double r = retarded ? -dot(K, s.u) : dot(K, s.u);
  if (r < min_approach_distance(p.k0, x))
    throw OnWorldlineError("field point within the minimum approach distance");

  FieldEval out;
  out.tau_emission = tau_e;
  out.phi = p.g / r;

  const double ka = dot(K, s.a);
  const double u_sign = retarded ? 1.0 : -1.0;
  out.strength.direct_part =
      K * (-p.g * (1.0 + ka) / (r * r * r)) + s.u * (u_sign * p.g / (r * r));

  if (p.k0 > 0.0) {
    const history::FieldTail tail =
        retarded ? history::field_tail_retarded(w, p.k0, x, tau_e, opt)
                 : history::field_tail_advanced(w, p.k0, x, tau_e, opt);
    out.phi -= p.g * tail.phi_integral;
    out.strength.tail_part = tail.grad_integral * p.g;
  }
  out.strength.grad = out.strength.direct_part + out.strength.tail_part;
  return out;
}

}  // namespace

void ChargeParams::validate() const {
  if (!(m0 > 0.0)) throw DomainError("ChargeParams: m0 must be positive");
  if (!(k0 >= 0.0)) throw DomainError("ChargeParams: k0 must be >= 0");
  if (!std::isfinite(g)) throw DomainError("ChargeParams: g must be finite");
}

double phi_retarded(const Worldline& w, const ChargeParams& p,
                    const FourVector& x, const quad::Options& opt) {
  return eval_field(w, p, x, true, opt).phi;
}

double phi_advanced(const Worldline& w, const ChargeParams& p,
                    const FourVector& x, const quad::Options& opt) {
  return eval_field(w, p, x, false, opt).phi;
}

FieldStrength grad_phi_retarded(const Worldline& w, const ChargeParams& p,
                                const FourVector& x,
                                const quad::Options& opt) {
  return eval_field(w, p, x, true, opt).strength;
}

FieldStrength grad_phi_advanced(const Worldline& w, const ChargeParams& p,
                                const FourVector& x,
                                const quad::Options& opt) {
  return eval_field(w, p, x, false, opt).strength;
}

FieldEval eval_field_retarded(const Worldline& w, const ChargeParams& p,
                              const FourVector& x, const quad::Options& opt) {
  return eval_field(w, p, x, true, opt);
}

FieldEval eval_field_advanced(const Worldline& w, const ChargeParams& p,
                              const FourVector& x, const quad::Options& opt) {
  return eval_field(w, p, x, false, opt);
}

std::array<double, 3> yukawa_force(double g1, double g2, double k0,
                                   const std::array<double, 3>& r12) {
  const double r =
      std::sqrt(r12[0] * r12[0] + r12[1] * r12[1] + r12[2] * r12[2]);
  if (!(r > 0.0)) throw DomainError("yukawa_force: zero separation");
  const double mag = -g1 * g2 * std::exp(-k0 * r) * (1.0 + k0 * r) / (r * r);
  return {mag * r12[0] / r, mag * r12[1] / r, mag * r12[2] / r};
}

double yukawa_potential(double g, double k0, double r) {
  return g * std::exp(-k0 * r) / r;
}

double yukawa_potential_gradient(double g, double k0, double r) {
  return -g * std::exp(-k0 * r) * (1.0 + k0 * r) / (r * r);
}

}  // namespace scalartail
