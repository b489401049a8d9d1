#include "scalartail/radiation.hpp"

#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/history.hpp"
#include "scalartail/specfun.hpp"

namespace scalartail {

namespace {
constexpr double kInv4Pi = 0.07957747154594766788444188168626;
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

SymTensor4 stress_energy(const FourVector& grad, double phi, double k0) {
  const double scalar = dot(grad, grad) + k0 * k0 * phi * phi;
  SymTensor4 t = outer(grad, grad) - metric_tensor() * (0.5 * scalar);
  return t * kInv4Pi;
}

MasslessSplit massless_split(const WorldlineSample& s, const FourVector& k,
                             double r, double g) {
  if (std::fabs(dot(k, k)) > 1e-10)
    throw DomainError("massless_split: k must be null");
  if (std::fabs(dot(k, s.u) + 1.0) > 1e-10)
    throw DomainError("massless_split: (k.u) must be -1");
  if (!(r > 0.0)) throw DomainError("massless_split: r must be positive");

  const double ak = dot(s.a, k);
  const double g2 = g * g;

  MasslessSplit out;
  out.rad = outer(k, k) * (g2 * ak * ak / (r * r) * kInv4Pi);

  const SymTensor4 t4 =
      (outer(k, k) - outer_sym(k, s.u) + outer(s.u, s.u) -
       metric_tensor() * 0.5) *
      (g2 / (r * r * r * r));
  const SymTensor4 t3 =
      (outer(k, k) * 2.0 - outer_sym(k, s.u) - metric_tensor()) *
      (g2 * ak / (r * r * r));
  out.bound = (t4 + t3) * kInv4Pi;
  return out;
}

namespace {
void check_unit_velocity(const FourVector& u) {
  if (std::fabs(dot(u, u) + 1.0) > 1e-8)
    throw DomainError("angular moment: u must satisfy u.u = -1");
}
}  // namespace

double angular_moment_0() { return 1.0; }

FourVector angular_moment_1(const FourVector& u) {
  check_unit_velocity(u);
  return u;
}

SymTensor4 angular_moment_2(const FourVector& u) {
  check_unit_velocity(u);
  return outer(u, u) * (4.0 / 3.0) + metric_tensor() * (1.0 / 3.0);
}

Rank3Tensor4 angular_moment_3(const FourVector& u) {
  check_unit_velocity(u);
  const SymTensor4 eta = metric_tensor();
  Rank3Tensor4 r{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        r[a][b][c] = 2.0 * u[a] * u[b] * u[c] +
                     (u[a] * eta(b, c) + u[b] * eta(a, c) + u[c] * eta(a, b)) /
                         3.0;
  return r;
}

FourVector p_dir_rad(const Worldline& w, double g, double tau,
                     const quad::Options& opt) {
  if (tau <= w.tau_first()) return {};
  const auto f = [&](double s) {
    const WorldlineSample smp = w.eval(s);
    return smp.u * dot(smp.a, smp.a);
  };
  const FourVector v = quad::integrate_adaptive(f, w.tau_first(), tau, opt);
  return v * (g * g / 3.0);
}

AntisymTensor4 M_dir_rad(const Worldline& w, double g, double tau,
                         const quad::Options& opt) {
  if (tau <= w.tau_first()) return {};
  const auto f = [&](double s) -> std::array<double, 6> {
    const WorldlineSample smp = w.eval(s);
    const AntisymTensor4 m =
        wedge(smp.z, smp.u) * dot(smp.a, smp.a) + wedge(smp.u, smp.a);
    return m.c;
  };
  const auto v = quad::integrate_adaptive(f, w.tau_first(), tau, opt);
  AntisymTensor4 m;
  m.c = v;
  return m * (g * g / 3.0);
}

TailKernelEval tail_kernel(const WorldlineSample& z1, const WorldlineSample& z2,
                           const ChargeParams& p) {
  p.validate();
  const FourVector q = z1.z - z2.z;
  const double qq = dot(q, q);
  if (!(qq < 0.0)) throw DomainError("tail_kernel: q must be timelike");
  if (!(z1.tau > z2.tau))
    throw DomainError("tail_kernel: z1 must be later than z2");

  TailKernelEval out;
  out.q = q;
  out.w = p.k0 * std::sqrt(-qq);
  out.r1 = -dot(q, z1.u);
  out.r2 = -dot(q, z2.u);
  const double kappa = p.k0 * p.k0 * kernel_j1_over_w(out.w);
  out.f = (q * ((1.0 + dot(q, z2.a)) / (out.r2 * out.r2)) -
           z2.u * (1.0 / out.r2)) *
          (p.g * kappa);
  return out;
}

std::pair<FourVector, FourVector> tail_forces(const Worldline& w,
                                              const ChargeParams& p,
                                              double tau1, double tau,
                                              const quad::Options& opt) {
  p.validate();
  if (!(tau1 <= tau)) throw DomainError("tail_forces: need tau1 <= tau");
  if (p.k0 == 0.0) return {FourVector{}, FourVector{}};

  const WorldlineSample s1 = w.eval(tau1);
  const history::WeightedIntegrals h =
      history::weighted_integrals(w, p.k0, s1.z, s1.u, tau1, opt);
  const FourVector f_ret = h.bracket * (p.g * p.g);

  FourVector f_adv;
  if (tau > tau1) {
    quad::Options dyn = opt;
    dyn.pre_chunk = kPi / p.k0;
    const auto f = [&](double s2) {
      const WorldlineSample smp = w.eval(s2);
      const FourVector q = s1.z - smp.z;
      const double wv = p.k0 * std::sqrt(std::max(0.0, -dot(q, q)));
      const double kappa = p.k0 * p.k0 * kernel_j1_over_w(wv);
      const double r2 = -dot(q, smp.u);
      if (s2 - tau1 < 1e-5 / p.k0) return smp.a * (0.5 * kappa);
      return (q * ((1.0 + dot(q, smp.a)) / (r2 * r2)) - smp.u * (1.0 / r2)) *
             kappa;
    };
    f_adv = quad::integrate_adaptive(f, tau1, tau, dyn) * (p.g * p.g);
  }
  return {f_ret, f_adv};
}

FourVector p_tail_bound(const Worldline& w, const ChargeParams& p, double tau,
                        const quad::Options& opt) {
  p.validate();
  if (p.k0 == 0.0) return {};
  const WorldlineSample s = w.eval(tau);
  const history::WeightedIntegrals h =
      history::weighted_integrals(w, p.k0, s.z, s.u, tau, opt);
  return h.q_over_robs * (-0.5 * p.g * p.g);
}

FourVector p_tail_rad(const Worldline& w, const ChargeParams& p, double tau,
                      const quad::Options& opt) {
  p.validate();
  if (p.k0 == 0.0 || tau <= w.tau_first()) return {};
  const auto outer_f = [&](double tau1) {
    const history::RadiativeInner inner =
        history::radiative_inner(w, p.k0, w.eval(tau1), opt);
    return inner.p_term;
  };
  quad::Options out_opt = opt;
  out_opt.pre_chunk = kPi / p.k0;
  out_opt.max_intervals = 400;
  const FourVector v =
      quad::integrate_adaptive(outer_f, w.tau_first(), tau, out_opt);
  return v * (-0.5 * p.g * p.g);
}

AntisymTensor4 M_tail_rad(const Worldline& w, const ChargeParams& p, double tau,
                          const quad::Options& opt) {
  p.validate();
  if (p.k0 == 0.0 || tau <= w.tau_first()) return {};
  const auto outer_f = [&](double tau1) {
    const history::RadiativeInner inner =
        history::radiative_inner(w, p.k0, w.eval(tau1), opt);
    return inner.m_term.c;
  };
  quad::Options out_opt = opt;
  out_opt.pre_chunk = kPi / p.k0;
  out_opt.max_intervals = 400;
  const auto v = quad::integrate_adaptive(outer_f, w.tau_first(), tau, out_opt);
  AntisymTensor4 m;
  m.c = v;
  return m * (0.5 * p.g * p.g);
}

}  // namespace scalartail
