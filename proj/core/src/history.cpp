#include "scalartail/history.hpp"

#include <cmath>

#include "scalartail/specfun.hpp"

namespace scalartail::history {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Below this separation in proper time the on-worldline integrands are
// replaced by their coincidence limits; the direct formulas lose digits to
// cancellation there while the limits are exact to O(delta).
double coincidence_window(double k0) { return 1e-5 / k0; }

quad::Options dynamic_options(const quad::Options& opt, double k0) {
  quad::Options dyn = opt;
  dyn.pre_chunk = kPi / k0;
  return dyn;
}

struct StraightSegment {
  FourVector B;      // observation point minus anchor point
  FourVector u_seg;  // segment velocity
  double b = 0.0;
  quad::BesselPhase phase;
  bool past = true;

  // K(xi) = B + xi*u_seg into the past, B - xi*u_seg into the future.
  FourVector K(double xi) const {
    return past ? B + u_seg * xi : B - u_seg * xi;
  }
  // r(xi) = -(K.u_seg): b + xi into the past, -(b + xi) into the future.
  double r(double xi) const { return past ? b + xi : -(b + xi); }
};

StraightSegment make_segment(const Worldline& w, const FourVector& x,
                             double k0, double tau_anchor, bool past) {
  StraightSegment seg;
  seg.past = past;
  seg.u_seg = past ? w.prehistory_velocity() : *w.posthistory_velocity();
  seg.B = x - w.eval(tau_anchor).z;
  seg.b = past ? -dot(seg.B, seg.u_seg) : dot(seg.B, seg.u_seg);
  seg.phase = quad::BesselPhase{k0, seg.b, seg.b * seg.b + dot(seg.B, seg.B)};
  return seg;
}

}  // namespace

WeightedIntegrals weighted_integrals(const Worldline& w, double k0,
                                     const FourVector& z_obs,
                                     const FourVector& u_obs, double tau_upper,
                                     const quad::Options& opt) {
  WeightedIntegrals out;
  if (k0 == 0.0) return out;

  using V = std::array<double, 9>;
  const double delta_c = coincidence_window(k0);

  const auto pack = [](double i1, const FourVector& br, const FourVector& qr) {
    return V{i1, br.t, br.x, br.y, br.z, qr.t, qr.x, qr.y, qr.z};
  };

  V acc{};
  const double tau_anchor = std::min(tau_upper, w.tau_first());

  if (tau_upper > tau_anchor) {
    const auto f = [&](double s) -> V {
      const WorldlineSample smp = w.eval(s);
      const double delta = tau_upper - s;
      if (delta < delta_c) {
        const double kappa = k0 * k0 * kernel_j1_over_w(k0 * delta);
        return pack(kappa, smp.a * (0.5 * kappa), u_obs * kappa);
      }
      const FourVector q = z_obs - smp.z;
      const double wv = k0 * std::sqrt(std::max(0.0, -dot(q, q)));
      const double kappa = k0 * k0 * kernel_j1_over_w(wv);
      const double rs = -dot(q, smp.u);
      const double robs = -dot(q, u_obs);
      const FourVector br =
          q * ((1.0 + dot(q, smp.a)) / (rs * rs)) - smp.u * (1.0 / rs);
      return pack(kappa, br * kappa, q * (kappa / robs));
    };
    const V dyn = quad::integrate_adaptive(f, tau_anchor, tau_upper,
                                           dynamic_options(opt, k0));
    for (int i = 0; i < 9; ++i) acc[i] += dyn[i];
  }

  const StraightSegment seg = make_segment(w, z_obs, k0, tau_anchor, true);
  const double beta = -dot(seg.B, u_obs);
  const double gamma = -dot(seg.u_seg, u_obs);
  const FourVector br_num = seg.B - seg.u_seg * seg.b;  // (K - r u0), constant
  const double on_line_start = std::max(0.0, tau_upper - tau_anchor);
  const auto ftail = [&](double xi) -> V {
    const double wv = seg.phase.w(xi);
    const double kappa = k0 * k0 * kernel_j1_over_w(wv);
    const double rr = seg.b + xi;
    const double robs = beta + gamma * xi;
    if (xi + on_line_start < delta_c)
      return pack(kappa, FourVector{}, u_obs * kappa);
    return pack(kappa, br_num * (kappa / (rr * rr)),
                seg.K(xi) * (kappa / robs));
  };
  const V tail = quad::integrate_bessel_tail(ftail, 0.0, seg.phase, 1, opt);
  for (int i = 0; i < 9; ++i) acc[i] += tail[i];

  out.i1 = acc[0];
  out.bracket = {acc[1], acc[2], acc[3], acc[4]};
  out.q_over_robs = {acc[5], acc[6], acc[7], acc[8]};
  return out;
}

J2Integrals j2_integrals(const Worldline& w, double k0, const FourVector& z_obs,
                         const FourVector& u_obs, double tau_upper,
                         const quad::Options& opt) {
  J2Integrals out;
  if (k0 == 0.0) return out;

  using V = std::array<double, 5>;
  const double k04 = k0 * k0 * k0 * k0;
  const double tau_anchor = std::min(tau_upper, w.tau_first());
  V acc{};

  if (tau_upper > tau_anchor) {
    const auto f = [&](double s) -> V {
      const WorldlineSample smp = w.eval(s);
      const FourVector q = z_obs - smp.z;
      const double wv = k0 * std::sqrt(std::max(0.0, -dot(q, q)));
      const double kappa2 = k04 * kernel_j2_over_w2(wv);
      const double robs = -dot(q, u_obs);
      return {kappa2 * robs, kappa2 * q.t, kappa2 * q.x, kappa2 * q.y,
              kappa2 * q.z};
    };
    const V dyn = quad::integrate_adaptive(f, tau_anchor, tau_upper,
                                           dynamic_options(opt, k0));
    for (int i = 0; i < 5; ++i) acc[i] += dyn[i];
  }

  const StraightSegment seg = make_segment(w, z_obs, k0, tau_anchor, true);
  const double beta = -dot(seg.B, u_obs);
  const double gamma = -dot(seg.u_seg, u_obs);
  const auto ftail = [&](double xi) -> V {
    const double kappa2 = k04 * kernel_j2_over_w2(seg.phase.w(xi));
    const FourVector q = seg.K(xi);
    const double robs = beta + gamma * xi;
    return {kappa2 * robs, kappa2 * q.t, kappa2 * q.x, kappa2 * q.y,
            kappa2 * q.z};
  };
  const V tail = quad::integrate_bessel_tail(ftail, 0.0, seg.phase, 2, opt);
  for (int i = 0; i < 5; ++i) acc[i] += tail[i];

  out.robs_term = acc[0];
  out.q_term = {acc[1], acc[2], acc[3], acc[4]};
  return out;
}

namespace {

using V5 = std::array<double, 5>;

V5 field_integrand(const Worldline& w, double k0, const FourVector& x,
                   double s) {
  const WorldlineSample smp = w.eval(s);
  const FourVector K = x - smp.z;
  const double wv = k0 * std::sqrt(std::max(0.0, -dot(K, K)));
  const double kappa = k0 * k0 * kernel_j1_over_w(wv);
  const double r = -dot(K, smp.u);
  const FourVector br =
      K * ((1.0 + dot(K, smp.a)) / (r * r)) - smp.u * (1.0 / r);
  return {kappa, kappa * br.t, kappa * br.x, kappa * br.y, kappa * br.z};
}

V5 straight_field_integrand(const StraightSegment& seg, double k0, double xi) {
  const double kappa = k0 * k0 * kernel_j1_over_w(seg.phase.w(xi));
  const FourVector K = seg.K(xi);
  const double r = seg.r(xi);
  const FourVector br = K * (1.0 / (r * r)) - seg.u_seg * (1.0 / r);
  return {kappa, kappa * br.t, kappa * br.x, kappa * br.y, kappa * br.z};
}

FieldTail unpack_field(const V5& v) {
  return {v[0], {v[1], v[2], v[3], v[4]}};
}

}  // namespace

FieldTail field_tail_retarded(const Worldline& w, double k0,
                              const FourVector& x, double tau_ret,
                              const quad::Options& opt) {
  if (k0 == 0.0) return {};
  V5 acc{};
  const double tau_anchor = std::min(tau_ret, w.tau_first());
  if (tau_ret > tau_anchor) {
    const auto f = [&](double s) { return field_integrand(w, k0, x, s); };
    const V5 dyn = quad::integrate_adaptive(f, tau_anchor, tau_ret,
                                            dynamic_options(opt, k0));
    for (int i = 0; i < 5; ++i) acc[i] += dyn[i];
  }
  const StraightSegment seg = make_segment(w, x, k0, tau_anchor, true);
  const auto f = [&](double xi) { return straight_field_integrand(seg, k0, xi); };
  const V5 tail = quad::integrate_bessel_tail(f, 0.0, seg.phase, 1, opt);
  for (int i = 0; i < 5; ++i) acc[i] += tail[i];
  return unpack_field(acc);
}

FieldTail field_tail_advanced(const Worldline& w, double k0,
                              const FourVector& x, double tau_adv,
                              const quad::Options& opt) {
  if (k0 == 0.0) return {};
  if (!w.has_posthistory())
    throw HistoryExhausted(
        "advanced tail needs a uniform post-history closure for k0 > 0");
  V5 acc{};
  const double tau_anchor = std::max(tau_adv, w.tau_last());
  if (tau_adv < tau_anchor) {
    const auto f = [&](double s) { return field_integrand(w, k0, x, s); };
    const V5 dyn = quad::integrate_adaptive(f, tau_adv, tau_anchor,
                                            dynamic_options(opt, k0));
    for (int i = 0; i < 5; ++i) acc[i] += dyn[i];
  }
  const StraightSegment seg = make_segment(w, x, k0, tau_anchor, false);
  const auto f = [&](double xi) { return straight_field_integrand(seg, k0, xi); };
  const V5 tail = quad::integrate_bessel_tail(f, 0.0, seg.phase, 1, opt);
  for (int i = 0; i < 5; ++i) acc[i] += tail[i];
  return unpack_field(acc);
}

RadiativeInner radiative_inner(const Worldline& w, double k0,
                               const WorldlineSample& s1,
                               const quad::Options& opt) {
  RadiativeInner out;
  if (k0 == 0.0) return out;

  using V = std::array<double, 10>;
  const double delta_c = coincidence_window(k0);
  const double tau_anchor = std::min(s1.tau, w.tau_first());

  const auto assemble = [&](const FourVector& q, const FourVector& z2,
                            const FourVector& u2, const FourVector& a2,
                            double kappa) -> V {
    const double r2 = -dot(q, u2);
    const double r1 = -dot(q, s1.u);
    const double c2 = (1.0 + dot(q, a2)) / (r2 * r2);
    const double c1 = (1.0 - dot(q, s1.a)) / (r1 * r1);
    const FourVector p = q * (c1 + c2) - u2 * (1.0 / r2) - s1.u * (1.0 / r1);
    const AntisymTensor4 m = wedge(s1.z, z2) * (c1 + c2) +
                             wedge(s1.z, u2) * (1.0 / r2) +
                             wedge(z2, s1.u) * (1.0 / r1);
    return {kappa * p.t,    kappa * p.x,    kappa * p.y,    kappa * p.z,
            kappa * m.c[0], kappa * m.c[1], kappa * m.c[2], kappa * m.c[3],
            kappa * m.c[4], kappa * m.c[5]};
  };

  V acc{};
  if (s1.tau > tau_anchor) {
    const auto f = [&](double s) -> V {
      if (s1.tau - s < delta_c) return V{};  // integrand vanishes linearly
      const WorldlineSample smp = w.eval(s);
      const FourVector q = s1.z - smp.z;
      const double wv = k0 * std::sqrt(std::max(0.0, -dot(q, q)));
      const double kappa = k0 * k0 * kernel_j1_over_w(wv);
      return assemble(q, smp.z, smp.u, smp.a, kappa);
    };
    const V dyn = quad::integrate_adaptive(f, tau_anchor, s1.tau,
                                           dynamic_options(opt, k0));
    for (int i = 0; i < 10; ++i) acc[i] += dyn[i];
  }

  const StraightSegment seg = make_segment(w, s1.z, k0, tau_anchor, true);
  const FourVector z_anchor = w.eval(tau_anchor).z;
  const double on_line_start = std::max(0.0, s1.tau - tau_anchor);
  const auto ftail = [&](double xi) -> V {
    if (xi + on_line_start < delta_c) return V{};
    const double kappa = k0 * k0 * kernel_j1_over_w(seg.phase.w(xi));
    const FourVector z2 = z_anchor - seg.u_seg * xi;
    return assemble(seg.K(xi), z2, seg.u_seg, FourVector{}, kappa);
  };
  const V tail = quad::integrate_bessel_tail(ftail, 0.0, seg.phase, 1, opt);
  for (int i = 0; i < 10; ++i) acc[i] += tail[i];

  out.p_term = {acc[0], acc[1], acc[2], acc[3]};
  out.m_term.c = {acc[4], acc[5], acc[6], acc[7], acc[8], acc[9]};
  return out;
}

}  // namespace scalartail::history
