#include "scalartail/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/history.hpp"

namespace scalartail {

namespace {

FourVector project_orthogonal(const FourVector& v, const FourVector& u) {
  return v + u * dot(u, v);
}

FourVector normalized_velocity(const FourVector& u) {
  return u * (1.0 / std::sqrt(-dot(u, u)));
}

struct J2Cache {
  history::J2Integrals value;
  bool valid = false;
};

EomTerms assemble_terms(const WorldlineSample& s,
                        const ChargeParams& p, const ExternalPotential& ext,
                        EomMode mode, const FourVector& adot,
                        const history::WeightedIntegrals& h,
                        const history::J2Integrals& j2) {
  const double g = p.g;
  const double g2 = g * g;
  const double k0 = p.k0;

  EomTerms t;
  const double phi_e = ext.phi(s.z);
  const FourVector grad_e = ext.grad(s.z);

  t.m = p.m0 + g2 * h.i1 - g * phi_e;
  const double i1dot = k0 == 0.0 ? 0.0 : 0.5 * k0 * k0 - j2.robs_term;
  t.mdot = g2 * i1dot - g * dot(s.u, grad_e);
  t.tail = h.bracket * g2;
  t.f_self = project_orthogonal(t.tail, s.u);
  t.f_ext = project_orthogonal(grad_e, s.u) * g;
  t.schott = (adot - s.u * dot(s.a, s.a)) * (g2 / 3.0);

  if (mode == EomMode::Effective) {
    t.accel = (t.schott + t.tail + grad_e * g - s.u * t.mdot) * (1.0 / t.m);
  } else {
    const FourVector rhs = t.schott + s.u * (0.5 * g2 * k0 * k0) -
                           j2.q_term * g2 - s.u * (g2 * i1dot) + grad_e * g +
                           s.u * (g * dot(s.u, grad_e));
    t.accel = rhs * (1.0 / t.m);
  }
  return t;
}

}  // namespace

double dynamical_mass(const Worldline& hist, double tau, const ChargeParams& p,
                      const ExternalPotential& ext, const quad::Options& opt) {
  p.validate();
  const WorldlineSample s = hist.eval(tau);
  double i1 = 0.0;
  if (p.k0 > 0.0)
    i1 = history::weighted_integrals(hist, p.k0, s.z, s.u, tau, opt).i1;
  return p.m0 + p.g * p.g * i1 - p.g * ext.phi(s.z);
}

FourVector dressed_momentum(const Worldline& hist, double tau,
                            const ChargeParams& p, const ExternalPotential& ext,
                            const quad::Options& opt) {
  p.validate();
  const WorldlineSample s = hist.eval(tau);
  const double g2 = p.g * p.g;
  history::WeightedIntegrals h;
  if (p.k0 > 0.0)
    h = history::weighted_integrals(hist, p.k0, s.z, s.u, tau, opt);
  const double m = p.m0 + g2 * h.i1 - p.g * ext.phi(s.z);
  return s.u * m - s.a * (g2 / 3.0) - h.q_over_robs * (0.5 * g2);
}

FourVector self_force(const Worldline& hist, double tau, const ChargeParams& p,
                      const quad::Options& opt) {
  p.validate();
  if (p.k0 == 0.0) return {};
  const WorldlineSample s = hist.eval(tau);
  const history::WeightedIntegrals h =
      history::weighted_integrals(hist, p.k0, s.z, s.u, tau, opt);
  return project_orthogonal(h.bracket * (p.g * p.g), s.u);
}

FourVector external_force(const WorldlineSample& s, const ExternalPotential& ext,
                          double g) {
  return project_orthogonal(ext.grad(s.z), s.u) * g;
}

EomTerms eom_terms(const Worldline& hist, double tau, const ChargeParams& p,
                   const ExternalPotential& ext, EomMode mode,
                   const FourVector& adot, const quad::Options& opt) {
  p.validate();
  const WorldlineSample s = hist.eval(tau);
  history::WeightedIntegrals h;
  history::J2Integrals j2;
  if (p.k0 > 0.0) {
    h = history::weighted_integrals(hist, p.k0, s.z, s.u, tau, opt);
    j2 = history::j2_integrals(hist, p.k0, s.z, s.u, tau, opt);
  }
  return assemble_terms(s, p, ext, mode, adot, h, j2);
}

FourVector eom_rhs(const Worldline& hist, double tau, const ChargeParams& p,
                   const ExternalPotential& ext, EomMode mode,
                   const quad::Options& opt) {
  return eom_terms(hist, tau, p, ext, mode, worldline_jerk(hist, tau), opt)
      .accel;
}

FourVector worldline_jerk(const Worldline& hist, double tau) {
  const auto& samples = hist.samples();
  if (tau <= hist.tau_first() || samples.size() < 2) return {};
  if (tau > hist.tau_last()) {
    if (hist.has_posthistory()) return {};
    throw HistoryExhausted("jerk evaluation past the last sample");
  }
  auto it = std::upper_bound(
      samples.begin(), samples.end(), tau,
      [](double t, const WorldlineSample& s) { return t < s.tau; });
  const std::size_t hi =
      std::min<std::size_t>(it - samples.begin(), samples.size() - 1);
  const auto& s1 = samples[hi - 1];
  const auto& s2 = samples[hi];
  const double h = s2.tau - s1.tau;
  const double t = (tau - s1.tau) / h;
  // Second derivative of the cubic Hermite velocity interpolant.
  return (s1.u * (12 * t - 6) + s1.a * ((6 * t - 4) * h) +
          s2.u * (6 - 12 * t) + s2.a * ((6 * t - 2) * h)) *
         (1.0 / (h * h));
}

namespace {

// Second-order backward derivative on a possibly non-uniform node history.
FourVector divided_difference_rate(double t2, const FourVector& f2, double t1,
                                   const FourVector& f1, double t0,
                                   const FourVector& f0, bool have_three) {
  const FourVector d21 = (f2 - f1) / (t2 - t1);
  if (!have_three) return d21;
  const FourVector d10 = (f1 - f0) / (t1 - t0);
  const FourVector dd = (d21 - d10) / (t2 - t0);
  return d21 + dd * (t2 - t1);
}

struct NodeState {
  double tau = 0.0;
  FourVector a;
  FourVector a_applied;  // (f_self + f_ext)/m
  FourVector p_part;
  double m = 0.0;
};

}  // namespace

Trajectory integrate(const ChargeParams& p, const ExternalPotential& ext,
                     const FourVector& z0, const FourVector& u0, double tau0,
                     const IntegrateOptions& opt) {
  p.validate();
  if (!(opt.dt > 0.0)) throw DomainError("integrate: dt must be positive");
  if (!(opt.tau_end > tau0))
    throw DomainError("integrate: tau_end must exceed tau0");

  const double g2 = p.g * p.g;
  quad::Options quad_balance = opt.quad;
  quad_balance.rel_tol = std::min(opt.quad.rel_tol, 1e-13);
  quad_balance.abs_tol = std::min(opt.quad.abs_tol, 1e-15);

  const FourVector un0 = normalized_velocity(u0);
  Worldline hist(std::vector<WorldlineSample>{{tau0, z0, un0, FourVector{}}},
                 un0);

  const auto balance_integrals = [&](double tau) {
    const WorldlineSample s = hist.eval(tau);
    history::WeightedIntegrals h;
    if (p.k0 > 0.0)
      h = history::weighted_integrals(hist, p.k0, s.z, s.u, tau, quad_balance);
    return std::pair<WorldlineSample, history::WeightedIntegrals>(s, h);
  };

  // Start-of-history fixed point for the initial acceleration.
  FourVector adot{};
  EomTerms terms;
  for (int it = 0; it < 16; ++it) {
    terms = eom_terms(hist, tau0, p, ext, opt.eom, adot, opt.quad);
    const FourVector a_new = project_orthogonal(terms.accel, un0);
    const auto& prev = hist.samples().back().a;
    const double delta = max_abs(a_new - prev);
    hist.replace_back({tau0, z0, un0, a_new});
    if (delta <= opt.corrector_tol * (1.0 + max_abs(a_new))) break;
  }

  Trajectory traj{std::move(hist), {}, {}, 0.0};
  Worldline& line = traj.history;

  std::vector<NodeState> nodes;
  {
    const auto [s, h] = balance_integrals(tau0);
    NodeState n;
    n.tau = tau0;
    n.a = s.a;
    n.a_applied = (terms.f_self + terms.f_ext) * (1.0 / terms.m);
    n.m = p.m0 + g2 * h.i1 - p.g * ext.phi(s.z);
    n.p_part = s.u * n.m - s.a * (g2 / 3.0) - h.q_over_robs * (0.5 * g2);
    nodes.push_back(n);

    StepRecord rec;
    rec.tau = tau0;
    rec.z = s.z;
    rec.u = s.u;
    rec.a = s.a;
    rec.m = n.m;
    rec.p_tail_bound = h.q_over_robs * (-0.5 * g2);
    traj.records.push_back(rec);
  }

  // Cumulative Noether flows.
  FourVector p_dir_acc, p_tail_acc;
  AntisymTensor4 M_acc;

  double dt = opt.dt;
  int halvings = 0;
  double tau = tau0;

  // 3-point Gauss-Legendre nodes on [0,1].
  constexpr double kGx[3] = {0.1127016653792583, 0.5, 0.8872983346207417};
  constexpr double kGw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

  while (tau < opt.tau_end - 1e-12 * std::max(1.0, std::fabs(opt.tau_end))) {
    const double h = std::min(dt, opt.tau_end - tau);
    const double tau_next = tau + h;
    const NodeState& nprev = nodes.back();
    const WorldlineSample sn = line.eval(tau);

    // Hermite-extrapolated predictor.
    FourVector u_pred = normalized_velocity(sn.u + sn.a * h);
    FourVector z_pred = sn.z + sn.u * h + sn.a * (0.5 * h * h);
    line.append({tau_next, z_pred, u_pred, project_orthogonal(sn.a, u_pred)});

    const bool have_three = nodes.size() >= 2;
    const NodeState* n0 = have_three ? &nodes[nodes.size() - 2] : nullptr;

    bool converged = false;
    EomTerms step_terms;
    FourVector adot_cur =
        have_three ? divided_difference_rate(
                         nprev.tau,
                         opt.schott == SchottMode::OrderReduced
                             ? nprev.a_applied
                             : nprev.a,
                         n0->tau,
                         opt.schott == SchottMode::OrderReduced ? n0->a_applied
                                                                : n0->a,
                         0.0, FourVector{}, false)
                   : FourVector{};

    FourVector a_prev_it = sn.a;
    for (int it = 0; it < opt.max_corrector_iters; ++it) {
      step_terms =
          eom_terms(line, tau_next, p, ext, opt.eom, adot_cur, opt.quad);
      const FourVector a_app_new =
          (step_terms.f_self + step_terms.f_ext) * (1.0 / step_terms.m);

      FourVector a_new = step_terms.accel;
      const FourVector u_new =
          normalized_velocity(sn.u + (sn.a + a_new) * (0.5 * h));
      a_new = project_orthogonal(a_new, u_new);
      const FourVector z_new =
          sn.z + (sn.u + u_new) * (0.5 * h) + (sn.a - a_new) * (h * h / 12.0);
      line.replace_back({tau_next, z_new, u_new, a_new});

      if (opt.schott == SchottMode::OrderReduced) {
        adot_cur = divided_difference_rate(tau_next, a_app_new, nprev.tau,
                                           nprev.a_applied,
                                           have_three ? n0->tau : 0.0,
                                           have_three ? n0->a_applied
                                                      : FourVector{},
                                           have_three);
      } else {
        adot_cur = divided_difference_rate(
            tau_next, a_new, nprev.tau, nprev.a,
            have_three ? n0->tau : 0.0,
            have_three ? n0->a : FourVector{}, have_three);
      }

      const double delta = max_abs(a_new - a_prev_it);
      a_prev_it = a_new;
      if (delta <= opt.corrector_tol * (1.0 + max_abs(a_new))) {
        converged = true;
        break;
      }
    }

    if (!converged) {
      line.pop_back();
      traj.balance.rejected_steps += 1;
      halvings += 1;
      if (halvings > opt.max_halvings)
        throw NumericalFailure(
            "integrate: corrector failed to converge at the minimum step");
      dt *= 0.5;
      continue;
    }

    // Accepted: balance bookkeeping over [tau, tau_next].
    const auto [s_next, h_next] = balance_integrals(tau_next);
    NodeState nnew;
    nnew.tau = tau_next;
    nnew.a = s_next.a;
    nnew.a_applied =
        (step_terms.f_self + step_terms.f_ext) * (1.0 / step_terms.m);
    nnew.m = p.m0 + g2 * h_next.i1 - p.g * ext.phi(s_next.z);
    nnew.p_part =
        s_next.u * nnew.m - s_next.a * (g2 / 3.0) -
        h_next.q_over_robs * (0.5 * g2);

    StepRecord rec;
    rec.tau = tau_next;
    rec.z = s_next.z;
    rec.u = s_next.u;
    rec.a = s_next.a;
    rec.m = nnew.m;

    if (opt.track_flows) {
      FourVector dp_dir, dp_tail, rhs_p;
      AntisymTensor4 dM_dir, dM_tail;
      AntisymTensor4 torque_ext;
      double force_scale = 0.0;
      for (int gnode = 0; gnode < 3; ++gnode) {
        const double tg = tau + h * kGx[gnode];
        const double wgt = h * kGw[gnode];
        const WorldlineSample sg = line.eval(tg);
        const double a2 = dot(sg.a, sg.a);
        const FourVector pdir_rate = sg.u * (g2 / 3.0 * a2);
        const AntisymTensor4 Mdir_rate =
            (wedge(sg.z, sg.u) * a2 + wedge(sg.u, sg.a)) * (g2 / 3.0);
        FourVector ptail_rate;
        AntisymTensor4 Mtail_rate;
        if (p.k0 > 0.0) {
          const history::RadiativeInner inner =
              history::radiative_inner(line, p.k0, sg, quad_balance);
          ptail_rate = inner.p_term * (-0.5 * g2);
          Mtail_rate = inner.m_term * (0.5 * g2);
        }
        const FourVector grad_g = ext.grad(sg.z);
        dp_dir += pdir_rate * wgt;
        dp_tail += ptail_rate * wgt;
        dM_dir += Mdir_rate * wgt;
        dM_tail += Mtail_rate * wgt;
        rhs_p += (grad_g * p.g - pdir_rate - ptail_rate) * wgt;
        torque_ext += wedge(sg.z, grad_g * p.g) * wgt;
        force_scale += wgt * (p.g * max_abs(grad_g) + max_abs(pdir_rate) +
                              max_abs(ptail_rate));
      }
      p_dir_acc += dp_dir;
      p_tail_acc += dp_tail;
      M_acc += dM_dir + dM_tail;

      rec.res_p = (nnew.p_part - nprev.p_part) - rhs_p;
      const AntisymTensor4 dM_tot =
          wedge(s_next.z, nnew.p_part) - wedge(sn.z, nprev.p_part) + dM_dir +
          dM_tail;
      rec.res_M = dM_tot - torque_ext;

      const double denom_p =
          std::max(max_abs(nnew.p_part - nprev.p_part) + force_scale,
                   1e-9 * p.m0 * h);
      const double denom_M = std::max(
          dM_tot.max_abs() + torque_ext.max_abs() +
              force_scale * (1.0 + max_abs(s_next.z)),
          1e-9 * p.m0 * h * (1.0 + max_abs(s_next.z)));
      rec.rel_p = max_abs(rec.res_p) / denom_p;
      rec.rel_M = rec.res_M.max_abs() / denom_M;

      traj.balance.max_rel_p = std::max(traj.balance.max_rel_p, rec.rel_p);
      traj.balance.max_rel_M = std::max(traj.balance.max_rel_M, rec.rel_M);
      traj.balance.max_abs_p =
          std::max(traj.balance.max_abs_p, max_abs(rec.res_p));
      traj.balance.max_abs_M =
          std::max(traj.balance.max_abs_M, rec.res_M.max_abs());
    }

    rec.p_dir_rad = p_dir_acc;
    rec.p_tail_rad = p_tail_acc;
    rec.p_tail_bound = h_next.q_over_robs * (-0.5 * g2);
    rec.M_rad = M_acc;
    traj.records.push_back(rec);

    nodes.push_back(nnew);
    if (nodes.size() > 3) nodes.erase(nodes.begin());
    traj.balance.steps += 1;
    tau = tau_next;
  }

  traj.final_mass = traj.records.back().m;
  return traj;
}

double mass_crosscheck(const Worldline& hist, const ChargeParams& p,
                       const ExternalPotential& ext, int grid_points,
                       const quad::Options& opt) {
  p.validate();
  if (grid_points < 3) throw DomainError("mass_crosscheck: need >= 3 points");
  const double tau0 = hist.tau_first();
  const double tau1 = hist.tau_last();
  const double g2 = p.g * p.g;

  // Route A ingredients and the balance-route integrand on a Simpson grid
  // (grid refined 4x between reported points).
  const int n = 4 * (grid_points - 1);
  const double h = (tau1 - tau0) / n;

  std::vector<double> m_direct(n + 1), i1(n + 1), dint(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double tau = tau0 + i * h;
    const WorldlineSample s = hist.eval(tau);
    history::WeightedIntegrals hi;
    if (p.k0 > 0.0)
      hi = history::weighted_integrals(hist, p.k0, s.z, s.u, tau, opt);
    i1[i] = hi.i1;
    m_direct[i] = p.m0 + g2 * hi.i1 - p.g * ext.phi(s.z);
    dint[i] = 0.5 * g2 * dot(s.u, hi.bracket) + p.g * dot(s.u, ext.grad(s.z));
  }

  // Cumulative integral of dint by composite Simpson over pairs of panels.
  std::vector<double> cumulative(n + 1, 0.0);
  for (int i = 2; i <= n; i += 2)
    cumulative[i] = cumulative[i - 2] +
                    h / 3.0 * (dint[i - 2] + 4.0 * dint[i - 1] + dint[i]);
  for (int i = 1; i <= n; i += 2)
    cumulative[i] = cumulative[i - 1] +
                    h / 12.0 *
                        (5.0 * dint[i - 1] + 8.0 * dint[i] -
                         dint[std::min(i + 1, n)]);

  const double pu0 = -m_direct[0] + 0.5 * g2 * i1[0];
  double max_residual = 0.0;
  for (int i = 0; i <= n; i += 4) {
    const double pu = pu0 + cumulative[i];
    const double m_balance = -pu + 0.5 * g2 * i1[i];
    max_residual = std::max(max_residual, std::fabs(m_balance - m_direct[i]));
  }
  return max_residual;
}

}  // namespace scalartail
