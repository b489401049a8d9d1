#include "scalartail/verify.hpp"

#include <cmath>
#include <random>

#include "scalartail/dynamics.hpp"
#include "scalartail/fields.hpp"
#include "scalartail/motions.hpp"
#include "scalartail/quadrature.hpp"
#include "scalartail/radiation.hpp"
#include "scalartail/specfun.hpp"
#include "scalartail/static_energy.hpp"

namespace scalartail {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

VerifyCheck make_check(const std::string& name, double residual, double tol) {
  return {name, residual, tol, residual <= tol};
}

// J2 = J1/w - J1' with J1' from a 5-point stencil.
VerifyCheck check_recurrence(bool fault_inject) {
  double worst = 0.0;
  for (int i = 0; i <= 160; ++i) {
    const double w = 1e-6 * std::pow(5e7, i / 160.0);  // 1e-6 .. 50
    const double h = std::min(1e-3, 0.25 * w);
    const double d1 = (-bessel_j1(w + 2 * h) + 8 * bessel_j1(w + h) -
                       8 * bessel_j1(w - h) + bessel_j1(w - 2 * h)) /
                      (12.0 * h);
    double j2 = bessel_j2(w);
    if (fault_inject) j2 *= 1.0 + 1e-6;
    worst = std::max(worst, std::fabs(j2 - (bessel_j1(w) / w - d1)));
  }
  return make_check("kernel-recurrence", worst, 1e-10);
}

// int_0^inf J1(u)/u du = 1, adaptive quadrature to 200 pi plus the two-term
// asymptotic remainder.
VerifyCheck check_normalization() {
  const double X = 200.0 * kPi;
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.pre_chunk = kPi;
  opt.max_intervals = 6000;
  const double head = quad::integrate_adaptive(
      [](double u) { return u < 1e-8 ? 0.5 : bessel_j1(u) / u; }, 0.0, X, opt);
  const double phase = X - 0.75 * kPi;
  const double tail =
      std::sqrt(2.0 / kPi) *
      (-std::sin(phase) / std::pow(X, 1.5) +
       1.125 * std::cos(phase) / std::pow(X, 2.5));
  return make_check("normalization-integral", std::fabs(head + tail - 1.0),
                    1e-6);
}

VerifyCheck check_angular_moments() {
  const FourVector u = [] {
    const std::array<double, 3> v = {0.3, -0.2, 0.4};
    const double g = 1.0 / std::sqrt(1.0 - (v[0] * v[0] + v[1] * v[1] +
                                            v[2] * v[2]));
    return FourVector{g, g * v[0], g * v[1], g * v[2]};
  }();

  // Spatial triad orthogonal to u.
  std::array<FourVector, 3> e;
  std::array<FourVector, 3> seeds = {FourVector{0, 1, 0, 0},
                                     FourVector{0, 0, 1, 0},
                                     FourVector{0, 0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    FourVector v = seeds[i] + u * dot(u, seeds[i]);
    for (int j = 0; j < i; ++j) v -= e[j] * dot(v, e[j]);
    e[i] = v * (1.0 / std::sqrt(dot(v, v)));
  }

  constexpr int kN = 1000000;
  std::mt19937_64 rng(20240817ull);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  std::array<double, 4> m1{}, s1{};
  std::array<std::array<double, 4>, 4> m2{}, s2{};
  Rank3Tensor4 m3{}, s3{};
  for (int n = 0; n < kN; ++n) {
    const double ct = 1.0 - 2.0 * uni(rng);
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double ph = 2.0 * kPi * uni(rng);
    const FourVector k = u + e[0] * (st * std::cos(ph)) +
                         e[1] * (st * std::sin(ph)) + e[2] * ct;
    for (int a = 0; a < 4; ++a) {
      m1[a] += k[a];
      s1[a] += k[a] * k[a];
      for (int b = 0; b < 4; ++b) {
        const double kab = k[a] * k[b];
        m2[a][b] += kab;
        s2[a][b] += kab * kab;
        for (int c = 0; c < 4; ++c) {
          const double kabc = kab * k[c];
          m3[a][b][c] += kabc;
          s3[a][b][c] += kabc * kabc;
        }
      }
    }
  }

  const auto sigma_ratio = [&](double mean_acc, double sq_acc,
                               double expected) {
    const double mean = mean_acc / kN;
    const double var = std::max(sq_acc / kN - mean * mean, 1e-30);
    const double sigma = std::sqrt(var / kN);
    return std::fabs(mean - expected) / sigma;
  };

  double worst = 0.0;
  const FourVector c1 = angular_moment_1(u);
  const SymTensor4 c2 = angular_moment_2(u);
  const Rank3Tensor4 c3 = angular_moment_3(u);
  for (int a = 0; a < 4; ++a) {
    worst = std::max(worst, sigma_ratio(m1[a], s1[a], c1[a]));
    for (int b = 0; b < 4; ++b) {
      worst = std::max(worst, sigma_ratio(m2[a][b], s2[a][b], c2(a, b)));
      for (int c = 0; c < 4; ++c)
        worst = std::max(worst, sigma_ratio(m3[a][b][c], s3[a][b][c],
                                            c3[a][b][c]));
    }
  }
  return make_check("angular-moments-mc", worst, 3.5);
}

VerifyCheck check_yukawa_reduction() {
  const double k0 = 2.0;
  const ChargeParams p{1.0, 0.7, k0};
  const Worldline line =
      Worldline::uniform_line({-30.0, 0, 0, 0}, {1, 0, 0, 0}, -30.0, 1.0, 63);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = (0.1 / k0) * std::pow(100.0, i / 49.0);
    const double phi = phi_retarded(line, p, {0.0, r, 0.0, 0.0});
    const double exact = yukawa_potential(p.g, k0, r);
    worst = std::max(worst, std::fabs(phi - exact) / std::fabs(exact));
  }
  return make_check("yukawa-reduction", worst, 1e-8);
}

struct UniformSetup {
  ChargeParams p{1.0, 0.5, 1.0};
  Worldline line;
  double tau_obs = 8.0;
  UniformSetup()
      : line(Worldline::uniform_line(
            {0, 0, 0, 0},
            {1.1547005383792517, 0.57735026918962573, 0, 0},  // v = 0.5
            -10.0, 10.0, 41)) {}
};

VerifyCheck check_uniform_zero_radiation() {
  const UniformSetup s;
  const double r1 = max_abs(p_dir_rad(s.line, s.p.g, s.tau_obs));
  const double r2 = max_abs(p_tail_rad(s.line, s.p, s.tau_obs));
  const double r3 = max_abs(self_force(s.line, s.tau_obs, s.p));
  return make_check("uniform-zero-radiation", std::max({r1, r2, r3}), 1e-9);
}

VerifyCheck check_bound_tail_momentum() {
  const UniformSetup s;
  const FourVector u = s.line.eval(s.tau_obs).u;
  const FourVector got = p_tail_bound(s.line, s.p, s.tau_obs);
  const FourVector want = u * (-0.5 * s.p.g * s.p.g * s.p.k0);
  return make_check("bound-tail-momentum", max_abs(got - want), 1e-8);
}

VerifyCheck check_mass_constant() {
  const UniformSetup s;
  const double m =
      dynamical_mass(s.line, s.tau_obs, s.p, ExternalPotential::none());
  const double want = s.p.m0 + s.p.g * s.p.g * s.p.k0;
  return make_check("mass-constant", std::fabs(m - want), 1e-8);
}

VerifyCheck check_mode_equivalence() {
  const ChargeParams p{1.0, 0.3, 1.2};
  const ExternalPotential ext =
      ExternalPotential::gaussian_pulse(0.05, 2.0, 2.5, {1.0, 0.0, 0.0});
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SmoothMotion motion = random_smooth_motion(seed, 0.25);
    const Worldline line = discretize_motion(motion, -10.0, 10.0, 2501);
    for (const double tau : {3.7, 6.5}) {
      const FourVector adot = worldline_jerk(line, tau);
      const FourVector a_eff =
          eom_terms(line, tau, p, ext, EomMode::Effective, adot).accel;
      const FourVector a_hc =
          eom_terms(line, tau, p, ext, EomMode::HarishChandra, adot).accel;
      worst = std::max(worst, max_abs(a_eff - a_hc));
    }
  }
  return make_check("mode-equivalence", worst, 1e-7);
}

VerifyCheck check_coincidence_decay() {
  const double k0 = 1.0;
  const SmoothMotion motion = random_smooth_motion(7, 0.35);
  const double tau1 = 2.0;
  const WorldlineSample s1 = motion_sample(motion, tau1);

  std::vector<double> logd, logv;
  for (int i = 0; i <= 8; ++i) {
    const double delta = 1e-4 * std::pow(100.0, i / 8.0);
    const double tau2 = tau1 - delta;
    WorldlineSample s2;
    s2.tau = tau2;
    s2.u = motion.velocity(tau2);
    s2.a = motion.acceleration(tau2);
    s2.z = s1.z - motion_displacement(motion, tau2, tau1);
    const FourVector q = s1.z - s2.z;
    const double w = k0 * std::sqrt(std::max(0.0, -dot(q, q)));
    const double kappa = k0 * k0 * kernel_j1_over_w(w);
    const double r2 = -dot(q, s2.u);
    const double r1 = -dot(q, s1.u);
    const FourVector bracket = q * ((1.0 + dot(q, s2.a)) / (r2 * r2) +
                                    (1.0 - dot(q, s1.a)) / (r1 * r1)) -
                               s2.u * (1.0 / r2) - s1.u * (1.0 / r1);
    logd.push_back(std::log(delta));
    logv.push_back(std::log(max_abs(bracket * kappa)));
  }
  const int n = static_cast<int>(logd.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += logd[i];
    sy += logv[i];
    sxx += logd[i] * logd[i];
    sxy += logd[i] * logv[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  VerifyCheck c;
  c.name = "coincidence-decay-slope";
  c.residual = 1.0 - slope;  // negative residual = slope above 1
  c.tolerance = 0.0;
  c.pass = slope >= 1.0;
  return c;
}

VerifyCheck check_static_energy() {
  const double g = 0.8, k0 = 1.5;
  const double eps = 1e-3 / k0;
  const StaticEnergy se = static_energy(g, k0, eps);
  const double closed = static_energy_closed_form(g, k0, eps);
  return make_check("static-energy",
                    std::fabs(se.total_numeric - closed) / closed, 1e-8);
}

VerifyCheck check_mass_crosscheck() {
  const ChargeParams p{1.0, 0.4, 1.0};
  const SmoothMotion motion =
      kicked_motion(0.6, 0.0, 3.0, {1, 0, 0}, {-10, 0, 0, 0}, -10.0);
  const Worldline line = discretize_motion(motion, -10.0, 8.0, 1801);
  const ExternalPotential ext =
      ExternalPotential::gaussian_pulse(0.05, 1.5, 2.0, {1.0, 0.0, 0.0});
  const double res = mass_crosscheck(line, p, ext, 25);
  return make_check("mass-crosscheck", res, 1e-6);
}

}  // namespace

VerifyReport verify_suite(bool fault_inject) {
  VerifyReport report;
  report.checks.push_back(check_recurrence(fault_inject));
  report.checks.push_back(check_normalization());
  report.checks.push_back(check_angular_moments());
  report.checks.push_back(check_yukawa_reduction());
  report.checks.push_back(check_uniform_zero_radiation());
  report.checks.push_back(check_bound_tail_momentum());
  report.checks.push_back(check_mass_constant());
  report.checks.push_back(check_mode_equivalence());
  report.checks.push_back(check_coincidence_decay());
  report.checks.push_back(check_static_energy());
  report.checks.push_back(check_mass_crosscheck());
  for (const auto& c : report.checks) report.all_pass &= c.pass;
  return report;
}

}  // namespace scalartail
