#include "scalartail/worldline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "scalartail/errors.hpp"
#include "scalartail/greens.hpp"

namespace scalartail {

namespace {

constexpr double kNormTol = 1e-8;

void validate_sample(const WorldlineSample& s) {
  if (!(std::isfinite(s.tau) && s.z.finite() && s.u.finite() && s.a.finite()))
    throw DomainError("worldline sample has non-finite entries");
  if (std::fabs(dot(s.u, s.u) + 1.0) > kNormTol)
    throw DomainError("worldline sample violates u.u = -1");
  if (std::fabs(dot(s.u, s.a)) > kNormTol)
    throw DomainError("worldline sample violates u.a = 0");
}

WorldlineSample renormalized(double tau, const FourVector& z,
                             const FourVector& u_raw, const FourVector& a_raw) {
  const double s2 = -dot(u_raw, u_raw);
  const double lam = 1.0 / std::sqrt(s2);
  const double ua = dot(u_raw, a_raw);
  WorldlineSample s;
  s.tau = tau;
  s.z = z;
  s.u = u_raw * lam;
  s.a = a_raw * lam + u_raw * (lam * lam * lam * ua);
  return s;
}

}  // namespace

Worldline::Worldline(std::vector<WorldlineSample> samples,
                     std::optional<FourVector> prehistory_velocity,
                     std::optional<FourVector> posthistory_velocity)
    : samples_(std::move(samples)), posthistory_u_(posthistory_velocity) {
  if (samples_.empty()) throw DomainError("worldline needs at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    validate_sample(samples_[i]);
    if (i > 0) {
      if (!(samples_[i].tau > samples_[i - 1].tau))
        throw DomainError("worldline tau must be strictly increasing");
      if (!(samples_[i].z.t > samples_[i - 1].z.t))
        throw DomainError("worldline z0 must be strictly increasing");
    }
  }
  prehistory_u_ = prehistory_velocity.value_or(samples_.front().u);
  if (std::fabs(dot(prehistory_u_, prehistory_u_) + 1.0) > kNormTol)
    throw DomainError("prehistory velocity violates u.u = -1");
  if (posthistory_u_ &&
      std::fabs(dot(*posthistory_u_, *posthistory_u_) + 1.0) > kNormTol)
    throw DomainError("posthistory velocity violates u.u = -1");
}

Worldline Worldline::uniform_line(const FourVector& z0, const FourVector& u,
                                  double tau0, double tau1, int n_samples) {
  if (n_samples < 1) throw DomainError("uniform_line needs n_samples >= 1");
  const double lam = 1.0 / std::sqrt(-dot(u, u));
  const FourVector un = u * lam;
  std::vector<WorldlineSample> samples;
  samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double tau =
        n_samples == 1 ? tau0 : tau0 + (tau1 - tau0) * i / (n_samples - 1);
    samples.push_back({tau, z0 + un * (tau - tau0), un, FourVector{}});
  }
  return Worldline(std::move(samples), un, un);
}

WorldlineSample Worldline::eval(double tau) const {
  const double t0 = tau_first();
  const double tN = tau_last();
  if (tau <= t0) {
    const auto& s0 = samples_.front();
    return {tau, s0.z + prehistory_u_ * (tau - t0), prehistory_u_, FourVector{}};
  }
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::fabs(tN));
  if (tau > tN) {
    if (tau <= tN + slack) return samples_.back();
    if (posthistory_u_) {
      const auto& sN = samples_.back();
      return {tau, sN.z + *posthistory_u_ * (tau - tN), *posthistory_u_,
              FourVector{}};
    }
    throw HistoryExhausted("worldline evaluation past the last sample");
  }

  auto it = std::upper_bound(
      samples_.begin(), samples_.end(), tau,
      [](double t, const WorldlineSample& s) { return t < s.tau; });
  const std::size_t hi = std::min<std::size_t>(it - samples_.begin(),
                                               samples_.size() - 1);
  const auto& s1 = samples_[hi - 1];
  const auto& s2 = samples_[hi];
  const double h = s2.tau - s1.tau;
  const double t = (tau - s1.tau) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;

  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  const double d00 = (6 * t2 - 6 * t) / h;
  const double d10 = (3 * t2 - 4 * t + 1) / h;
  const double d01 = (-6 * t2 + 6 * t) / h;
  const double d11 = (3 * t2 - 2 * t) / h;

  const FourVector z =
      s1.z * h00 + s1.u * (h10 * h) + s2.z * h01 + s2.u * (h11 * h);
  const FourVector u_raw =
      s1.u * h00 + s1.a * (h10 * h) + s2.u * h01 + s2.a * (h11 * h);
  const FourVector a_raw =
      s1.u * d00 + s1.a * (d10 * h) + s2.u * d01 + s2.a * (d11 * h);
  return renormalized(tau, z, u_raw, a_raw);
}

double Worldline::time_coordinate_root(double x0) const {
  // z0(tau) is strictly increasing; bisect over the full reachable range.
  double lo = tau_first();
  while (eval(lo).z.t > x0) lo -= std::max(1.0, 2.0 * (tau_first() - lo) + 1.0);
  double hi = tau_last();
  if (eval(hi).z.t < x0) {
    if (!posthistory_u_) return std::numeric_limits<double>::quiet_NaN();
    double step = std::max(1.0, hi - lo);
    while (eval(hi).z.t < x0) {
      hi += step;
      step *= 2.0;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (eval(mid).z.t < x0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double Worldline::cone_time(const FourVector& x, bool retarded) const {
  const auto sigma_of = [&](double tau) { return synge_sigma(x, eval(tau).z); };

  const double tau_star = time_coordinate_root(x.t);
  double anchor;
  if (std::isnan(tau_star)) {
    // z0 never reaches x0 within the recorded history.
    if (!retarded)
      throw HistoryExhausted("advanced time outside recorded history");
    if (sigma_of(tau_last()) < 0.0)
      throw HistoryExhausted("retarded time outside recorded history");
    anchor = tau_last();
  } else {
    const auto s_star = eval(tau_star);
    const double dist = spatial_norm(x - s_star.z);
    const double scale = 1.0 + spatial_norm(x) + std::fabs(x.t);
    if (dist < 1e-12 * scale)
      throw OnWorldlineError("field point lies on the worldline");
    anchor = tau_star;
  }

  // March away from the anchor (sigma >= 0 there) until the cone is crossed.
  const double dir = retarded ? -1.0 : 1.0;
  double inner = anchor;
  double step = 0.5 * (1.0 + std::fabs(anchor) * 1e-3);
  double outer = anchor;
  while (true) {
    outer = inner + dir * step;
    if (!retarded && !posthistory_u_ && outer > tau_last()) {
      if (sigma_of(tau_last()) > 0.0)
        throw HistoryExhausted("advanced time outside recorded history");
      outer = tau_last();
      break;
    }
    if (sigma_of(outer) < 0.0) break;
    inner = outer;
    step *= 2.0;
  }

  // Safeguarded Newton on sigma(tau) within [inner, outer]. Sigma is >= 0 on
  // the anchor side of the cone and < 0 beyond it.
  double lo = std::min(inner, outer);
  double hi = std::max(inner, outer);
  double tau = 0.5 * (lo + hi);
  const double tau_tol = 1e-12 * std::max(1.0, std::fabs(tau));
  for (int i = 0; i < 200; ++i) {
    const auto s = eval(tau);
    const double g = synge_sigma(x, s.z);
    const double gp = -dot(x - s.z, s.u);
    const bool sigma_positive = g > 0.0;
    if (retarded) {
      (sigma_positive ? hi : lo) = tau;
    } else {
      (sigma_positive ? lo : hi) = tau;
    }
    if (hi - lo < tau_tol) break;
    const double newton = gp != 0.0 ? tau - g / gp : tau;
    const bool newton_ok = newton > lo && newton < hi &&
                           std::fabs(newton - tau) > 0.0;
    const double next = newton_ok ? newton : 0.5 * (lo + hi);
    if (newton_ok && std::fabs(next - tau) < tau_tol) {
      tau = next;
      break;
    }
    tau = next;
  }
  return tau;
}

double Worldline::retarded_time(const FourVector& x) const {
  return cone_time(x, true);
}

double Worldline::advanced_time(const FourVector& x) const {
  return cone_time(x, false);
}

void Worldline::append(const WorldlineSample& s) {
  validate_sample(s);
  if (!(s.tau > tau_last()))
    throw DomainError("appended sample must advance tau");
  samples_.push_back(s);
}

void Worldline::pop_back() {
  if (samples_.size() <= 1)
    throw DomainError("cannot pop the only worldline sample");
  samples_.pop_back();
}

void Worldline::replace_back(const WorldlineSample& s) {
  validate_sample(s);
  if (samples_.size() >= 2 && !(s.tau > samples_[samples_.size() - 2].tau))
    throw DomainError("replacement sample must keep tau increasing");
  samples_.back() = s;
}

double retarded_distance(const FourVector& x, const WorldlineSample& s) {
  return -dot(x - s.z, s.u);
}

Worldline load_worldline_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open worldline file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw DomainError("empty worldline file: " + path);
  const std::string expected =
      "tau,z0,z1,z2,z3,u0,u1,u2,u3,a0,a1,a2,a3";
  if (line != expected)
    throw DomainError("worldline file header mismatch: " + path);
  std::vector<WorldlineSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::array<double, 13> v{};
    std::string cell;
    for (int i = 0; i < 13; ++i) {
      if (!std::getline(ss, cell, ','))
        throw DomainError("short worldline row in " + path);
      v[i] = std::stod(cell);
    }
    samples.push_back({v[0],
                       {v[1], v[2], v[3], v[4]},
                       {v[5], v[6], v[7], v[8]},
                       {v[9], v[10], v[11], v[12]}});
  }
  return Worldline(std::move(samples));
}

void save_worldline_csv(const Worldline& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write worldline file: " + path);
  out.precision(17);
  out << "tau,z0,z1,z2,z3,u0,u1,u2,u3,a0,a1,a2,a3\n";
  for (const auto& s : w.samples()) {
    out << s.tau;
    for (int i = 0; i < 4; ++i) out << ',' << s.z[i];
    for (int i = 0; i < 4; ++i) out << ',' << s.u[i];
    for (int i = 0; i < 4; ++i) out << ',' << s.a[i];
    out << '\n';
  }
}

}  // namespace scalartail
