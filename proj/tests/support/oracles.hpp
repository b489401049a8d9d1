#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "scalartail/motions.hpp"

// Test-side numerical oracles, deliberately independent of the library's
// quadrature engine: composite Simpson panels and Aitken-accelerated panel
// sums between sign changes for oscillatory tails.
namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n_panels) {
  const int n = n_panels + (n_panels % 2);  // even
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

template <typename F>
auto simpson_vec(F&& f, double a, double b, int n_panels)
    -> decltype(f(a)) {
  using V = decltype(f(a));
  const int n = n_panels + (n_panels % 2);
  const double h = (b - a) / n;
  V acc = f(a);
  {
    const V fb = f(b);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += fb[k];
  }
  for (int i = 1; i < n; ++i) {
    const V fi = f(a + i * h);
    const double w = i % 2 ? 4.0 : 2.0;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w * fi[k];
  }
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] *= h / 3.0;
  return acc;
}

// Integral over [a, inf) of an oscillatory decaying integrand: panels found
// by scanning for sign changes with step `scan`, each panel by Simpson,
// partial sums accelerated with iterated Aitken delta-squared.
inline double oscillatory_tail(const std::function<double(double)>& f,
                               double a, double scan, int max_panels = 80) {
  std::vector<double> partial;
  double lo = a;
  double sum = 0.0;
  double f_lo = f(lo);
  for (int p = 0; p < max_panels; ++p) {
    double hi = lo;
    double f_hi = f_lo;
    for (int i = 0; i < 10000; ++i) {
      const double next = hi + scan;
      const double f_next = f(next);
      hi = next;
      if (f_next * f_hi < 0.0 && i > 0) {
        f_hi = f_next;
        break;
      }
      f_hi = f_next;
    }
    sum += simpson([&](double x) { return f(x); }, lo, hi, 64);
    partial.push_back(sum);
    lo = hi;
    f_lo = f_hi;
  }
  // iterated Aitken on the tail of the partial-sum sequence
  std::vector<double> s(partial.end() - std::min<std::size_t>(30, partial.size()),
                        partial.end());
  while (s.size() >= 3) {
    std::vector<double> t;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const double d1 = s[i + 1] - s[i];
      const double d2 = s[i + 2] - 2 * s[i + 1] + s[i];
      t.push_back(std::fabs(d2) > 1e-300 ? s[i] - d1 * d1 / d2 : s[i + 2]);
    }
    s = std::move(t);
  }
  return s.empty() ? partial.back() : s.back();
}

// Dense cumulative position table over [t0, t1] so repeated sampling of an
// analytic motion costs one short Gauss panel instead of a full re-integration
// from the reference point. Assumes the motion is uniform before t0.
struct CachedMotion {
  scalartail::SmoothMotion m;
  double t0, t1, h;
  std::vector<scalartail::FourVector> z;

  CachedMotion(scalartail::SmoothMotion mm, double a, double b, int n)
      : m(std::move(mm)), t0(a), t1(b), h((b - a) / n), z(n + 1) {
    z[0] = m.z_ref + scalartail::motion_displacement(m, m.tau_ref, t0);
    for (int i = 0; i < n; ++i)
      z[i + 1] =
          z[i] + scalartail::motion_displacement(m, t0 + i * h, t0 + (i + 1) * h);
  }

  scalartail::WorldlineSample sample(double tau) const {
    scalartail::WorldlineSample s;
    s.tau = tau;
    s.u = m.velocity(tau);
    s.a = m.acceleration(tau);
    if (tau <= t0) {
      s.z = z[0] + m.velocity(t0) * (tau - t0);
      return s;
    }
    const int i = std::min<int>(static_cast<int>((tau - t0) / h),
                                static_cast<int>(z.size()) - 1);
    s.z = z[i] + scalartail::motion_displacement(m, t0 + i * h, tau);
    return s;
  }
};

}  // namespace oracle
