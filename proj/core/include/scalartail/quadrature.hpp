#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "scalartail/errors.hpp"
#include "scalartail/four_vector.hpp"

namespace scalartail::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_intervals = 4000;
  // If > 0, the range is pre-split into chunks of at most this length before
  // adaptive refinement (sized to the kernel oscillation period).
  double pre_chunk = 0.0;
};

namespace detail {

// QUADPACK 15-point Kronrod / 7-point Gauss pair on [-1,1].
inline constexpr std::array<double, 8> kXgk = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr std::array<double, 4> kWg = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

template <class T>
struct Ops;

template <>
struct Ops<double> {
  static double zero() { return 0.0; }
  static void axpy(double& acc, double w, double v) { acc += w * v; }
  static void add(double& acc, const double& v) { acc += v; }
  static double scaled(const double& v, double s) { return v * s; }
  static double norm(const double& v) { return std::fabs(v); }
};

template <>
struct Ops<FourVector> {
  static FourVector zero() { return {}; }
  static void axpy(FourVector& acc, double w, const FourVector& v) {
    acc += v * w;
  }
  static void add(FourVector& acc, const FourVector& v) { acc += v; }
  static FourVector scaled(const FourVector& v, double s) { return v * s; }
  static double norm(const FourVector& v) { return max_abs(v); }
};

template <std::size_t N>
struct Ops<std::array<double, N>> {
  using A = std::array<double, N>;
  static A zero() { return A{}; }
  static void axpy(A& acc, double w, const A& v) {
    for (std::size_t i = 0; i < N; ++i) acc[i] += w * v[i];
  }
  static void add(A& acc, const A& v) {
    for (std::size_t i = 0; i < N; ++i) acc[i] += v[i];
  }
  static A scaled(const A& v, double s) {
    A r;
    for (std::size_t i = 0; i < N; ++i) r[i] = v[i] * s;
    return r;
  }
  static double norm(const A& v) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::fabs(c));
    return m;
  }
};

template <class T, class F>
T gk15(F& f, double a, double b, double& err) {
  using O = Ops<T>;
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  T ik = O::zero();
  T ig = O::zero();
  for (int i = 0; i < 8; ++i) {
    const double xi = kXgk[i];
    T v = f(c + h * xi);
    if (xi != 0.0) {
      const T v2 = f(c - h * xi);
      O::add(v, v2);
    }
    O::axpy(ik, kWgk[i], v);
    if (i & 1) O::axpy(ig, kWg[i / 2], v);
  }
  ik = O::scaled(ik, h);
  ig = O::scaled(ig, h);
  T diff = ik;
  O::axpy(diff, -1.0, ig);
  err = O::norm(diff);
  // QUADPACK-style sharpening of the raw Kronrod-Gauss difference.
  err = std::min(err, std::pow(200.0 * err, 1.5));
  return ik;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of a scalar- or vector-valued
// integrand on [a, b].
template <class F,
          class T = std::remove_cvref_t<std::invoke_result_t<F&, double>>>
T integrate_adaptive(F&& f, double a, double b, const Options& opt = {},
                     double* err_out = nullptr) {
  using O = detail::Ops<T>;
  if (a == b) {
    if (err_out) *err_out = 0.0;
    return O::zero();
  }

  struct Interval {
    double a, b, err;
    T val;
  };
  std::vector<Interval> heap;

  const auto push = [&](double lo, double hi) {
    Interval iv;
    iv.a = lo;
    iv.b = hi;
    iv.val = detail::gk15<T>(f, lo, hi, iv.err);
    heap.push_back(std::move(iv));
    std::push_heap(heap.begin(), heap.end(),
                   [](const Interval& p, const Interval& q) { return p.err < q.err; });
  };

  int chunks = 1;
  if (opt.pre_chunk > 0.0) {
    chunks = std::max(
        1, static_cast<int>(std::ceil(std::fabs(b - a) / opt.pre_chunk)));
    chunks = std::min(chunks, opt.max_intervals / 2);
  }
  for (int i = 0; i < chunks; ++i) {
    const double lo = a + (b - a) * (static_cast<double>(i) / chunks);
    const double hi = a + (b - a) * (static_cast<double>(i + 1) / chunks);
    push(lo, hi);
  }

  while (static_cast<int>(heap.size()) < opt.max_intervals) {
    T total = O::zero();
    double total_err = 0.0;
    for (const auto& iv : heap) {
      O::add(total, iv.val);
      total_err += iv.err;
    }
    if (total_err <= std::max(opt.abs_tol, opt.rel_tol * O::norm(total))) break;

    std::pop_heap(heap.begin(), heap.end(),
                  [](const Interval& p, const Interval& q) { return p.err < q.err; });
    const Interval worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      heap.push_back(worst);  // interval at roundoff limit
      break;
    }
    push(worst.a, mid);
    push(mid, worst.b);
  }

  T total = O::zero();
  double total_err = 0.0;
  for (const auto& iv : heap) {
    O::add(total, iv.val);
    total_err += iv.err;
  }
  if (err_out) *err_out = total_err;
  return total;
}

// Monotone phase map w(xi) = k0 sqrt((xi + b)^2 - chi2) shared by every
// uniform-closure history integral: with q = B + xi*u0 along a straight
// segment, -(q.q) = (xi+b)^2 - chi2 where b = -(B.u0), chi2 = b^2 + (B.B).
struct BesselPhase {
  double k0 = 1.0;
  double b = 0.0;
  double chi2 = 0.0;

  double w(double xi) const {
    const double s = xi + b;
    return k0 * std::sqrt(std::max(0.0, s * s - chi2));
  }
  double xi_at(double w_target) const {
    const double t = w_target / k0;
    return std::sqrt(t * t + chi2) - b;
  }
};

double cached_bessel_zero(int nu, int k);

// Integral over [xi_start, inf) of an integrand whose oscillation is carried
// by J_nu(w(xi)). Panels between consecutive zeros of J_nu give an
// asymptotically alternating series of panel integrals; iterated averaging of
// the partial sums accelerates the conditionally convergent tails.
template <class F,
          class T = std::remove_cvref_t<std::invoke_result_t<F&, double>>>
T integrate_bessel_tail(F&& f, double xi_start, const BesselPhase& phase,
                        int nu, const Options& opt = {},
                        double* err_out = nullptr) {
  using O = detail::Ops<T>;

  const double w_start = phase.w(xi_start);
  int k = 1;
  while (cached_bessel_zero(nu, k) <= w_start) ++k;

  constexpr int kMaxPanels = 96;
  constexpr int kWindow = 24;

  std::vector<T> partial;
  partial.reserve(kMaxPanels);
  T sum = O::zero();
  double lo = xi_start;

  Options panel_opt;
  panel_opt.rel_tol = std::min(1e-11, opt.rel_tol);
  panel_opt.abs_tol = opt.abs_tol;
  panel_opt.max_intervals = 60;

  T best = O::zero();
  double best_err = HUGE_VAL;

  for (int p = 0; p < kMaxPanels; ++p, ++k) {
    const double hi = phase.xi_at(cached_bessel_zero(nu, k));
    const T panel = integrate_adaptive(f, lo, hi, panel_opt);
    O::add(sum, panel);
    partial.push_back(sum);
    lo = hi;

    const double panel_norm = O::norm(panel);
    const double target = std::max(opt.abs_tol, opt.rel_tol * O::norm(sum));
    if (p >= 2 && panel_norm < 0.05 * target) {
      // Absolutely convergent regime: the plain sum already settled.
      best = sum;
      best_err = panel_norm;
      break;
    }
    if (p >= 4) {
      const int n = std::min<int>(kWindow, partial.size());
      std::vector<T> row(partial.end() - n, partial.end());
      T prev_diag = row.back();
      double diag_change = HUGE_VAL;
      while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
          T m = row[i];
          O::add(m, row[i + 1]);
          row[i] = O::scaled(m, 0.5);
        }
        row.pop_back();
        T d = row.back();
        O::axpy(d, -1.0, prev_diag);
        diag_change = O::norm(d);
        prev_diag = row.back();
      }
      if (diag_change < best_err) {
        best_err = diag_change;
        best = row[0];
      }
      if (best_err <= target) break;
    }
  }

  if (err_out) *err_out = best_err;
  if (partial.empty()) {
    if (err_out) *err_out = 0.0;
    return O::zero();
  }
  if (!(best_err < HUGE_VAL)) best = partial.back();
  return best;
}

}  // namespace scalartail::quad
