#include "scalartail/specfun.hpp"

#include <cmath>
#include <vector>

#include "scalartail/errors.hpp"

namespace scalartail {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSeriesCut = 8.0;
constexpr double kAsymptoticCut = 17.0;

// J_nu(w) = (w/2)^nu sum_m (-1)^m (w^2/4)^m / (m! (m+nu)!)
double series_jn(int nu, double w) {
  const double q = 0.25 * w * w;
  double term = 1.0;
  for (int m = 1; m <= nu; ++m) term /= m;  // 1/nu!
  double sum = term;
  for (int m = 1; m < 64; ++m) {
    term *= -q / (static_cast<double>(m) * (m + nu));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) break;
  }
  return sum * std::pow(0.5 * w, nu);
}

struct J012 {
  double j0, j1, j2;
};

// Downward recurrence with the normalization J0 + 2*sum J_{2k} = 1.
J012 miller_j012(double w) {
  const int start = static_cast<int>(w) + 42 + ((static_cast<int>(w)) & 1);
  double jp = 0.0;
  double jc = 1e-30;
  double sum = 0.0;
  double out0 = 0.0, out1 = 0.0, out2 = 0.0;
  for (int k = start; k > 0; --k) {
    const double jm = (2.0 * k / w) * jc - jp;
    jp = jc;
    jc = jm;
    if (k - 1 > 0 && ((k - 1) & 1) == 0) sum += jc;
    if (k - 1 == 2) out2 = jc;
    if (k - 1 == 1) out1 = jc;
    if (k - 1 == 0) out0 = jc;
    if (std::fabs(jc) > 1e250) {
      jp *= 1e-250;
      jc *= 1e-250;
      sum *= 1e-250;
      out0 *= 1e-250;
      out1 *= 1e-250;
      out2 *= 1e-250;
    }
  }
  const double norm = out0 + 2.0 * sum;
  return {out0 / norm, out1 / norm, out2 / norm};
}

// Hankel expansion J_nu(w) ~ sqrt(2/(pi w)) [P cos(omega) - Q sin(omega)],
// omega = w - nu pi/2 - pi/4; terms summed until they stop decreasing.
double hankel_jn(int nu, double w) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double p = 1.0;
  double q = 0.0;
  int sign_p = -1;
  int sign_q = 1;
  double prev = 1.0;
  for (int m = 1; m <= 30; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= (mu - odd * odd) / (8.0 * m * w);
    if (std::fabs(term) >= prev) break;
    prev = std::fabs(term);
    if (m & 1) {
      q += sign_q * term;
      sign_q = -sign_q;
    } else {
      p += sign_p * term;
      sign_p = -sign_p;
    }
    if (std::fabs(term) < 1e-18) break;
  }
  const double omega = w - 0.5 * nu * kPi - 0.25 * kPi;
  return std::sqrt(2.0 / (kPi * w)) * (p * std::cos(omega) - q * std::sin(omega));
}

void require_nonnegative(double w, const char* who) {
  if (!(w >= 0.0)) throw DomainError(std::string(who) + ": negative argument");
}

double jn_dispatch(int nu, double w) {
  if (w < kSeriesCut) return series_jn(nu, w);
  if (w < kAsymptoticCut) {
    const J012 j = miller_j012(w);
    return nu == 0 ? j.j0 : (nu == 1 ? j.j1 : j.j2);
  }
  return hankel_jn(nu, w);
}

}  // namespace

double bessel_j0(double w) {
  require_nonnegative(w, "bessel_j0");
  return jn_dispatch(0, w);
}

double bessel_j1(double w) {
  require_nonnegative(w, "bessel_j1");
  return jn_dispatch(1, w);
}

double bessel_j2(double w) {
  require_nonnegative(w, "bessel_j2");
  if (w >= kSeriesCut) return 2.0 * jn_dispatch(1, w) / w - jn_dispatch(0, w);
  return series_jn(2, w);
}

double kernel_j1_over_w(double w) {
  require_nonnegative(w, "kernel_j1_over_w");
  if (w < kSeriesCut) {
    const double q = 0.25 * w * w;
    double term = 0.5;
    double sum = term;
    for (int m = 1; m < 64; ++m) {
      term *= -q / (static_cast<double>(m) * (m + 1));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) break;
    }
    return sum;
  }
  return bessel_j1(w) / w;
}

double kernel_j2_over_w2(double w) {
  require_nonnegative(w, "kernel_j2_over_w2");
  if (w < kSeriesCut) {
    const double q = 0.25 * w * w;
    double term = 0.125;
    double sum = term;
    for (int m = 1; m < 64; ++m) {
      term *= -q / (static_cast<double>(m) * (m + 2));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) break;
    }
    return sum;
  }
  return bessel_j2(w) / (w * w);
}

namespace {

// McMahon seed for j_{nu,k}, refined by Newton on J_nu.
double bessel_zero(int nu, int k) {
  if (k < 1) throw DomainError("bessel zero index must be >= 1");
  const double mu = 4.0 * nu * nu;
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  const double b8 = 8.0 * beta;
  double x = beta - (mu - 1.0) / b8 -
             4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  for (int it = 0; it < 4; ++it) {
    double f, fp;
    if (nu == 1) {
      f = bessel_j1(x);
      fp = bessel_j0(x) - f / x;
    } else {
      f = bessel_j2(x);
      fp = bessel_j1(x) - 2.0 * f / x;
    }
    const double dx = f / fp;
    x -= dx;
    if (std::fabs(dx) < 1e-14 * x) break;
  }
  return x;
}

}  // namespace

double bessel_j1_zero(int k) { return bessel_zero(1, k); }
double bessel_j2_zero(int k) { return bessel_zero(2, k); }

}  // namespace scalartail
