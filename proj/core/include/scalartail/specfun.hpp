#pragma once

namespace scalartail {

// Bessel functions of the first kind, own implementation (power series below
// w = 8, downward recurrence in the midrange, Hankel asymptotic expansion for
// large w). Relative accuracy ~1e-13 of the oscillation envelope
// sqrt(2/(pi w)). Negative argument raises DomainError.
double bessel_j0(double w);
double bessel_j1(double w);
double bessel_j2(double w);

// J1(w)/w with its continuous extension 1/2 at w = 0.
double kernel_j1_over_w(double w);

// J2(w)/w^2 with its continuous extension 1/8 at w = 0.
double kernel_j2_over_w2(double w);

// k-th positive zero of J1 / J2 (k >= 1), McMahon expansion refined by Newton.
double bessel_j1_zero(int k);
double bessel_j2_zero(int k);

}  // namespace scalartail
