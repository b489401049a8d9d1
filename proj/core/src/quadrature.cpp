#include "scalartail/quadrature.hpp"

#include <vector>

#include "scalartail/specfun.hpp"

namespace scalartail::quad {

double cached_bessel_zero(int nu, int k) {
  if (nu != 1 && nu != 2) throw DomainError("cached_bessel_zero: order must be 1 or 2");
  thread_local std::vector<double> zeros1, zeros2;
  auto& zeros = (nu == 1) ? zeros1 : zeros2;
  while (static_cast<int>(zeros.size()) < k) {
    const int next = static_cast<int>(zeros.size()) + 1;
    zeros.push_back(nu == 1 ? bessel_j1_zero(next) : bessel_j2_zero(next));
  }
  return zeros[k - 1];
}

}  // namespace scalartail::quad
