#include "scalartail/greens.hpp"

#include <cmath>

#include "scalartail/errors.hpp"
#include "scalartail/specfun.hpp"

namespace scalartail {

namespace {
constexpr double kInv4Pi = 0.07957747154594766788444188168626;
}

double synge_sigma(const FourVector& x, const FourVector& y) {
  const FourVector d = x - y;
  return 0.5 * dot(d, d);
}

GreensEval greens_tail(const FourVector& x, const FourVector& y, double k0,
                       GreensKind kind) {
  if (!(k0 >= 0.0)) throw DomainError("greens_tail: k0 must be >= 0");
  const double sigma = synge_sigma(x, y);
  GreensEval out;
  out.inside_cone = sigma < 0.0;

  const bool y_in_past = y.t < x.t;
  double causal = 0.0;   // steps multiplying both the delta and tail pieces
  switch (kind) {
    case GreensKind::Retarded:
      causal = y_in_past ? 1.0 : 0.0;
      break;
    case GreensKind::Advanced:
      causal = y_in_past ? 0.0 : 1.0;
      break;
    case GreensKind::Symmetric:
      causal = 0.5;
      break;
  }
  out.direct_weight = kInv4Pi * causal;

  if (!out.inside_cone || k0 == 0.0 || causal == 0.0) return out;
  // -(1/4pi) k0 J1(k0 sqrt(-2 sigma)) / sqrt(-2 sigma), cut to the causal cone.
  const double s = std::sqrt(-2.0 * sigma);
  out.tail_value = -kInv4Pi * causal * k0 * k0 * kernel_j1_over_w(k0 * s);
  return out;
}

double greens_radiative_combination(const FourVector& x, const FourVector& y,
                                    double k0) {
  const GreensEval ret = greens_tail(x, y, k0, GreensKind::Retarded);
  const GreensEval adv = greens_tail(x, y, k0, GreensKind::Advanced);
  return 0.5 * (ret.tail_value - adv.tail_value);
}

}  // namespace scalartail
