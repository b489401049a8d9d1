#pragma once

#include <utility>

#include "scalartail/fields.hpp"
#include "scalartail/four_vector.hpp"
#include "scalartail/quadrature.hpp"
#include "scalartail/worldline.hpp"

namespace scalartail {

// Scalar-field stress-energy tensor (contravariant, the 1/4pi included):
// T^{mn} = (1/4pi)[ Phi^m Phi^n - (1/2) eta^{mn} ((Phi.Phi) + k0^2 phi^2) ].
SymTensor4 stress_energy(const FourVector& grad, double phi, double k0);

// Bound/radiative split of the massless direct field at retarded distance r
// along the null direction k (k.k = 0, (k.u) = -1).
struct MasslessSplit {
  SymTensor4 rad;
  SymTensor4 bound;
};
MasslessSplit massless_split(const WorldlineSample& s, const FourVector& k,
                             double r, double g);

// Closed-form sphere averages (1/4pi) int dOmega k^a ... k^c of products of
// the null vector k = u + n over the unit sphere of directions n.
using Rank3Tensor4 = std::array<std::array<std::array<double, 4>, 4>, 4>;
double angular_moment_0();
FourVector angular_moment_1(const FourVector& u);
SymTensor4 angular_moment_2(const FourVector& u);
Rank3Tensor4 angular_moment_3(const FourVector& u);

// Direct (massless-type) radiated energy-momentum up to proper time tau:
// (g^2/3) int a^2 u ds, zero on the uniform pre-history.
FourVector p_dir_rad(const Worldline& w, double g, double tau,
                     const quad::Options& opt = {});

// Direct radiated angular momentum: (g^2/3) int [a^2 (z ^ u) + u ^ a] ds.
AntisymTensor4 M_dir_rad(const Worldline& w, double g, double tau,
                         const quad::Options& opt = {});

// Tail kernel f_mu(z1,z2) connecting emission point z2 to field point z1 on
// the worldline, with its scalar invariants.
struct TailKernelEval {
  FourVector f;
  FourVector q;
  double r1 = 0.0;
  double r2 = 0.0;
  double w = 0.0;
};
TailKernelEval tail_kernel(const WorldlineSample& z1, const WorldlineSample& z2,
                           const ChargeParams& p);

// Retarded tail force g int_{-inf}^{tau1} f(z1,z2) dtau2 and its advanced
// companion g int_{tau1}^{tau} f(z1,z2) dtau2.
std::pair<FourVector, FourVector> tail_forces(const Worldline& w,
                                              const ChargeParams& p,
                                              double tau1, double tau,
                                              const quad::Options& opt = {});

// Tail Noether flows: radiative energy-momentum and angular momentum as
// double path integrals over -inf < tau2 < tau1 < tau, and the bound tail
// momentum carried inside the dressed four-momentum,
//   p_tail_bound = -(g^2/2) int kappa q/r_tau ds.
FourVector p_tail_rad(const Worldline& w, const ChargeParams& p, double tau,
                      const quad::Options& opt = {});
FourVector p_tail_bound(const Worldline& w, const ChargeParams& p, double tau,
                        const quad::Options& opt = {});
AntisymTensor4 M_tail_rad(const Worldline& w, const ChargeParams& p, double tau,
                          const quad::Options& opt = {});

}  // namespace scalartail
