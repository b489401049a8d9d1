#include <doctest.h>

#include <cmath>
#include <random>

#include "scalartail/greens.hpp"
#include "scalartail/specfun.hpp"

using namespace scalartail;

TEST_CASE("synge world function") {
  CHECK(synge_sigma({1, 2, 3, 4}, {1, 2, 3, 4}) == 0.0);
  // x - y = (T, R, 0, 0) -> (R^2 - T^2)/2
  CHECK(synge_sigma({3, 4, 0, 0}, {0, 0, 0, 0}) ==
        doctest::Approx(0.5 * (16.0 - 9.0)));
  CHECK(synge_sigma({5, 5, 0, 0}, {0, 0, 0, 0}) == 0.0);
}

TEST_CASE("greens tail: massless and spacelike cases") {
  const FourVector y{0, 0, 0, 0};
  // k0 = 0: no tail anywhere
  const GreensEval g0 = greens_tail({4, 1, 0, 0}, y, 0.0, GreensKind::Retarded);
  CHECK(g0.tail_value == 0.0);
  CHECK(g0.inside_cone);

  // spacelike separation: outside the cone
  const GreensEval gs = greens_tail({1, 4, 0, 0}, y, 2.0, GreensKind::Retarded);
  CHECK(gs.tail_value == 0.0);
  CHECK(!gs.inside_cone);
}

TEST_CASE("greens tail value inside the cone") {
  const double k0 = 2.0;
  const FourVector y{0, 0, 0, 0};
  // choose separation with k0 sqrt(2|sigma|) = 1
  const double T = std::sqrt(1.0 / (k0 * k0));  // sqrt(-2 sigma) = T here
  const FourVector x{T, 0, 0, 0};
  const GreensEval g = greens_tail(x, y, k0, GreensKind::Retarded);
  // -(1/4pi) k0 J1(w)/sqrt(-2 sigma) with w = k0 sqrt(-2 sigma) = 1
  const double want =
      -(1.0 / (4.0 * 3.141592653589793)) * k0 * k0 * kernel_j1_over_w(1.0);
  CHECK(g.tail_value == doctest::Approx(want).epsilon(1e-13));
  CHECK(g.direct_weight == doctest::Approx(1.0 / (4.0 * 3.141592653589793)));

  // advanced vanishes for a past point, retarded for a future one
  CHECK(greens_tail(x, y, k0, GreensKind::Advanced).tail_value == 0.0);
  CHECK(greens_tail(y, x, k0, GreensKind::Retarded).tail_value == 0.0);
}

TEST_CASE("symmetric is the half-sum, ret(x,y) = adv(y,x)") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double k0 = 1.3;
  for (int i = 0; i < 50; ++i) {
    const FourVector x{4.0 * uni(rng), uni(rng), uni(rng), uni(rng)};
    const FourVector y{4.0 * uni(rng), uni(rng), uni(rng), uni(rng)};
    const double ret = greens_tail(x, y, k0, GreensKind::Retarded).tail_value;
    const double adv = greens_tail(x, y, k0, GreensKind::Advanced).tail_value;
    const double sym = greens_tail(x, y, k0, GreensKind::Symmetric).tail_value;
    CHECK(sym == doctest::Approx(0.5 * (ret + adv)).epsilon(1e-14));
    CHECK(ret ==
          doctest::Approx(greens_tail(y, x, k0, GreensKind::Advanced).tail_value)
              .epsilon(1e-14));

    // spatial reflection leaves the tail invariant
    const FourVector xr{x.t, -x.x, -x.y, -x.z};
    const FourVector yr{y.t, -y.x, -y.y, -y.z};
    CHECK(greens_tail(xr, yr, k0, GreensKind::Retarded).tail_value ==
          doctest::Approx(ret).epsilon(1e-14));
  }
}

TEST_CASE("radiative combination") {
  const double k0 = 1.7;
  const FourVector y{0, 0, 0, 0};

  // spacelike pair -> 0
  CHECK(greens_radiative_combination({0.5, 3, 0, 0}, y, k0) == 0.0);

  // antisymmetry under swap
  const FourVector x{2.5, 0.7, -0.3, 0.1};
  CHECK(greens_radiative_combination(x, y, k0) ==
        doctest::Approx(-greens_radiative_combination(y, x, k0)).epsilon(1e-14));

  // timelike pair: equals (tail_ret - tail_adv)/2 composed independently
  const double ret = greens_tail(x, y, k0, GreensKind::Retarded).tail_value;
  const double adv = greens_tail(x, y, k0, GreensKind::Advanced).tail_value;
  CHECK(greens_radiative_combination(x, y, k0) ==
        doctest::Approx(0.5 * (ret - adv)).epsilon(1e-14));
}
