#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace scalartail {

// Minkowski metric diag(-1,1,1,1), c = 1. All stored four-vectors are
// contravariant; index lowering is explicit via lower().
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const {
    return i == 0 ? t : (i == 1 ? x : (i == 2 ? y : z));
  }
  double& operator[](std::size_t i) {
    return i == 0 ? t : (i == 1 ? x : (i == 2 ? y : z));
  }

  constexpr FourVector operator+(const FourVector& o) const {
    return {t + o.t, x + o.x, y + o.y, z + o.z};
  }
  constexpr FourVector operator-(const FourVector& o) const {
    return {t - o.t, x - o.x, y - o.y, z - o.z};
  }
  constexpr FourVector operator-() const { return {-t, -x, -y, -z}; }
  constexpr FourVector operator*(double s) const {
    return {t * s, x * s, y * s, z * s};
  }
  constexpr FourVector operator/(double s) const {
    return {t / s, x / s, y / s, z / s};
  }
  FourVector& operator+=(const FourVector& o) {
    t += o.t; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  FourVector& operator-=(const FourVector& o) {
    t -= o.t; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  FourVector& operator*=(double s) {
    t *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  bool finite() const {
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) &&
           std::isfinite(z);
  }
};

constexpr FourVector operator*(double s, const FourVector& v) { return v * s; }

// eta_{ab} a^a b^b = -a0 b0 + a.b
constexpr double dot(const FourVector& a, const FourVector& b) {
  return -a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

// Covariant components of a contravariant vector (time component negated).
constexpr FourVector lower(const FourVector& v) { return {-v.t, v.x, v.y, v.z}; }

// Largest component magnitude; the natural residual norm in tests and
// quadrature error control (Lorentz norms can vanish on non-zero vectors).
inline double max_abs(const FourVector& v) {
  return std::max(std::max(std::fabs(v.t), std::fabs(v.x)),
                  std::max(std::fabs(v.y), std::fabs(v.z)));
}

inline double spatial_norm(const FourVector& v) {
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

// Symmetric rank-2 tensor, contravariant components T^{ab}.
struct SymTensor4 {
  std::array<std::array<double, 4>, 4> c{};

  double operator()(std::size_t a, std::size_t b) const { return c[a][b]; }
  double& at(std::size_t a, std::size_t b) { return c[a][b]; }

  SymTensor4 operator+(const SymTensor4& o) const {
    SymTensor4 r;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) r.c[a][b] = c[a][b] + o.c[a][b];
    return r;
  }
  SymTensor4 operator-(const SymTensor4& o) const {
    SymTensor4 r;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) r.c[a][b] = c[a][b] - o.c[a][b];
    return r;
  }
  SymTensor4 operator*(double s) const {
    SymTensor4 r;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) r.c[a][b] = c[a][b] * s;
    return r;
  }

  // eta_{ab} T^{ab}
  double trace() const {
    return -c[0][0] + c[1][1] + c[2][2] + c[3][3];
  }
  double max_abs() const {
    double m = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m = std::max(m, std::fabs(c[a][b]));
    return m;
  }
  double max_asymmetry() const {
    double m = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m = std::max(m, std::fabs(c[a][b] - c[b][a]));
    return m;
  }
};

inline SymTensor4 outer(const FourVector& a, const FourVector& b) {
  SymTensor4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.c[i][j] = a[i] * b[j];
  return r;
}

inline SymTensor4 outer_sym(const FourVector& a, const FourVector& b) {
  SymTensor4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.c[i][j] = a[i] * b[j] + b[i] * a[j];
  return r;
}

inline SymTensor4 metric_tensor() {
  SymTensor4 r;
  r.c[0][0] = -1.0;
  r.c[1][1] = r.c[2][2] = r.c[3][3] = 1.0;
  return r;
}

// Antisymmetric rank-2 tensor M^{ab}, stored as the six independent
// components (01,02,03,12,13,23).
struct AntisymTensor4 {
  std::array<double, 6> c{};  // m01, m02, m03, m12, m13, m23

  double m01() const { return c[0]; }
  double m02() const { return c[1]; }
  double m03() const { return c[2]; }
  double m12() const { return c[3]; }
  double m13() const { return c[4]; }
  double m23() const { return c[5]; }

  double operator()(std::size_t a, std::size_t b) const {
    if (a == b) return 0.0;
    if (a > b) return -(*this)(b, a);
    if (a == 0) return c[b - 1];       // (0,1)->c0, (0,2)->c1, (0,3)->c2
    if (a == 1) return c[b + 1];       // (1,2)->c3, (1,3)->c4
    return c[5];                       // (2,3)
  }

  AntisymTensor4 operator+(const AntisymTensor4& o) const {
    AntisymTensor4 r;
    for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  AntisymTensor4 operator-(const AntisymTensor4& o) const {
    AntisymTensor4 r;
    for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  AntisymTensor4 operator*(double s) const {
    AntisymTensor4 r;
    for (int i = 0; i < 6; ++i) r.c[i] = c[i] * s;
    return r;
  }
  AntisymTensor4& operator+=(const AntisymTensor4& o) {
    for (int i = 0; i < 6; ++i) c[i] += o.c[i];
    return *this;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::fabs(v));
    return m;
  }
};

// a ^ b, components (a^mu b^nu - a^nu b^mu).
inline AntisymTensor4 wedge(const FourVector& a, const FourVector& b) {
  AntisymTensor4 r;
  r.c[0] = a.t * b.x - a.x * b.t;
  r.c[1] = a.t * b.y - a.y * b.t;
  r.c[2] = a.t * b.z - a.z * b.t;
  r.c[3] = a.x * b.y - a.y * b.x;
  r.c[4] = a.x * b.z - a.z * b.x;
  r.c[5] = a.y * b.z - a.z * b.y;
  return r;
}

}  // namespace scalartail
