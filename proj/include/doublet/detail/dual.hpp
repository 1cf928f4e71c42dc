#pragma once

#include <array>
#include <cmath>

namespace doublet::detail {

/// Forward-mode dual number carrying a two-direction gradient; enough to
/// assemble the 2x2 Jacobians of the line-tension Newton iteration without
/// hand-derived partials.
struct Dual2 {
  double v = 0.0;
  std::array<double, 2> g{0.0, 0.0};

  Dual2() = default;
  Dual2(double value) : v(value) {}  // NOLINT: implicit by design
  Dual2(double value, double g0, double g1) : v(value), g{g0, g1} {}

  static Dual2 seed(double value, int dir) {
    Dual2 d(value);
    d.g[dir] = 1.0;
    return d;
  }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
  return {a.v + b.v, a.g[0] + b.g[0], a.g[1] + b.g[1]};
}
inline Dual2 operator-(const Dual2& a, const Dual2& b) {
  return {a.v - b.v, a.g[0] - b.g[0], a.g[1] - b.g[1]};
}
inline Dual2 operator-(const Dual2& a) { return {-a.v, -a.g[0], -a.g[1]}; }
inline Dual2 operator*(const Dual2& a, const Dual2& b) {
  return {a.v * b.v, a.g[0] * b.v + a.v * b.g[0],
          a.g[1] * b.v + a.v * b.g[1]};
}
inline Dual2 operator/(const Dual2& a, const Dual2& b) {
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  return {q, (a.g[0] - q * b.g[0]) * inv, (a.g[1] - q * b.g[1]) * inv};
}

inline Dual2 chain(double value, double deriv, const Dual2& a) {
  return {value, deriv * a.g[0], deriv * a.g[1]};
}

inline Dual2 sinh(const Dual2& a) {
  return chain(std::sinh(a.v), std::cosh(a.v), a);
}
inline Dual2 asinh(const Dual2& a) {
  return chain(std::asinh(a.v), 1.0 / std::sqrt(1.0 + a.v * a.v), a);
}
inline Dual2 cbrt(const Dual2& a) {
  const double r = std::cbrt(a.v);
  return chain(r, 1.0 / (3.0 * r * r), a);
}
inline Dual2 sqrt(const Dual2& a) {
  const double r = std::sqrt(a.v);
  return chain(r, 0.5 / r, a);
}

}  // namespace doublet::detail
