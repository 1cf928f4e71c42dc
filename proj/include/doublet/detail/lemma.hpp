#pragma once

#include <cmath>

namespace doublet::detail {

/// Cap cosine as a function of the half cube sum: c = f(q) solves the
/// elimination of z from c = (1-z^2)/(1+z^2) with z(z^2+3) = 2q.
/// f is positive on (0, 2), zero at 2, and decreases to -1.
inline double lemma_f(double x) {
  return 2.0 * std::cosh(std::asinh(x) / 3.0) / std::sqrt(x * x + 1.0) - 1.0;
}

/// g(x) = -f(x^3)/x, the profile whose maximum M bounds kappa y / t_s at
/// any real force balance.
inline double lemma_g(double x) { return -lemma_f(x * x * x) / x; }

/// Argmax of g in closed form.
inline double lemma_omega0() {
  const double c = std::cos(
      std::acos(50115.0 * std::sqrt(3.0) / (3112.0 * std::sqrt(778.0))) / 3.0);
  return std::pow(32.0 + 4.0 * std::sqrt(778.0) / std::sqrt(3.0) * c,
                  1.0 / 6.0);
}

/// Maximum M = g(omega0) ~ 0.3217 in closed form.
inline double lemma_M() {
  const double a = 101454517.0 / (8.0 * std::pow(5.0, 1.5) *
                                  std::pow(10883.0, 1.5));
  const double c = std::cos(std::acos(a) / 3.0 - std::acos(-1.0) / 3.0);
  const double inner =
      2.0 * std::sqrt(5.0) * std::sqrt(10883.0) * c - 239.0;
  return std::pow(4.0 / 3.0 * inner, 1.0 / 6.0);
}

}  // namespace doublet::detail
