#pragma once

#include "doublet/geometry.hpp"

namespace doublet {

/// Doublet problem posed with prescribed cell pressures instead of volumes.
/// Requires strict triangle inequalities on the tensions, kappa = 0 and
/// P1, P2 > 0.
struct PressureProblem {
  Tensions tensions;
  double P1 = 0.0;
  double P2 = 0.0;
};

/// Positive square root of
///   (P1 t2 - P2 t1)^2 + P1 P2 (t1 - t2 + t3)(t2 - t1 + t3),
/// the denominator scale of the closed-form solution.
double pressure_discriminant(const Tensions& t, double P1, double P2);

/// Closed-form equilibrium for prescribed pressures.  The junction radius is
///   h = sqrt((t1+t2+t3)(t2+t3-t1)(t3+t1-t2)(t1+t2-t3)) / Delta
/// and each apex solves its Young-Laplace quadratic
///   P_k x^2 - 4 t_k x + P_k h^2 = 0  (P3 = P1 - P2),
/// on the branch continuous in (P1, P2); the returned triple always
/// satisfies x1 < x3 < x2.
DoubletState solve_pressure(const PressureProblem& p);

}  // namespace doublet
