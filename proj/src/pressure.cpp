#include "doublet/pressure.hpp"

#include <cmath>

#include "doublet/errors.hpp"
#include "doublet/surface.hpp"

namespace doublet {

double pressure_discriminant(const Tensions& t, double P1, double P2) {
  const double a = P1 * t.t2 - P2 * t.t1;
  return std::sqrt(a * a + P1 * P2 * (t.t1 - t.t2 + t.t3) *
                               (t.t2 - t.t1 + t.t3));
}

namespace {

// Continuous branch of P x^2 - 4 t x + P h^2 = 0 selected by the closed
// form x = sigma (2t - q/Delta) / P.  The identity q^2 = Delta^2 (4t^2 -
// P^2 h^2) lets the q >= 0 case be rationalized, removing the cancellation
// as q/Delta approaches 2t (which includes the P3 -> 0 interface limit).
double branch_root(double sigma, double tk, double q_over_delta, double P,
                   double h2) {
  if (q_over_delta >= 0.0) return sigma * P * h2 / (2.0 * tk + q_over_delta);
  return sigma * (2.0 * tk - q_over_delta) / P;
}

}  // namespace

DoubletState solve_pressure(const PressureProblem& p) {
  const Tensions& t = p.tensions;
  validate(t);
  if (t.kappa != 0.0)
    throw InvalidInput("pressure-based solve requires kappa = 0");
  if (!classify_regime(t).interior())
    throw InvalidInput(
        "pressure-based solve requires the interior tension regime");
  if (!(p.P1 > 0.0) || !(p.P2 > 0.0) || !std::isfinite(p.P1) ||
      !std::isfinite(p.P2))
    throw InvalidInput("cell pressures must be positive and finite");

  const double t1 = t.t1, t2 = t.t2, t3 = t.t3;
  const double P1 = p.P1, P2 = p.P2, P3 = P1 - P2;

  const double delta = pressure_discriminant(t, P1, P2);
  const double prod = (t1 + t2 + t3) * (t2 + t3 - t1) * (t3 + t1 - t2) *
                      (t1 + t2 - t3);
  const double h = std::sqrt(prod) / delta;
  const double h2 = h * h;

  const double q1 = (P1 * (t1 * t1 + t2 * t2 - t3 * t3) - 2.0 * P2 * t1 * t1) /
                    delta;
  const double q2 = (P2 * (t1 * t1 + t2 * t2 - t3 * t3) - 2.0 * P1 * t2 * t2) /
                    delta;
  const double q3 = (P1 * (t2 * t2 + t3 * t3 - t1 * t1) +
                     P2 * (t1 * t1 + t3 * t3 - t2 * t2)) /
                    delta;

  const double x1 = branch_root(-1.0, t1, q1, P1, h2);
  const double x2 = branch_root(+1.0, t2, q2, P2, h2);
  const double x3 = branch_root(+1.0, t3, q3, P3, h2);

  return state_from_xh(x1, x2, x3, h);
}

}  // namespace doublet
