#pragma once

#include <array>
#include <optional>

#include "doublet/geometry.hpp"
#include "doublet/poly.hpp"

namespace doublet {

/// Tension regimes at zero line tension.  Interior: strict triangle
/// inequalities, a unique equilibrium doublet exists.  Otherwise one tension
/// dominates and the minimizer degenerates to the matching boundary point
/// u_k (k = 1: cell 1 internalized, k = 2: cell 2 internalized, k = 3:
/// cells separated).
enum class Regime { Interior, Internalize1, Internalize2, Externalize };

struct TensionRegime {
  Regime label = Regime::Interior;
  /// True when t_k = t_{k+1} + t_{k-1} holds exactly; the minimizer is still
  /// the boundary point u_k.
  bool on_boundary = false;

  bool interior() const { return label == Regime::Interior; }
  /// Index k of the dominating tension for degenerate regimes, 0 otherwise.
  int degenerate_index() const;
};

/// kappa must be zero here; line-tension problems go through the
/// line-solver interface.
TensionRegime classify_regime(const Tensions& t);

/// Junction angles of the zero-line-tension equilibrium, fixed by tensions
/// alone through the force triangle (law of cosines on the tension vectors):
///   cos phi_k = -(t_{k+1}^2 + t_{k-1}^2 - t_k^2) / (2 t_{k+1} t_{k-1}).
/// Angles are the wrapped junction angles, each in (0, pi), summing to 2 pi.
struct AngleLaws {
  std::array<double, 3> cos_phi{};
  std::array<double, 3> sin_phi{};
  std::array<double, 3> phi{};    // acos(cos_phi), in (0, pi)
  std::array<double, 3> y_cot{};  // y_k = cot(phi_k / 2)
  double circumradius = 0.0;      // force triangle circumradius, t_k = 2r sin phi_k

  double cosv(int k) const { return cos_phi[(k - 1) % 3]; }
  double sinv(int k) const { return sin_phi[(k - 1) % 3]; }
  double phiv(int k) const { return phi[(k - 1) % 3]; }
  double ycot(int k) const { return y_cot[(k - 1) % 3]; }
};
AngleLaws angle_laws(const Tensions& t);

/// Equilibrium quintic for pivot cap k.  With a = y_{k-1}, b = y_{k+1} and
/// d = d_k the volume asymmetry, its monic form is
///   F_k(X) = (1+d)/2 (X+a)^3 (X^2 - 3bX + 3b^2 + 1)
///          + (1-d)/2 (X-b)^3 (X^2 + 3aX + 3a^2 + 1),
/// whose unique real root is z_k of the equilibrium state.
/// Coefficients are returned ascending (degree 0..5).
std::array<double, 6> build_quintic(int k, const Tensions& t,
                                    const ReducedVolumes& w);

/// Strictly increasing rational bijection used to solve F_k: with
/// xi = (y_+ - z)/(y_- + z), F_k(z) = 0 is equivalent to f(xi) = g_-/g_+.
double monotone_f(double xi, double y_minus, double y_plus);
/// Derivative in the positivity-revealing form S/R^2.
double monotone_f_prime(double xi, double y_minus, double y_plus);
/// Solve f(xi) = ratio: doubling bracket, bisection to 1e-3, then Newton.
double solve_monotone(double y_minus, double y_plus, double ratio);

struct SurfaceSolution {
  TensionRegime regime;
  std::optional<DoubletState> state;      // Interior only
  std::optional<PressurePair> pressures;  // Interior only
  std::optional<BoundaryState> boundary;  // degenerate regimes only
  double energy = 0.0;
  int pivot = 0;            // cap used for the quintic solve
  double residual = 0.0;    // scaled force/volume residual of the state
};

/// Equilibrium of the zero-line-tension doublet.  Interior regimes yield the
/// unique interior minimizer, degenerate regimes the boundary point u_k.
SurfaceSolution solve_surface(const Tensions& t, const ReducedVolumes& w);

/// Boundary minimizer u_k with its energy (alias of boundary_point with the
/// regime bookkeeping attached).
BoundaryState degenerate_configuration(int k, const Tensions& t,
                                       const ReducedVolumes& w);

}  // namespace doublet
