#pragma once

#include <array>
#include <optional>

namespace doublet {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Surface tensions of the three interfaces (outer cap of cell 1, outer cap
/// of cell 2, internal interface) plus the line tension of the junction
/// circle.  All surface tensions must be positive, kappa must be >= 0.
struct Tensions {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double kappa = 0.0;

  double sum() const { return t1 + t2 + t3; }
  double max_surface() const;
  /// Cyclic 1-based access: surface(4) == surface(1).
  double surface(int k) const;
};

/// Reduced cell volumes w_k = 6 V_k / pi.  Both must be positive; w3 = w1+w2
/// is the reduced volume of the whole doublet.
struct ReducedVolumes {
  double w1 = 0.0;
  double w2 = 0.0;

  double w3() const { return w1 + w2; }
  /// Signed pivot weights g1 = w2, g2 = w1, g3 = -w3 (cyclic in k).
  double g(int k) const;
  /// Asymmetry d_k = (g_{k-1} - g_{k+1}) / (g_{k-1} + g_{k+1}).
  double d(int k) const;
};

void validate(const Tensions& t);
void validate(const ReducedVolumes& w);

/// Axisymmetric doublet made of three spherical caps meeting at a junction
/// circle of radius h = 1/y.  Stored coordinates are the reduced apex
/// positions z_k = x_k / h with z1 < z3 < z2; equilibrium states with
/// positive cell pressures additionally satisfy z1 < 0 < z2.
///
/// Derived per-cap quantities, with alpha_k = 2 atan(z_k):
///   c_k = cos(alpha_k) = (1 - z_k^2)/(1 + z_k^2)
///   s_k = sin(alpha_k) = 2 z_k /(1 + z_k^2)
/// and the junction angles phi_k = alpha_{k+1} - alpha_{k-1}, kept as raw
/// (unwrapped) differences in (-2pi, 2pi).
struct DoubletState {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 0.0;
  double y = 0.0;  // inverse junction radius, > 0

  double h() const { return 1.0 / y; }
  double z(int k) const;
  double x(int k) const { return z(k) / y; }
  double alpha(int k) const;
  double c(int k) const;
  double s(int k) const;

  /// Raw junction angles (phi1, phi2, phi3).  phi3 is stored as
  /// -(phi1 + phi2) so the triple sums to zero exactly.
  std::array<double, 3> phi() const;

  /// Signed curvature radius r_k = h / s_k; empty for a flat cap (z_k = 0).
  std::optional<double> radius(int k) const;
  /// Sphere center abscissa C_k = (x_k^2 - h^2)/(2 x_k); empty when z_k = 0.
  std::optional<double> center(int k) const;
};

/// Cap coordinates in physical form.
struct XH {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double h = 0.0;
};

/// Laplace pressures of the two cells; the interface sustains P3 = P1 - P2.
struct PressurePair {
  double P1 = 0.0;
  double P2 = 0.0;
  double P3() const { return P1 - P2; }
};

/// Degenerate configuration u_k reached when cap k collapses (h = 0):
/// u1/u2 internalize one cell, u3 splits the doublet into two spheres.
/// The coordinate x_{which} is zero by construction.
struct BoundaryState {
  int which = 0;  // 1, 2 or 3
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double energy = 0.0;
};

/// Unique real root of X(X^2 + 3) = 2q, i.e. Z(q) = 2 sinh(asinh(q)/3).
/// Strictly increasing and odd.
double cap_root(double q);

/// Build a state from physical coordinates; requires h > 0 and the strict
/// ordering x1 < x3 < x2.
DoubletState state_from_xh(double x1, double x2, double x3, double h);
XH xh_from_state(const DoubletState& st);

/// Reduced volumes enclosed by the three caps of a state.
ReducedVolumes volumes(const DoubletState& st);

/// Total interface energy
///   E = pi (t1 x1^2 + t2 x2^2 + t3 x3^2 + (t1+t2+t3) h^2 + 2 kappa h).
double energy(const DoubletState& st, const Tensions& t);
double energy_xh(double x1, double x2, double x3, double h, const Tensions& t);

/// Point of the volume-constraint manifold with prescribed interface apex x3
/// and junction radius h > 0: the outer apexes are recovered as
///   x1 = h Z((x3(3h^2+x3^2) - w1) / (2h^3)),
///   x2 = h Z((x3(3h^2+x3^2) + w2) / (2h^3)).
/// The ordering x1 < x3 < x2 holds for every (x3, h) with h > 0.
DoubletState parameterize_manifold(double x3, double h,
                                   const ReducedVolumes& w);

/// Boundary energy profile at h = 0, divided by pi, as a function of the
/// cube x = x3^3 of the interface apex:
///   psi(x) = t1 ((x - w1)^2)^{1/3} + t2 ((x + w2)^2)^{1/3} + t3 (x^2)^{1/3}.
/// Concave between its kinks at x = -w2, 0, w1, so its minima sit at kinks.
double boundary_psi(double x, const Tensions& t, const ReducedVolumes& w);

/// Degenerate configuration u_k together with its energy
///   E(u1) = pi (t2 w3^{2/3} + t3 w1^{2/3})
///   E(u2) = pi (t1 w3^{2/3} + t3 w2^{2/3})
///   E(u3) = pi (t1 w1^{2/3} + t2 w2^{2/3}).
BoundaryState boundary_point(int k, const Tensions& t,
                             const ReducedVolumes& w);

/// Dimensionless inputs for line-tension work: volume asymmetry
/// w = (w2 - w1)/w3 and tension ratios tau_k = t_k w3^{1/3} / kappa.
/// Requires kappa > 0.
struct ReducedVariables {
  double w = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
};
ReducedVariables reduced_variables(const Tensions& t, const ReducedVolumes& w);

namespace detail {
/// 1-based cyclic successor/predecessor on {1,2,3}.
inline int nxt(int k) { return k % 3 + 1; }
inline int prv(int k) { return (k + 1) % 3 + 1; }
}  // namespace detail

}  // namespace doublet
