#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "doublet/geometry.hpp"

namespace doublet {

/// Second-order nature of a constrained critical point, from the tangent
/// Hessian invariants.
enum class PointClass { LocalMin, Saddle, LocalMax, Degenerate };

const char* to_string(PointClass c);

struct CriticalPoint {
  DoubletState state;
  Tensions tensions;
  PressurePair pressures;
  double energy = 0.0;
  double hessian_trace = 0.0;
  double hessian_det = 0.0;
  PointClass classification = PointClass::Degenerate;
  /// Scaled max-norm residual of the force/volume system at the point.
  double residual = 0.0;
};

/// Outcome of the scan parameterization at fixed (z1, z2): the junction
/// radius and interface apex are recovered from the volume constraints,
///   y^3 = (z2(z2^2+3) - z1(z1^2+3)) / w3,
///   z3(z3^2+3) = (w2 z1(z1^2+3) + w1 z2(z2^2+3)) / w3,
/// and the outer tensions from the two force balances,
///   t1 = (t3 sin phi1 + kappa y s2) / sin phi3,
///   t2 = (t3 sin phi2 - kappa y s1) / sin phi3.
struct ForwardPoint {
  double y = 0.0;
  double z3 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double sin_phi3 = 0.0;
};
ForwardPoint forward_map(double z1, double z2, double t3, double kappa,
                         const ReducedVolumes& w);

/// Residuals of the equilibrium system at a candidate point, in order:
/// cosine force balance (with the kappa y term), sine force balance, and
/// the two volume constraints.
std::array<double, 4> residual(const DoubletState& st, const Tensions& t,
                               const ReducedVolumes& w);

struct SolveOptions {
  int grid_n = 48;          // multistart grid per angle axis
  double newton_tol = 1e-13;
  int max_iter = 60;
  double dedup_radius = 1e-6;
  double residual_tol = 1e-10;
};

/// All equilibria with positive junction radius for the given tensions and
/// volumes: damped Newton on the forward map from a grid of angle starts
/// over (alpha1, alpha2) in (-pi, 0) x (0, pi), deduplicated and classified.
/// Results are sorted by (z1, z2); at most six points arise in practice.
std::vector<CriticalPoint> find_critical_points(const Tensions& t,
                                                const ReducedVolumes& w,
                                                const SolveOptions& opts = {});

/// Invariants (trace, det) of the energy Hessian restricted to the
/// constraint tangent plane:
///   trace = 2 pi (2 (t1+t2+t3) - 3 kappa y)
///   det   = 4 pi^2 (det M - 2 kappa y (t1+t2+t3 - kappa y))
/// with M the tangent-basis form of the surface part.
std::pair<double, double> hessian_tangent(const DoubletState& st,
                                          const Tensions& t);

/// Sign classification with degeneracy threshold 1e-9 (2 pi t_s)^2.
PointClass classify(double trace, double det, double tension_sum);

/// Necessary conditions any real equilibrium must satisfy; the solve is
/// hopeless when they fail.  u = (t_s / kappa) (w3/2)^{1/3} must satisfy
/// u M >= 1 (hence u >= 3), y >= (4/w3)^{1/3}, and a dominating tension
/// t_k >= t_{k+1} + t_{k-1} forces
///   t_{k+1} + t_{k-1} >= t_s cosh(asinh(u^3)/3) / sqrt(u^6+1).
struct FeasibilityReport {
  double u = 0.0;
  bool u_ok = false;
  double y_min = 0.0;          // junction radii obey y >= y_min
  int dominant_k = 0;          // 0 when the triangle inequalities hold
  bool dominant_ok = true;     // the dominating-tension condition above
  double M = 0.0;              // max of -f(x^3)/x over x > 0, about 0.3217
  bool feasible = false;       // conjunction of the above verdicts
};
FeasibilityReport feasibility_prefilter(const Tensions& t,
                                        const ReducedVolumes& w);

/// Identities every equilibrium satisfies (all should vanish): the three
/// rotated cosine balances, the three rotated sine balances, the squared
/// norm identity sum t_k^2 + 2 sum t_j t_k cos phi_i = (kappa y)^2, and the
/// cosine laws with line-tension correction.
struct RelationReport {
  std::array<double, 3> cos_balance{};
  std::array<double, 3> sin_balance{};
  double norm_identity = 0.0;
  std::array<double, 3> cos_law{};
  double max_abs() const;
};
RelationReport relation_checks(const DoubletState& st, const Tensions& t);

enum class GlobalTag { Interior, U1, U2, U3 };
const char* to_string(GlobalTag g);

struct GlobalResult {
  std::vector<CriticalPoint> critical_points;  // all, sorted
  std::vector<CriticalPoint> minima;           // LocalMin subset
  std::array<BoundaryState, 3> boundary;       // u_1, u_2, u_3
  GlobalTag global = GlobalTag::Interior;
  double global_energy = 0.0;
};

/// Global minimum across interior equilibria and the three degenerate
/// boundary points.  kappa = 0 inputs go through the direct surface solver;
/// kappa > 0 inputs through the multistart search.
GlobalResult global_minimum(const Tensions& t, const ReducedVolumes& w,
                            const SolveOptions& opts = {});

}  // namespace doublet
