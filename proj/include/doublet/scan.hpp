#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "doublet/geometry.hpp"
#include "doublet/line.hpp"

namespace doublet {

/// One sample of the (t1, t2) existence map at fixed (t3, kappa, w).  The
/// cell is an equilibrium of its recovered tensions by construction, so the
/// Hessian classification is meaningful cell by cell.
struct PhaseCell {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double y = 0.0;
  double z3 = 0.0;
  double trace = 0.0;
  double det = 0.0;
  PointClass classification = PointClass::Degenerate;
  bool bulge1 = false;  // raw phi1 > pi
  bool bulge2 = false;  // raw phi2 > pi
  double energy = 0.0;
  std::array<double, 3> boundary_energy{};  // E(u1), E(u2), E(u3)
  GlobalTag global = GlobalTag::Interior;
};

/// Evaluates the forward map on the n x n grid of cell centers over
/// (alpha1, alpha2) in (-pi, 0) x (0, pi), row-major in (i, j).  Cells whose
/// recovered tensions are not both positive (or where sin phi3 vanishes) are
/// dropped.  Serial and deterministic.
std::vector<PhaseCell> scan_angle_grid(double t3, double kappa,
                                       const ReducedVolumes& w, int n);

/// Closed-form thresholds on the t1 = t2 diagonal for equal cell volumes:
/// above kappa_bounded the existence region is bounded, above
/// kappa_disappear no interior minimum survives at any tension, and
/// t_singular is the common value of t1 = t2 where the bounded region's
/// diagonal extremity sits.  Requires w1 = w2.
struct EqualVolumeThresholds {
  double kappa_bounded = 0.0;
  double kappa_disappear = 0.0;
  double t_singular = 0.0;
};
EqualVolumeThresholds thresholds_equal_volumes(double t3,
                                               const ReducedVolumes& w);

/// Constants of the feasibility lemma: the maximizer omega0 of
/// g(x) = -f(x^3)/x and the maximum M = g(omega0), the sharp bound on
/// kappa y / (t1+t2+t3) over real equilibria.
struct LemmaConstants {
  double omega0 = 0.0;
  double M = 0.0;
};
LemmaConstants lemma_constants();

/// Configuration on the bulge onset surface sin phi1 = 0 (phi1 = pi): cap 1
/// and the interface close to a full sphere through the junction.  Obtained
/// by reducing the equilibrium system exactly under z3 = -1/z2 and scanning
/// the one remaining force-balance condition in z2.
struct BulgeBoundaryPoint {
  double t1 = 0.0;
  DoubletState state;
  double energy = 0.0;
  double trace = 0.0;
  double det = 0.0;
  PointClass classification = PointClass::Degenerate;
  double condition_residual = 0.0;  // residual of the scanned balance
  double residual = 0.0;            // scaled residual of the full system
};

/// All sin phi1 = 0 equilibria for the given (t2, t3, kappa, w), sorted by
/// t1 descending.  Empty when no real branch exists (e.g. t2 <= t3, which
/// forces t1 <= 0 on this surface).
std::vector<BulgeBoundaryPoint> bulge_boundary_solve(double t2, double t3,
                                                     double kappa,
                                                     const ReducedVolumes& w,
                                                     int scan_points = 4096);

/// The reference probe of maximal observed bulging: a fixed parameter set
/// whose unique local minimum has phi1 a couple of degrees past pi.
struct BulgeProbe {
  Tensions tensions;
  ReducedVolumes volumes;
  CriticalPoint point;
  double phi1_deg = 0.0;
};
BulgeProbe max_bulge_probe();

/// CSV emission, header
///   alpha1,alpha2,t1,t2,y,z3,trace,det,class,bulge1,bulge2,E,E1,E2,E3,global
/// with shortest round-trip float formatting.  Byte-identical for identical
/// inputs.
void write_scan_csv(std::ostream& os, const std::vector<PhaseCell>& cells);

}  // namespace doublet
