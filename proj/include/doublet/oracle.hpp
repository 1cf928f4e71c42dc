#pragma once

#include <array>

#include "doublet/geometry.hpp"

namespace doublet {

/// Brute-force settings: a dense rectangle in the manifold chart (x3, h)
/// followed by simplex refinement of the best grid points.
struct OracleGrid {
  int nx = 200;
  int nh = 200;
  double h_max_factor = 2.0;  // h spans (0, factor * w3^{1/3}]
  int refine_top = 10;
  double simplex_tol = 1e-12;
  int simplex_max_iter = 400;
};

/// Boundary survey at h = 0: energies of the three degenerate points u_k
/// (from the kink values of the boundary profile psi) and the argmin.
struct BoundaryScan {
  std::array<double, 3> energies{};  // E(u_1), E(u_2), E(u_3)
  int which = 0;
  double energy = 0.0;
};
BoundaryScan boundary_scan(const Tensions& t, const ReducedVolumes& w);

struct OracleResult {
  bool interior_found = false;
  double interior_x3 = 0.0;
  double interior_h = 0.0;
  double interior_energy = 0.0;
  BoundaryScan boundary;
  double global_energy = 0.0;
  bool interior_is_global = false;
};

/// Reference global minimizer by exhaustive search, independent of the
/// analytic solvers: every candidate is an exact feasible configuration
/// obtained through the volume-constraint chart, so its energy is a true
/// upper bound, and boundary energies are evaluated in closed form.
OracleResult oracle_minimize(const Tensions& t, const ReducedVolumes& w,
                             const OracleGrid& grid = {});

}  // namespace doublet
