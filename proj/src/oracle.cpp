#include "doublet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doublet/errors.hpp"

namespace doublet {

BoundaryScan boundary_scan(const Tensions& t, const ReducedVolumes& w) {
  validate(t);
  validate(w);
  // psi kinks at x = w1, -w2, 0 carry the energies of u_1, u_2, u_3.
  BoundaryScan scan;
  scan.energies = {kPi * boundary_psi(w.w1, t, w),
                   kPi * boundary_psi(-w.w2, t, w),
                   kPi * boundary_psi(0.0, t, w)};
  scan.which = 1;
  for (int k = 2; k <= 3; ++k)
    if (scan.energies[k - 1] < scan.energies[scan.which - 1]) scan.which = k;
  scan.energy = scan.energies[scan.which - 1];
  return scan;
}

namespace {

struct Sample {
  double x3, h, energy;
};

double chart_energy(double x3, double h, const Tensions& t,
                    const ReducedVolumes& w) {
  if (!(h > 1e-12) || !std::isfinite(h) || !std::isfinite(x3))
    return std::numeric_limits<double>::infinity();
  const DoubletState st = parameterize_manifold(x3, h, w);
  const double e = energy(st, t);
  return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
}

// Plain two-variable Nelder-Mead; good enough to polish a grid candidate
// down to stagnation of the simplex energies.
Sample nelder_mead(Sample seed, double step_x, double step_h,
                   const Tensions& t, const ReducedVolumes& w,
                   double tol, int max_iter) {
  struct Vertex {
    double x3, h, e;
  };
  const auto eval = [&](double x3, double h) {
    return Vertex{x3, h, chart_energy(x3, h, t, w)};
  };
  std::array<Vertex, 3> v{eval(seed.x3, seed.h),
                          eval(seed.x3 + step_x, seed.h),
                          eval(seed.x3, seed.h + step_h)};
  const auto by_energy = [](const Vertex& a, const Vertex& b) {
    return a.e < b.e;
  };
  for (int iter = 0; iter < max_iter; ++iter) {
    std::sort(v.begin(), v.end(), by_energy);
    if (std::fabs(v[2].e - v[0].e) <=
        tol * (1.0 + std::fabs(v[0].e)))
      break;
    const double cx = 0.5 * (v[0].x3 + v[1].x3);
    const double ch = 0.5 * (v[0].h + v[1].h);
    Vertex refl = eval(cx + (cx - v[2].x3), ch + (ch - v[2].h));
    if (refl.e < v[0].e) {
      Vertex expand = eval(cx + 2.0 * (cx - v[2].x3), ch + 2.0 * (ch - v[2].h));
      v[2] = expand.e < refl.e ? expand : refl;
    } else if (refl.e < v[1].e) {
      v[2] = refl;
    } else {
      Vertex contract = eval(cx + 0.5 * (v[2].x3 - cx), ch + 0.5 * (v[2].h - ch));
      if (contract.e < v[2].e) {
        v[2] = contract;
      } else {
        for (int i = 1; i < 3; ++i)
          v[i] = eval(v[0].x3 + 0.5 * (v[i].x3 - v[0].x3),
                      v[0].h + 0.5 * (v[i].h - v[0].h));
      }
    }
  }
  std::sort(v.begin(), v.end(), by_energy);
  return Sample{v[0].x3, v[0].h, v[0].e};
}

}  // namespace

OracleResult oracle_minimize(const Tensions& t, const ReducedVolumes& w,
                             const OracleGrid& grid) {
  validate(t);
  validate(w);
  if (grid.nx < 2 || grid.nh < 2)
    throw InvalidInput("oracle grid must be at least 2x2");

  const double span = std::cbrt(w.w3());
  const double x_lo = -span, x_hi = span;
  const double h_hi = grid.h_max_factor * span;

  std::vector<Sample> best;
  best.reserve(static_cast<std::size_t>(grid.refine_top) + 1);
  const auto keep = [&](const Sample& s) {
    if (!std::isfinite(s.energy)) return;
    best.push_back(s);
    std::sort(best.begin(), best.end(),
              [](const Sample& a, const Sample& b) { return a.energy < b.energy; });
    if (best.size() > static_cast<std::size_t>(grid.refine_top))
      best.pop_back();
  };

  const double dx = (x_hi - x_lo) / (grid.nx - 1);
  const double dh = h_hi / grid.nh;
  for (int i = 0; i < grid.nx; ++i) {
    const double x3 = x_lo + i * dx;
    for (int j = 1; j <= grid.nh; ++j) {
      const double h = j * dh;
      keep(Sample{x3, h, chart_energy(x3, h, t, w)});
    }
  }

  OracleResult res;
  res.boundary = boundary_scan(t, w);

  double interior = std::numeric_limits<double>::infinity();
  Sample interior_at{0.0, 0.0, interior};
  for (const Sample& s : best) {
    const Sample polished = nelder_mead(s, 0.5 * dx, 0.5 * dh, t, w,
                                        grid.simplex_tol,
                                        grid.simplex_max_iter);
    if (polished.energy < interior) {
      interior = polished.energy;
      interior_at = polished;
    }
  }

  if (std::isfinite(interior)) {
    res.interior_found = true;
    res.interior_x3 = interior_at.x3;
    res.interior_h = interior_at.h;
    res.interior_energy = interior;
  }
  res.interior_is_global =
      res.interior_found && interior < res.boundary.energy;
  res.global_energy =
      res.interior_is_global ? interior : res.boundary.energy;
  return res;
}

}  // namespace doublet
