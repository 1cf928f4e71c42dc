// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "doublet/detail/lemma.hpp"
#include "doublet/geometry.hpp"
#include "doublet/infer.hpp"
#include "doublet/line.hpp"
#include "doublet/oracle.hpp"
#include "doublet/poly.hpp"
#include "doublet/pressure.hpp"
#include "doublet/scan.hpp"
#include "doublet/surface.hpp"

using namespace doublet;

namespace {

char buf_detail[512];

#define DETAILF(...) std::snprintf(buf_detail, sizeof buf_detail, __VA_ARGS__)

struct SuiteRecord {
  Tensions t;
  ReducedVolumes w;
  std::vector<CriticalPoint> points;
};

std::vector<SuiteRecord> g_suite;

void record(const Tensions& t, const ReducedVolumes& w,
            std::vector<CriticalPoint> pts) {
  g_suite.push_back({t, w, std::move(pts)});
}

Tensions random_interior(std::mt19937_64& g, double margin = 0.15) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    double p1 = margin + u(g) * (kPi - 2.0 * margin);
    double p2 = margin + u(g) * (kPi - 2.0 * margin);
    double p3 = 2.0 * kPi - p1 - p2;
    if (p3 <= margin || p3 >= kPi - margin) continue;
    double s = 0.5 + 4.5 * u(g);
    return {s * std::sin(p1), s * std::sin(p2), s * std::sin(p3), 0.0};
  }
}

ReducedVolumes random_volumes(std::mt19937_64& g, double lo = 0.2,
                              double hi = 3.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(g), u(g)};
}

double rel_diff(double a, double b) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// ---------------------------------------------------------------- criteria

bool crit1_bulge_reference() {
  auto pts = bulge_boundary_solve(1.25, 1.0, 0.1, {0.5, 0.5});
  if (pts.empty()) {
    DETAILF("no solutions on the onset branch");
    return false;
  }
  const auto& p = pts.front();
  const double ref[7] = {0.271244499897851,  -2.031331771464625,
                         1.756721787151541,  -0.569242100436099,
                         2.930530863266979,  26.158972256436426,
                         4.615158111925040};
  const double got[7] = {p.t1,      p.state.z1, p.state.z2, p.state.z3,
                         p.state.y, p.trace,    p.det};
  double dev = 0.0;
  for (int i = 0; i < 7; ++i) dev = std::max(dev, std::abs(got[i] - ref[i]));
  DETAILF("max |dev| %.3g over 7 pinned values", dev);
  return dev <= 1e-9;
}

bool crit2_max_bulge() {
  auto probe = max_bulge_probe();
  record(probe.tensions, probe.volumes, {probe.point});
  double dev = std::abs(probe.phi1_deg - 182.590653);
  DETAILF("phi1 = %.6f deg (|dev| %.2g), class %s", probe.phi1_deg, dev,
          to_string(probe.point.classification));
  return dev <= 1e-3 && probe.point.classification == PointClass::LocalMin;
}

bool crit3_line_surface_equivalence() {
  Tensions tl{5.0, 6.0, 4.0, 1.0};
  ReducedVolumes w{0.75, 0.25};
  auto pts = find_critical_points(tl, w);
  record(tl, w, pts);
  const CriticalPoint* mn = nullptr;
  for (const auto& p : pts)
    if (p.classification == PointClass::LocalMin) mn = &p;
  if (!mn) {
    DETAILF("no local minimum at the line-tension configuration");
    return false;
  }
  auto sol = solve_surface({4.2, 8.5, 8.9, 0.0}, w);
  if (!sol.state) {
    DETAILF("surface solve failed");
    return false;
  }
  double dev = std::max({rel_diff(mn->state.z1, sol.state->z1),
                         rel_diff(mn->state.z2, sol.state->z2),
                         rel_diff(mn->state.z3, sol.state->z3),
                         rel_diff(mn->state.h(), sol.state->h())});
  DETAILF("max rel dev %.3g between the two geometries", dev);
  return dev <= 2e-2;
}

bool crit4_equal_tensions() {
  std::mt19937_64 g(104);
  double worst = 0.0;
  for (int i = 0; i < 25; ++i) {
    auto w = random_volumes(g, 0.05, 5.0);
    auto sol = solve_surface({1.0, 1.0, 1.0, 0.0}, w);
    if (!sol.state) {
      DETAILF("interior solve failed");
      return false;
    }
    for (double p : sol.state->phi()) {
      double wrapped = p < 0.0 ? p + 2.0 * kPi : p;
      worst = std::max(worst, std::abs(wrapped * 180.0 / kPi - 120.0));
    }
  }
  DETAILF("max |phi - 120 deg| = %.3g deg over 25 volume pairs", worst);
  return worst <= 1e-9;
}

bool crit5_quintic_uniqueness() {
  std::mt19937_64 g(105);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    auto t = random_interior(g);
    auto w = random_volumes(g);
    auto F = build_quintic(3, t, w);
    Poly p{F.begin(), F.end()};
    if (sturm_real_root_count(p) != 1) {
      DETAILF("case %d: Sturm count %d != 1 (t=%.17g,%.17g,%.17g w=%.17g,%.17g)",
              i, sturm_real_root_count(p), t.t1, t.t2, t.t3, w.w1, w.w2);
      return false;
    }
    // Independent plain bisection on a Cauchy-style enclosure.
    double B = 1.0;
    for (int j = 0; j < 5; ++j) B = std::max(B, std::abs(F[j]) + 1.0);
    double lo = -B, hi = B;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * B; ++it) {
      double mid = 0.5 * (lo + hi);
      if (poly_eval(p, mid) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double root = 0.5 * (lo + hi);
    auto sol = solve_surface(t, w);
    if (!sol.state) {
      DETAILF("case %d: interior solve failed", i);
      return false;
    }
    double dev = std::abs(root - sol.state->z3) /
                 std::max(1.0, std::abs(sol.state->z3));
    worst = std::max(worst, dev);
  }
  DETAILF("1000 cases, Sturm count 1 everywhere, max root dev %.3g", worst);
  return worst <= 1e-10;
}

bool crit6_oracle_equivalence() {
  std::mt19937_64 g(106);
  std::uniform_real_distribution<double> ut(0.2, 5.0);
  std::uniform_real_distribution<double> uk(0.05, 1.2);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Tensions t{ut(g), ut(g), ut(g), 0.0};
    auto w = random_volumes(g, 0.3, 2.0);
    auto sol = solve_surface(t, w);
    auto orc = oracle_minimize(t, w);
    double gap = rel_diff(sol.energy, orc.global_energy);
    if (gap > worst) worst = gap;
    if (gap > 1e-6) {
      DETAILF("kappa=0 case %d gap %.3g (t=%.17g,%.17g,%.17g w=%.17g,%.17g)",
              i, gap, t.t1, t.t2, t.t3, w.w1, w.w2);
      return false;
    }
  }
  for (int i = 0; i < 30; ++i) {
    Tensions t{ut(g), ut(g), ut(g), uk(g)};
    auto w = random_volumes(g, 0.3, 2.0);
    auto gm = global_minimum(t, w);
    record(t, w, gm.critical_points);
    auto orc = oracle_minimize(t, w);
    double gap = rel_diff(gm.global_energy, orc.global_energy);
    if (gap > worst) worst = gap;
    if (gap > 1e-6) {
      DETAILF("kappa>0 case %d gap %.3g (t=%.17g,%.17g,%.17g k=%.17g w=%.17g,%.17g)",
              i, gap, t.t1, t.t2, t.t3, t.kappa, w.w1, w.w2);
      return false;
    }
  }
  DETAILF("130 cases (100 kappa=0, 30 kappa>0), max rel gap %.3g", worst);
  return true;
}

bool crit7_pressure_round_trip() {
  std::mt19937_64 g(107);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto t = random_interior(g);
    auto w = random_volumes(g);
    auto sol = solve_surface(t, w);
    if (!sol.state || !sol.pressures) {
      DETAILF("case %d: interior solve failed", i);
      return false;
    }
    auto st = solve_pressure({t, sol.pressures->P1, sol.pressures->P2});
    auto a = xh_from_state(*sol.state);
    auto b = xh_from_state(st);
    double floor = 1e-9 * std::cbrt(w.w3());
    auto rd = [&](double u, double v) {
      return std::abs(u - v) / std::max({std::abs(u), std::abs(v), floor});
    };
    double dev = std::max({rd(a.x1, b.x1), rd(a.x2, b.x2), rd(a.x3, b.x3),
                           rd(a.h, b.h)});
    worst = std::max(worst, dev);
  }
  DETAILF("50 round trips, max rel dev %.3g", worst);
  return worst <= 1e-8;
}

bool diagonal_has_min(double t, double kappa, const ReducedVolumes& w) {
  auto pts = find_critical_points({t, t, 1.0, kappa}, w);
  for (const auto& p : pts)
    if (p.classification == PointClass::LocalMin) return true;
  return false;
}

bool crit8_equal_volume_thresholds() {
  ReducedVolumes w{0.5, 0.5};
  auto th = thresholds_equal_volumes(1.0, w);
  if (!(1.45 < th.kappa_bounded && th.kappa_bounded < 1.55)) {
    DETAILF("kappa_bounded = %.6g not bracketed by 1.45/1.55",
            th.kappa_bounded);
    return false;
  }

  // Below kappa_bounded the region is unbounded along the diagonal:
  // tensions of 10^3 still admit a local minimum and the scan's LocalMin
  // cells reach the largest tensions the angle grid can represent.
  Tensions big{1000.0, 1000.0, 1.0, 1.45};
  auto pts = find_critical_points(big, w);
  record(big, w, pts);
  bool min_below = false;
  for (const auto& p : pts)
    min_below |= p.classification == PointClass::LocalMin;
  if (!min_below) {
    DETAILF("no LocalMin at t1=t2=1000, kappa=1.45");
    return false;
  }
  if (diagonal_has_min(1000.0, 1.55, w)) {
    DETAILF("LocalMin at t1=t2=1000 persists at kappa=1.55");
    return false;
  }

  auto below = scan_angle_grid(1.0, 1.45, w, 256);
  double max_below = 0.0;
  for (const auto& c : below)
    if (c.classification == PointClass::LocalMin)
      max_below = std::max(max_below, std::max(c.t1, c.t2));

  // Above kappa_bounded the region is bounded: its largest tension sits on
  // the fold where the minimum degenerates.  Bracket that singular tension
  // along the diagonal with the direct solver; the scan must stay below it
  // while the kappa=1.45 scan must march past it.
  double lo = 30.0, hi = 2000.0;
  if (!diagonal_has_min(lo, 1.55, w) || diagonal_has_min(hi, 1.55, w)) {
    DETAILF("diagonal bracket [%g, %g] invalid at kappa=1.55", lo, hi);
    return false;
  }
  for (int i = 0; i < 45; ++i) {
    double mid = 0.5 * (lo + hi);
    (diagonal_has_min(mid, 1.55, w) ? lo : hi) = mid;
  }
  double singular_bound = hi;

  auto above = scan_angle_grid(1.0, 1.55, w, 256);
  double max_above = 0.0;
  for (const auto& c : above)
    if (c.classification == PointClass::LocalMin)
      max_above = std::max(max_above, std::max(c.t1, c.t2));
  DETAILF("t=10^3 min at k=1.45 only; scan max %.4g (k=1.45) vs %.4g "
          "bounded by %.6g (k=1.55)",
          max_below, max_above, singular_bound);
  return max_above > 0.0 && max_above <= singular_bound * (1.0 + 1e-6) &&
         max_below > 2.0 * singular_bound;
}

bool crit9_structural_counts() {
  std::mt19937_64 g(109);
  std::uniform_real_distribution<double> ut(0.2, 5.0);
  std::uniform_real_distribution<double> uk(0.05, 2.5);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int certified_violations = 0;
  size_t max_count = 0;
  for (int i = 0; i < 200; ++i) {
    Tensions t{ut(g), ut(g), ut(g), u01(g) < 0.25 ? 0.0 : uk(g)};
    auto w = random_volumes(g);
    auto pts = find_critical_points(t, w);
    record(t, w, pts);
    max_count = std::max(max_count, pts.size());
    int minima = 0;
    for (const auto& p : pts)
      minima += p.classification == PointClass::LocalMin;
    if (pts.size() > 6 || minima > 1) {
      bool certified = true;
      for (const auto& p : pts) certified &= p.residual <= 1e-10;
      std::fprintf(stderr,
                   "structural violation%s: %zu points, %d minima at "
                   "t=(%.17g,%.17g,%.17g) kappa=%.17g w=(%.17g,%.17g)\n",
                   certified ? "" : " (uncertified, ignored)", pts.size(),
                   minima, t.t1, t.t2, t.t3, t.kappa, w.w1, w.w2);
      if (certified) ++certified_violations;
    }
  }
  DETAILF("200 parameter sets, max %zu points per set, %d certified "
          "violations",
          max_count, certified_violations);
  return certified_violations == 0;
}

bool crit10_lemma_conditions() {
  // Closed-form maximum against an independent golden-section maximization.
  auto lc = lemma_constants();
  double a = 1.2, b = 3.5;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  while (b - a > 1e-12) {
    if (detail::lemma_g(c) > detail::lemma_g(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  double M_num = detail::lemma_g(0.5 * (a + b));
  double mdev = std::abs(M_num - lc.M);
  if (mdev > 1e-10) {
    DETAILF("independent maximization M=%.15g vs closed form %.15g", M_num,
            lc.M);
    return false;
  }

  size_t inspected = 0;
  for (const auto& rec : g_suite) {
    if (rec.points.empty()) continue;
    double ts = rec.t.sum();
    double w3 = rec.w.w3();
    if (rec.t.kappa > 0.0) {
      double u = ts / rec.t.kappa * std::cbrt(w3 / 2.0);
      if (u < 3.0 - 1e-9) {
        DETAILF("u = %.12g < 3 with solutions present", u);
        return false;
      }
      if (u * lc.M < 1.0 - 1e-9) {
        DETAILF("u M = %.12g < 1 with solutions present", u * lc.M);
        return false;
      }
    }
    double ymin = std::cbrt(4.0 / w3);
    for (const auto& p : rec.points) {
      ++inspected;
      if (p.state.y < ymin * (1.0 - 1e-9)) {
        DETAILF("y = %.12g below the bound %.12g", p.state.y, ymin);
        return false;
      }
      double ky = rec.t.kappa * p.state.y;
      double side = std::max({rec.t.t1, rec.t.t2, rec.t.t3, ky});
      if (2.0 * side > (ts + ky) * (1.0 + 1e-9)) {
        DETAILF("quadrilateral inequality violated: 2*%.12g > %.12g", side,
                ts + ky);
        return false;
      }
    }
  }
  DETAILF("%zu points from the whole suite satisfy all bounds; |M_num - M| "
          "= %.2g",
          inspected, mdev);
  return inspected > 0;
}

bool crit11_degenerate_regimes() {
  std::mt19937_64 g(111);
  std::uniform_real_distribution<double> ut(0.3, 3.0);
  std::uniform_real_distribution<double> uz(0.05, 1.0);
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      double a = ut(g), b = ut(g);
      double dom = (a + b) * (1.0 + uz(g));
      Tensions t = k == 1 ? Tensions{dom, a, b, 0.0}
                 : k == 2 ? Tensions{a, dom, b, 0.0}
                          : Tensions{a, b, dom, 0.0};
      auto w = random_volumes(g);
      auto sol = solve_surface(t, w);
      if (!sol.boundary || sol.boundary->which != k) {
        DETAILF("pattern %d case %d: solver did not return u_%d", k, i, k);
        return false;
      }
      auto orc = oracle_minimize(t, w);
      if (orc.boundary.which != k ||
          rel_diff(orc.global_energy, sol.energy) > 1e-6) {
        DETAILF("pattern %d case %d: oracle global %.12g (u_%d) vs solver "
                "%.12g (u_%d)",
                k, i, orc.global_energy, orc.boundary.which, sol.energy, k);
        return false;
      }
    }
  }
  DETAILF("3 patterns x 20 instances, solver and oracle agree on u_k");
  return true;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)();
  double budget_sec;  // 0 = unstated
};

}  // namespace

int main() {
  const Criterion table[] = {
      {1, "bulge onset reference values", crit1_bulge_reference, 1.0},
      {2, "maximal bulge probe angle", crit2_max_bulge, 5.0},
      {3, "line/pure-surface equivalence", crit3_line_surface_equivalence,
       5.0},
      {4, "equal tensions give 120-degree junctions", crit4_equal_tensions,
       0.0},
      {5, "quintic uniqueness and root agreement", crit5_quintic_uniqueness,
       30.0},
      {6, "solver/oracle global energy equivalence", crit6_oracle_equivalence,
       600.0},
      {7, "pressure round trip", crit7_pressure_round_trip, 10.0},
      {8, "equal-volume threshold bracketing", crit8_equal_volume_thresholds,
       300.0},
      {9, "structural counts", crit9_structural_counts, 600.0},
      {10, "necessary-condition bounds", crit10_lemma_conditions, 0.0},
      {11, "degenerate regime dispatch", crit11_degenerate_regimes, 0.0},
  };
  int failures = 0;
  for (const auto& c : table) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    buf_detail[0] = '\0';
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      DETAILF("exception: %s", e.what());
    }
    double sec = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    if (ok && c.budget_sec > 0.0 && sec > c.budget_sec) {
      ok = false;
      std::snprintf(buf_detail + std::strlen(buf_detail),
                    sizeof buf_detail - std::strlen(buf_detail),
                    "; over budget %.0fs", c.budget_sec);
    }
    std::printf("%s %2d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.id,
                c.name, buf_detail, sec);
    std::fflush(stdout);
    failures += !ok;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all 11 criteria passed\n");
  return failures ? 1 : 0;
}
