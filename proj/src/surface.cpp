#include "doublet/surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "doublet/errors.hpp"

namespace doublet {

using detail::nxt;
using detail::prv;

int TensionRegime::degenerate_index() const {
  switch (label) {
    case Regime::Internalize1: return 1;
    case Regime::Internalize2: return 2;
    case Regime::Externalize: return 3;
    default: return 0;
  }
}

TensionRegime classify_regime(const Tensions& t) {
  validate(t);
  if (t.kappa != 0.0)
    throw InvalidInput(
        "regime classification applies to kappa = 0 only; use the "
        "line-tension solver");
  const double ts = t.sum();
  TensionRegime r;
  for (int k = 1; k <= 3; ++k) {
    const double tk = t.surface(k);
    if (2.0 * tk < ts) continue;
    r.label = k == 1 ? Regime::Internalize1
                     : (k == 2 ? Regime::Internalize2 : Regime::Externalize);
    r.on_boundary = (2.0 * tk == ts);
    return r;
  }
  r.label = Regime::Interior;
  return r;
}

AngleLaws angle_laws(const Tensions& t) {
  validate(t);
  const TensionRegime regime = classify_regime(Tensions{t.t1, t.t2, t.t3, 0});
  if (!regime.interior())
    throw InvalidInput("junction angles require the interior tension regime");

  const double ts = t.sum();
  // Common positive product (t1+t2+t3) * prod_k (t_{k+1}+t_{k-1}-t_k).
  double prod = ts;
  for (int k = 1; k <= 3; ++k)
    prod *= t.surface(nxt(k)) + t.surface(prv(k)) - t.surface(k);
  const double root = std::sqrt(prod);

  AngleLaws laws;
  for (int k = 1; k <= 3; ++k) {
    const double tk = t.surface(k);
    const double tp = t.surface(nxt(k));
    const double tm = t.surface(prv(k));
    laws.cos_phi[k - 1] = -(tp * tp + tm * tm - tk * tk) / (2.0 * tp * tm);
    laws.sin_phi[k - 1] = root / (2.0 * tp * tm);
    laws.phi[k - 1] = std::acos(std::clamp(laws.cos_phi[k - 1], -1.0, 1.0));
    // cot(phi_k/2) = sqrt((t_k^2-(tp-tm)^2) / ((tp+tm)^2-t_k^2))
    laws.y_cot[k - 1] = std::sqrt((tk + tp - tm) * (tk + tm - tp) /
                                  (ts * (tp + tm - tk)));
  }
  laws.circumradius = t.t1 * t.t2 * t.t3 / root;
  return laws;
}

std::array<double, 6> build_quintic(int k, const Tensions& t,
                                    const ReducedVolumes& w) {
  validate(w);
  const AngleLaws laws = angle_laws(t);
  const double a = laws.ycot(prv(k));  // y_{k-1}
  const double b = laws.ycot(nxt(k));  // y_{k+1}
  const double d = w.d(k);

  const Poly tk = poly_mul(poly_mul({a, 1.0}, poly_mul({a, 1.0}, {a, 1.0})),
                           {3.0 * b * b + 1.0, -3.0 * b, 1.0});
  const Poly uk = poly_mul(poly_mul({-b, 1.0}, poly_mul({-b, 1.0}, {-b, 1.0})),
                           {3.0 * a * a + 1.0, 3.0 * a, 1.0});
  const Poly f =
      poly_add(poly_scale(tk, 0.5 * (1.0 + d)), poly_scale(uk, 0.5 * (1.0 - d)));

  std::array<double, 6> coeffs{};
  for (std::size_t i = 0; i < 6 && i < f.size(); ++i) coeffs[i] = f[i];
  return coeffs;
}

namespace {

double monotone_h(double x, double ym, double yp) {
  return ((ym * ym + 1.0) * x + (3.0 * ym * ym + yp * ym + 2.0)) * x +
         (yp * yp + 3.0 * ym * ym + 3.0 * yp * ym + 1.0);
}

double monotone_r(double x, double ym, double yp) {
  return ((3.0 * yp * yp + ym * ym + 3.0 * yp * ym + 1.0) * x +
          (3.0 * yp * yp + yp * ym + 2.0)) *
             x +
         (yp * yp + 1.0);
}

}  // namespace

double monotone_f(double xi, double y_minus, double y_plus) {
  return xi * xi * xi * monotone_h(xi, y_minus, y_plus) /
         monotone_r(xi, y_minus, y_plus);
}

double monotone_f_prime(double xi, double y_minus, double y_plus) {
  const double ym = y_minus, yp = y_plus;
  const double delta =
      (ym * ym + 1.0) * (3.0 * yp * yp + ym * ym + 3.0 * yp * ym + 1.0);
  const double eta =
      (yp * ym * (yp * yp + ym * ym + 3.0 * yp * ym) + yp * yp + ym * ym +
       1.0) /
      delta;
  const double theta = (ym + yp) * (ym + yp) *
                       (yp * yp + ym * ym + yp * ym + 1.0) *
                       (2.0 * yp * yp * ym * ym + 3.0 * yp * yp +
                        3.0 * ym * ym + yp * ym + 3.0) /
                       (delta * delta);
  const double s = 3.0 * delta * xi * xi * (xi + 1.0) * (xi + 1.0) *
                   ((xi + eta) * (xi + eta) + theta);
  const double r = monotone_r(xi, ym, yp);
  return s / (r * r);
}

double solve_monotone(double y_minus, double y_plus, double ratio) {
  if (!(y_minus > 0.0) || !(y_plus > 0.0))
    throw InvalidInput("cotangent parameters must be positive");
  if (!std::isfinite(ratio)) throw InvalidInput("target ratio must be finite");
  if (ratio == 0.0) return 0.0;

  // f is strictly increasing with f(0) = 0, so the root has the sign of
  // the target.  Double outward until it is bracketed.
  double lo = 0.0, hi = 0.0;
  if (ratio > 0.0) {
    hi = 1.0;
    while (monotone_f(hi, y_minus, y_plus) < ratio) {
      hi *= 2.0;
      if (hi > 1e30) throw ConvergenceFailure("monotone bracket blew up");
    }
  } else {
    lo = -1.0;
    while (monotone_f(lo, y_minus, y_plus) > ratio) {
      lo *= 2.0;
      if (lo < -1e30) throw ConvergenceFailure("monotone bracket blew up");
    }
  }
  if (ratio > 0.0)
    lo = 0.0;
  else
    hi = 0.0;

  // Coarse bisection, then Newton polished inside the bracket.
  const double coarse = 1e-3 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
  while (hi - lo > coarse) {
    const double mid = 0.5 * (lo + hi);
    if (monotone_f(mid, y_minus, y_plus) < ratio)
      lo = mid;
    else
      hi = mid;
  }

  const double tol = 1e-14 * std::max(1.0, std::fabs(ratio));
  double xi = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double val = monotone_f(xi, y_minus, y_plus) - ratio;
    if (std::fabs(val) <= tol) return xi;
    if (val > 0.0)
      hi = xi;
    else
      lo = xi;
    const double der = monotone_f_prime(xi, y_minus, y_plus);
    double next = xi - val / der;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == xi) return xi;
    xi = next;
  }
  const double final_val = monotone_f(xi, y_minus, y_plus) - ratio;
  if (std::fabs(final_val) <= 1e-12 * std::max(1.0, std::fabs(ratio)))
    return xi;
  throw ConvergenceFailure("monotone solve stalled at residual " +
                           std::to_string(final_val));
}

BoundaryState degenerate_configuration(int k, const Tensions& t,
                                       const ReducedVolumes& w) {
  return boundary_point(k, t, w);
}

namespace {

struct PivotSolve {
  DoubletState state;
  double residual;
};

// Solve the quintic for pivot k through the monotone bijection and rebuild
// the full configuration from the angle laws.
PivotSolve solve_with_pivot(int k, const AngleLaws& laws,
                            const Tensions& t, const ReducedVolumes& w) {
  const double ym = laws.ycot(prv(k));
  const double yp = laws.ycot(nxt(k));
  const double ratio = w.g(prv(k)) / w.g(nxt(k));
  const double xi = solve_monotone(ym, yp, ratio);

  const double zk = (yp - xi * ym) / (1.0 + xi);
  // Neighbours via the half-angle Moebius maps alpha_{k+/-1} = alpha_k -/+ phi_{k-/+1}.
  const double zp = (ym * zk - 1.0) / (ym + zk);
  const double zm = (yp * zk + 1.0) / (yp - zk);

  const auto zq = [](double z) { return z * (z * z + 3.0); };
  const double h = std::cbrt(w.g(k) / (zq(zp) - zq(zm)));
  if (!(h > 0.0) || !std::isfinite(h))
    throw ConvergenceFailure("pivot reconstruction produced a bad radius");

  std::array<double, 3> z{};
  z[k - 1] = zk;
  z[nxt(k) - 1] = zp;
  z[prv(k) - 1] = zm;
  DoubletState st{z[0], z[1], z[2], 1.0 / h};

  // Residuals: force balance scaled by the largest tension, volumes relative.
  const double tmax = t.max_surface();
  const double fb_c =
      (t.t1 * st.c(1) + t.t2 * st.c(2) + t.t3 * st.c(3)) / tmax;
  const double fb_s =
      (t.t1 * st.s(1) + t.t2 * st.s(2) + t.t3 * st.s(3)) / tmax;
  const ReducedVolumes got = volumes(st);
  const double dv1 = (got.w1 - w.w1) / w.w1;
  const double dv2 = (got.w2 - w.w2) / w.w2;
  const double res = std::max({std::fabs(fb_c), std::fabs(fb_s),
                               std::fabs(dv1), std::fabs(dv2)});
  return PivotSolve{st, res};
}

}  // namespace

SurfaceSolution solve_surface(const Tensions& t, const ReducedVolumes& w) {
  validate(t);
  validate(w);
  SurfaceSolution sol;
  sol.regime = classify_regime(t);

  if (!sol.regime.interior()) {
    const int k = sol.regime.degenerate_index();
    sol.boundary = degenerate_configuration(k, t, w);
    sol.energy = sol.boundary->energy;
    return sol;
  }

  const AngleLaws laws = angle_laws(t);
  constexpr double kResidualTol = 1e-10;

  // The junction pivot is the best conditioned one in typical inputs; fall
  // back to the other caps (smallest volume asymmetry first) if it
  // misbehaves.
  int pivot = 3;
  PivotSolve best = solve_with_pivot(pivot, laws, t, w);
  if (best.residual > kResidualTol) {
    int first = std::fabs(w.d(1)) <= std::fabs(w.d(2)) ? 1 : 2;
    for (int alt : {first, first == 1 ? 2 : 1}) {
      const PivotSolve retry = solve_with_pivot(alt, laws, t, w);
      if (retry.residual < best.residual) {
        best = retry;
        pivot = alt;
      }
      if (best.residual <= kResidualTol) break;
    }
  }
  if (best.residual > 1e-8)
    throw ConvergenceFailure("surface solve residual " +
                             std::to_string(best.residual));

  const DoubletState& st = best.state;
  if (!(st.z1 < st.z3 && st.z3 < st.z2 && st.z1 < 0.0 && st.z2 > 0.0))
    throw ConvergenceFailure("surface solve lost the cap ordering");

  sol.state = st;
  sol.pressures = PressurePair{-2.0 * t.t1 * st.s(1) * st.y,
                               2.0 * t.t2 * st.s(2) * st.y};
  sol.energy = energy(st, t);
  sol.pivot = pivot;
  sol.residual = best.residual;
  return sol;
}

}  // namespace doublet
