#include "doublet/line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "doublet/detail/dual.hpp"
#include "doublet/detail/lemma.hpp"
#include "doublet/errors.hpp"
#include "doublet/surface.hpp"

namespace doublet {

using detail::Dual2;
using detail::nxt;
using detail::prv;

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::LocalMin: return "localmin";
    case PointClass::Saddle: return "saddle";
    case PointClass::LocalMax: return "localmax";
    default: return "degenerate";
  }
}

const char* to_string(GlobalTag g) {
  switch (g) {
    case GlobalTag::Interior: return "interior";
    case GlobalTag::U1: return "u1";
    case GlobalTag::U2: return "u2";
    default: return "u3";
  }
}

namespace {

inline double value_of(double x) { return x; }
inline double value_of(const Dual2& x) { return x.v; }

template <class T>
struct Fwd {
  T y, z3, t1, t2, sin_phi3;
  bool ok = false;
};

// Scan parameterization: (z1, z2) in the open quadrant z1 < 0 < z2 fixes the
// whole configuration through the volume constraints, and the two force
// balances then fix the outer tensions.
template <class T>
Fwd<T> forward_core(T z1, T z2, double t3, double kappa, double w1,
                    double w2) {
  using std::asinh;
  using std::cbrt;
  using std::sinh;
  using detail::asinh;
  using detail::cbrt;
  using detail::sinh;

  Fwd<T> out;
  const double w3 = w1 + w2;
  const T q1 = z1 * (z1 * z1 + 3.0);
  const T q2 = z2 * (z2 * z2 + 3.0);

  const T vol = (q2 - q1) * (1.0 / w3);
  if (!(value_of(vol) > 0.0)) return out;
  out.y = cbrt(vol);

  const T qz3 = (q1 * w2 + q2 * w1) * (0.5 / w3);
  out.z3 = 2.0 * sinh(asinh(qz3) * (1.0 / 3.0));

  const auto cos_of = [](const T& z) {
    return (1.0 - z * z) / (1.0 + z * z);
  };
  const auto sin_of = [](const T& z) { return 2.0 * z / (1.0 + z * z); };
  const T c1 = cos_of(z1), c2 = cos_of(z2), c3 = cos_of(out.z3);
  const T s1 = sin_of(z1), s2 = sin_of(z2), s3 = sin_of(out.z3);

  const T sp1 = s2 * c3 - c2 * s3;  // sin(alpha2 - alpha3)
  const T sp2 = s3 * c1 - c3 * s1;  // sin(alpha3 - alpha1)
  const T sp3 = s1 * c2 - c1 * s2;  // sin(alpha1 - alpha2)
  out.sin_phi3 = sp3;
  if (value_of(sp3) == 0.0) return out;

  const T ky = kappa * out.y;
  out.t1 = (t3 * sp1 + ky * s2) / sp3;
  out.t2 = (t3 * sp2 - ky * s1) / sp3;
  out.ok = true;
  return out;
}

}  // namespace

ForwardPoint forward_map(double z1, double z2, double t3, double kappa,
                         const ReducedVolumes& w) {
  validate(w);
  if (!(t3 > 0.0)) throw InvalidInput("t3 must be positive");
  if (!(kappa >= 0.0)) throw InvalidInput("kappa must be >= 0");
  if (!(z1 < 0.0) || !(z2 > 0.0))
    throw InvalidInput("scan chart requires z1 < 0 < z2");
  const Fwd<double> f = forward_core(z1, z2, t3, kappa, w.w1, w.w2);
  if (!f.ok || f.sin_phi3 == 0.0)
    throw InvalidInput("singular scan point: sin phi3 vanishes");
  return ForwardPoint{f.y, f.z3, f.t1, f.t2, f.sin_phi3};
}

std::array<double, 4> residual(const DoubletState& st, const Tensions& t,
                               const ReducedVolumes& w) {
  const auto zq = [](double z) { return z * (z * z + 3.0); };
  const double y3 = st.y * st.y * st.y;
  return {
      t.t1 * st.c(1) + t.t2 * st.c(2) + t.t3 * st.c(3) + t.kappa * st.y,
      t.t1 * st.s(1) + t.t2 * st.s(2) + t.t3 * st.s(3),
      zq(st.z3) - zq(st.z1) - w.w1 * y3,
      zq(st.z2) - zq(st.z3) - w.w2 * y3,
  };
}

namespace {

double scaled_residual(const DoubletState& st, const Tensions& t,
                       const ReducedVolumes& w) {
  const std::array<double, 4> r = residual(st, t, w);
  const double tmax = std::max(t.max_surface(), t.kappa * st.y);
  const double y3 = st.y * st.y * st.y;
  return std::max({std::fabs(r[0]) / tmax, std::fabs(r[1]) / tmax,
                   std::fabs(r[2]) / (w.w1 * y3),
                   std::fabs(r[3]) / (w.w2 * y3)});
}

}  // namespace

std::pair<double, double> hessian_tangent(const DoubletState& st,
                                          const Tensions& t) {
  double A = 0.0, B = 0.0, C = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const double tk = t.surface(k);
    const double ck = st.c(k), sk = st.s(k);
    const double m = tk * (2.0 + ck);
    A += m * ck * ck;
    B += m * ck * sk;
    C += m * sk * sk;
  }
  const double ky = t.kappa * st.y;
  const double two_pi = 2.0 * kPi;
  const double trace = two_pi * (A + C - 2.0 * ky);
  const double det =
      two_pi * two_pi * ((A - ky) * (C - ky) - B * B);
  return {trace, det};
}

PointClass classify(double trace, double det, double tension_sum) {
  const double scale = 2.0 * kPi * tension_sum;
  const double eps = 1e-9 * scale * scale;
  if (det > eps) return trace > 0.0 ? PointClass::LocalMin : PointClass::LocalMax;
  if (det < -eps) return PointClass::Saddle;
  return PointClass::Degenerate;
}

namespace {

struct NewtonResult {
  double z1, z2, norm;
  bool ok = false;
};

// Residual of the two recovered tensions against their targets, with the
// Jacobian in (z1, z2) assembled by dual numbers.
struct TensionSystem {
  double t1, t2, t3, kappa, w1, w2, tscale;

  bool eval(double z1, double z2, std::array<double, 2>& g) const {
    if (!(z1 < 0.0) || !(z2 > 0.0)) return false;
    const Fwd<double> f = forward_core(z1, z2, t3, kappa, w1, w2);
    if (!f.ok || !std::isfinite(f.t1) || !std::isfinite(f.t2)) return false;
    g = {f.t1 - t1, f.t2 - t2};
    return true;
  }

  bool eval_jac(double z1, double z2, std::array<double, 2>& g,
                std::array<std::array<double, 2>, 2>& jac) const {
    if (!(z1 < 0.0) || !(z2 > 0.0)) return false;
    const Fwd<Dual2> f = forward_core(Dual2::seed(z1, 0), Dual2::seed(z2, 1),
                                      t3, kappa, w1, w2);
    if (!f.ok || !std::isfinite(f.t1.v) || !std::isfinite(f.t2.v))
      return false;
    g = {f.t1.v - t1, f.t2.v - t2};
    jac = {{{f.t1.g[0], f.t1.g[1]}, {f.t2.g[0], f.t2.g[1]}}};
    return true;
  }

  double norm(const std::array<double, 2>& g) const {
    return std::max(std::fabs(g[0]), std::fabs(g[1])) / tscale;
  }
};

NewtonResult newton_from(const TensionSystem& sys, double z1, double z2,
                         const SolveOptions& opts) {
  NewtonResult res{z1, z2, std::numeric_limits<double>::infinity(), false};
  std::array<double, 2> g;
  std::array<std::array<double, 2>, 2> jac;
  if (!sys.eval_jac(z1, z2, g, jac)) return res;
  double norm = sys.norm(g);

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (norm <= opts.newton_tol) {
      res = {z1, z2, norm, true};
      return res;
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    if (det == 0.0 || !std::isfinite(det)) return res;
    const double dz1 = (g[0] * jac[1][1] - g[1] * jac[0][1]) / det;
    const double dz2 = (g[1] * jac[0][0] - g[0] * jac[1][0]) / det;

    // Damped update: halve until the residual decreases.
    double step = 1.0;
    bool moved = false;
    for (int halving = 0; halving < 30; ++halving) {
      const double n1 = z1 - step * dz1;
      const double n2 = z2 - step * dz2;
      std::array<double, 2> gt;
      if (sys.eval(n1, n2, gt) && sys.norm(gt) < norm) {
        z1 = n1;
        z2 = n2;
        norm = sys.norm(gt);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) return res;
    if (!sys.eval_jac(z1, z2, g, jac)) return res;
    norm = sys.norm(g);
  }
  if (norm <= opts.newton_tol) res = {z1, z2, norm, true};
  return res;
}

}  // namespace

std::vector<CriticalPoint> find_critical_points(const Tensions& t,
                                                const ReducedVolumes& w,
                                                const SolveOptions& opts) {
  validate(t);
  validate(w);
  if (opts.grid_n < 2) throw InvalidInput("start grid must be at least 2x2");

  const TensionSystem sys{t.t1,  t.t2, t.t3, t.kappa,
                          w.w1,  w.w2, std::max({t.t1, t.t2, t.t3})};
  const double cbw3 = std::cbrt(w.w3());

  struct Cluster {
    double z1, z2, z3, ys;  // dedup key, ys = y * w3^{1/3}
    DoubletState state;
    double res;
  };
  std::vector<Cluster> clusters;

  const int n = opts.grid_n;
  for (int i = 0; i < n; ++i) {
    const double a1 = -kPi + (i + 0.5) * kPi / n;
    for (int j = 0; j < n; ++j) {
      const double a2 = (j + 0.5) * kPi / n;
      const NewtonResult nr =
          newton_from(sys, std::tan(0.5 * a1), std::tan(0.5 * a2), opts);
      if (!nr.ok) continue;

      const Fwd<double> f =
          forward_core(nr.z1, nr.z2, t.t3, t.kappa, w.w1, w.w2);
      if (!f.ok) continue;
      const DoubletState st{nr.z1, nr.z2, f.z3, f.y};
      if (!(st.z1 < st.z3 && st.z3 < st.z2) || !(st.y > 0.0)) continue;
      const double res = scaled_residual(st, t, w);
      if (!(res <= opts.residual_tol)) continue;

      const Cluster cand{st.z1, st.z2, st.z3, st.y * cbw3, st, res};
      bool merged = false;
      for (Cluster& cl : clusters) {
        const double dist =
            std::max({std::fabs(cl.z1 - cand.z1), std::fabs(cl.z2 - cand.z2),
                      std::fabs(cl.z3 - cand.z3), std::fabs(cl.ys - cand.ys)});
        if (dist <= opts.dedup_radius) {
          if (cand.res < cl.res) cl = cand;
          merged = true;
          break;
        }
      }
      if (!merged) clusters.push_back(cand);
    }
  }

  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a,
                                                 const Cluster& b) {
    return a.z1 != b.z1 ? a.z1 < b.z1 : a.z2 < b.z2;
  });

  std::vector<CriticalPoint> points;
  points.reserve(clusters.size());
  for (const Cluster& cl : clusters) {
    CriticalPoint cp;
    cp.state = cl.state;
    cp.tensions = t;
    cp.pressures = PressurePair{-2.0 * t.t1 * cl.state.s(1) * cl.state.y,
                                2.0 * t.t2 * cl.state.s(2) * cl.state.y};
    cp.energy = energy(cl.state, t);
    std::tie(cp.hessian_trace, cp.hessian_det) = hessian_tangent(cl.state, t);
    cp.classification = classify(cp.hessian_trace, cp.hessian_det, t.sum());
    cp.residual = cl.res;
    points.push_back(cp);
  }
  return points;
}

FeasibilityReport feasibility_prefilter(const Tensions& t,
                                        const ReducedVolumes& w) {
  validate(t);
  validate(w);
  if (!(t.kappa > 0.0))
    throw InvalidInput("feasibility prefilter applies to kappa > 0");

  FeasibilityReport rep;
  const double ts = t.sum();
  rep.u = ts / t.kappa * std::cbrt(w.w3() / 2.0);
  rep.u_ok = rep.u >= 3.0;
  rep.y_min = std::cbrt(4.0 / w.w3());
  rep.M = detail::lemma_M();

  for (int k = 1; k <= 3; ++k) {
    const double others = t.surface(nxt(k)) + t.surface(prv(k));
    if (t.surface(k) >= others) {
      rep.dominant_k = k;
      const double u3 = rep.u * rep.u * rep.u;
      const double bound = ts * std::cosh(std::asinh(u3) / 3.0) /
                           std::sqrt(u3 * u3 + 1.0);
      rep.dominant_ok = others >= bound;
      break;
    }
  }
  rep.feasible = rep.u_ok && rep.dominant_ok;
  return rep;
}

double RelationReport::max_abs() const {
  double m = std::fabs(norm_identity);
  for (int i = 0; i < 3; ++i)
    m = std::max({m, std::fabs(cos_balance[i]), std::fabs(sin_balance[i]),
                  std::fabs(cos_law[i])});
  return m;
}

RelationReport relation_checks(const DoubletState& st, const Tensions& t) {
  const std::array<double, 3> phi = st.phi();
  const double ky = t.kappa * st.y;
  const double tmax = std::max(t.max_surface(), ky);

  RelationReport rep;
  double norm = t.t1 * t.t1 + t.t2 * t.t2 + t.t3 * t.t3 - ky * ky;
  for (int k = 1; k <= 3; ++k) {
    const double tk = t.surface(k);
    const double tp = t.surface(nxt(k));
    const double tm = t.surface(prv(k));
    const double cos_m = std::cos(phi[prv(k) - 1]);
    const double sin_m = std::sin(phi[prv(k) - 1]);
    const double cos_p = std::cos(phi[nxt(k) - 1]);
    const double sin_p = std::sin(phi[nxt(k) - 1]);
    rep.cos_balance[k - 1] =
        (tk + tp * cos_m + tm * cos_p + ky * st.c(k)) / tmax;
    rep.sin_balance[k - 1] =
        (tp * sin_m - tm * sin_p + ky * st.s(k)) / tmax;
    norm += 2.0 * tp * tm * std::cos(phi[k - 1]);
    rep.cos_law[k - 1] =
        std::cos(phi[k - 1]) -
        (tk * tk - tm * tm - tp * tp + ky * (2.0 * tk * st.c(k) + ky)) /
            (2.0 * tm * tp);
  }
  rep.norm_identity = norm / (tmax * tmax);
  return rep;
}

GlobalResult global_minimum(const Tensions& t, const ReducedVolumes& w,
                            const SolveOptions& opts) {
  validate(t);
  validate(w);

  GlobalResult out;
  for (int k = 1; k <= 3; ++k)
    out.boundary[k - 1] = boundary_point(k, t, w);

  if (t.kappa == 0.0) {
    const SurfaceSolution sol = solve_surface(t, w);
    if (sol.regime.interior()) {
      CriticalPoint cp;
      cp.state = *sol.state;
      cp.tensions = t;
      cp.pressures = *sol.pressures;
      cp.energy = sol.energy;
      std::tie(cp.hessian_trace, cp.hessian_det) =
          hessian_tangent(cp.state, t);
      cp.classification = classify(cp.hessian_trace, cp.hessian_det, t.sum());
      cp.residual = sol.residual;
      out.critical_points.push_back(cp);
    }
  } else {
    out.critical_points = find_critical_points(t, w, opts);
  }

  for (const CriticalPoint& cp : out.critical_points)
    if (cp.classification == PointClass::LocalMin) out.minima.push_back(cp);

  int best_k = 1;
  for (int k = 2; k <= 3; ++k)
    if (out.boundary[k - 1].energy < out.boundary[best_k - 1].energy)
      best_k = k;
  out.global = best_k == 1 ? GlobalTag::U1
                           : (best_k == 2 ? GlobalTag::U2 : GlobalTag::U3);
  out.global_energy = out.boundary[best_k - 1].energy;

  for (const CriticalPoint& cp : out.minima) {
    if (cp.energy < out.global_energy) {
      out.global_energy = cp.energy;
      out.global = GlobalTag::Interior;
    }
  }
  return out;
}

}  // namespace doublet
