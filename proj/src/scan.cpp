#include "doublet/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "doublet/detail/lemma.hpp"
#include "doublet/errors.hpp"

namespace doublet {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const std::to_chars_result r = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, r.ptr);
}

GlobalTag compare_global(double interior,
                         const std::array<double, 3>& boundary) {
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (boundary[k] < boundary[best]) best = k;
  if (interior < boundary[best]) return GlobalTag::Interior;
  return best == 0 ? GlobalTag::U1 : (best == 1 ? GlobalTag::U2 : GlobalTag::U3);
}

}  // namespace

std::vector<PhaseCell> scan_angle_grid(double t3, double kappa,
                                       const ReducedVolumes& w, int n) {
  validate(w);
  if (!(t3 > 0.0)) throw InvalidInput("t3 must be positive");
  if (!(kappa >= 0.0)) throw InvalidInput("kappa must be >= 0");
  if (n < 2) throw InvalidInput("scan grid must be at least 2x2");

  std::vector<PhaseCell> cells;
  cells.reserve(static_cast<size_t>(n) * n / 2);

  std::array<double, 3> base_boundary{};
  for (int i = 0; i < n; ++i) {
    const double a1 = -kPi + (i + 0.5) * kPi / n;
    const double z1 = std::tan(0.5 * a1);
    for (int j = 0; j < n; ++j) {
      const double a2 = (j + 0.5) * kPi / n;
      const double z2 = std::tan(0.5 * a2);

      ForwardPoint f;
      try {
        f = forward_map(z1, z2, t3, kappa, w);
      } catch (const InvalidInput&) {
        continue;
      }
      if (!(f.t1 > 0.0) || !(f.t2 > 0.0)) continue;
      if (!std::isfinite(f.t1) || !std::isfinite(f.t2)) continue;

      PhaseCell cell;
      cell.alpha1 = a1;
      cell.alpha2 = a2;
      cell.t1 = f.t1;
      cell.t2 = f.t2;
      cell.y = f.y;
      cell.z3 = f.z3;

      const DoubletState st{z1, z2, f.z3, f.y};
      const Tensions t{f.t1, f.t2, t3, kappa};
      std::tie(cell.trace, cell.det) = hessian_tangent(st, t);
      cell.classification = classify(cell.trace, cell.det, t.sum());

      const std::array<double, 3> phi = st.phi();
      cell.bulge1 = phi[0] > kPi;
      cell.bulge2 = phi[1] > kPi;

      cell.energy = energy(st, t);
      for (int k = 1; k <= 3; ++k)
        base_boundary[k - 1] = boundary_point(k, t, w).energy;
      cell.boundary_energy = base_boundary;
      cell.global = compare_global(cell.energy, cell.boundary_energy);
      cells.push_back(cell);
    }
  }
  return cells;
}

EqualVolumeThresholds thresholds_equal_volumes(double t3,
                                               const ReducedVolumes& w) {
  validate(w);
  if (!(t3 > 0.0)) throw InvalidInput("t3 must be positive");
  if (w.w1 != w.w2)
    throw InvalidInput(
        "closed-form thresholds require equal cell volumes (w1 = w2)");

  const double scale = t3 * std::cbrt(w.w3());
  const double r65 = std::sqrt(65.0);
  EqualVolumeThresholds th;
  th.kappa_bounded = 1.5 * scale;
  th.kappa_disappear = scale * (43.0 + 5.0 * r65) *
                       std::pow(25.0 * r65 - 201.0, 1.0 / 6.0) /
                       (4.0 * std::pow(14.0, 1.0 / 6.0));
  th.t_singular = 0.625 * t3 * (25.0 + 3.0 * r65);
  return th;
}

LemmaConstants lemma_constants() {
  return {detail::lemma_omega0(), detail::lemma_M()};
}

std::vector<BulgeBoundaryPoint> bulge_boundary_solve(double t2, double t3,
                                                     double kappa,
                                                     const ReducedVolumes& w,
                                                     int scan_points) {
  validate(w);
  if (!(t2 > 0.0) || !(t3 > 0.0)) throw InvalidInput("tensions must be positive");
  if (!(kappa > 0.0))
    throw InvalidInput("bulge boundary exists only with line tension");
  if (scan_points < 16) throw InvalidInput("scan_points too small");

  // On phi1 = pi the system collapses to one equation.  With z3 = -1/z2 the
  // interface volume constraint gives y exactly, the outer volume constraint
  // gives z1, and the sine balance gives t1; only the cosine balance
  //   G(z2) = t1 c1 + (t2 - t3) c2 + kappa y
  // remains, scanned over z2 = tan(beta/2), beta in (0, pi).
  const double cbw2 = std::cbrt(w.w2);
  struct Eval {
    double t1, z1, z3, y, G;
    bool ok;
  };
  const auto eval = [&](double z2) -> Eval {
    const double y = (1.0 + z2 * z2) / (z2 * cbw2);
    const double y3 = y * y * y;
    const double q1 =
        -(1.0 + 3.0 * z2 * z2) / (z2 * z2 * z2) - w.w1 * y3;
    const double z1 = cap_root(0.5 * q1);
    if (!(z1 < 0.0)) return {0, 0, 0, 0, 0, false};
    const double t1 = -(t2 - t3) * z2 * (1.0 + z1 * z1) /
                      ((1.0 + z2 * z2) * z1);
    const double c1 = (1.0 - z1 * z1) / (1.0 + z1 * z1);
    const double c2 = (1.0 - z2 * z2) / (1.0 + z2 * z2);
    const double G = t1 * c1 + (t2 - t3) * c2 + kappa * y;
    return {t1, z1, -1.0 / z2, y, G, std::isfinite(G)};
  };

  std::vector<BulgeBoundaryPoint> out;
  double prev_beta = 0.0;
  Eval prev{};
  bool have_prev = false;
  for (int i = 1; i < scan_points; ++i) {
    const double beta = i * kPi / scan_points;
    const Eval cur = eval(std::tan(0.5 * beta));
    if (!cur.ok) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev.G * cur.G <= 0.0 && prev.G != cur.G) {
      double lo = prev_beta, hi = beta;
      double glo = prev.G;
      for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const Eval em = eval(std::tan(0.5 * mid));
        if (!em.ok) break;
        if (glo * em.G <= 0.0)
          hi = mid;
        else {
          lo = mid;
          glo = em.G;
        }
      }
      const double z2 = std::tan(0.25 * (lo + hi));
      const Eval root = eval(z2);
      if (root.ok && root.t1 > 0.0 && std::isfinite(root.t1)) {
        BulgeBoundaryPoint pt;
        pt.t1 = root.t1;
        pt.state = DoubletState{root.z1, z2, root.z3, root.y};
        const Tensions t{root.t1, t2, t3, kappa};
        pt.energy = energy(pt.state, t);
        std::tie(pt.trace, pt.det) = hessian_tangent(pt.state, t);
        pt.classification = classify(pt.trace, pt.det, t.sum());
        const double tmax = std::max(t.max_surface(), kappa * root.y);
        pt.condition_residual = std::fabs(root.G) / tmax;
        const std::array<double, 4> r = residual(pt.state, t, w);
        const double y3 = root.y * root.y * root.y;
        pt.residual = std::max({std::fabs(r[0]) / tmax, std::fabs(r[1]) / tmax,
                                std::fabs(r[2]) / (w.w1 * y3),
                                std::fabs(r[3]) / (w.w2 * y3)});
        out.push_back(pt);
      }
    }
    prev = cur;
    prev_beta = beta;
    have_prev = true;
  }

  std::sort(out.begin(), out.end(),
            [](const BulgeBoundaryPoint& a, const BulgeBoundaryPoint& b) {
              return a.t1 > b.t1;
            });
  return out;
}

BulgeProbe max_bulge_probe() {
  BulgeProbe probe;
  probe.tensions = Tensions{3.544814028, 3.838944848, 1.730430441, 1.0};
  probe.volumes = ReducedVolumes{0.820008308, 0.179991692};

  const std::vector<CriticalPoint> pts =
      find_critical_points(probe.tensions, probe.volumes);
  bool found = false;
  double best_phi1 = -1.0;
  for (const CriticalPoint& cp : pts) {
    if (cp.classification != PointClass::LocalMin) continue;
    const double phi1 = cp.state.phi()[0];
    if (phi1 > best_phi1) {
      best_phi1 = phi1;
      probe.point = cp;
      found = true;
    }
  }
  if (!found)
    throw ConvergenceFailure("bulge probe found no local minimum");
  probe.phi1_deg = best_phi1 * 180.0 / kPi;
  return probe;
}

void write_scan_csv(std::ostream& os, const std::vector<PhaseCell>& cells) {
  std::string line;
  line.reserve(256);
  os << "alpha1,alpha2,t1,t2,y,z3,trace,det,class,bulge1,bulge2,"
        "E,E1,E2,E3,global\n";
  for (const PhaseCell& c : cells) {
    line.clear();
    append_double(line, c.alpha1);
    line += ',';
    append_double(line, c.alpha2);
    line += ',';
    append_double(line, c.t1);
    line += ',';
    append_double(line, c.t2);
    line += ',';
    append_double(line, c.y);
    line += ',';
    append_double(line, c.z3);
    line += ',';
    append_double(line, c.trace);
    line += ',';
    append_double(line, c.det);
    line += ',';
    line += to_string(c.classification);
    line += ',';
    line += c.bulge1 ? '1' : '0';
    line += ',';
    line += c.bulge2 ? '1' : '0';
    line += ',';
    append_double(line, c.energy);
    for (double e : c.boundary_energy) {
      line += ',';
      append_double(line, e);
    }
    line += ',';
    line += to_string(c.global);
    line += '\n';
    os << line;
  }
}

}  // namespace doublet
