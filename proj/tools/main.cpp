#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "doublet/errors.hpp"
#include "doublet/geometry.hpp"
#include "doublet/infer.hpp"
#include "doublet/line.hpp"
#include "doublet/oracle.hpp"
#include "doublet/pressure.hpp"
#include "doublet/scan.hpp"
#include "doublet/surface.hpp"
#include "doublet/svg.hpp"

using nlohmann::json;

namespace {

using namespace doublet;

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr double kDeg = 180.0 / kPi;

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Interior: return "interior";
    case Regime::Internalize1: return "internalize-1";
    case Regime::Internalize2: return "internalize-2";
    default: return "externalize";
  }
}

std::string json_state(const DoubletState& st) {
  std::string s = "{\"z\":[" + fmt(st.z1) + "," + fmt(st.z2) + "," +
                  fmt(st.z3) + "],\"y\":" + fmt(st.y) +
                  ",\"h\":" + fmt(st.h()) + ",\"x\":[" + fmt(st.x(1)) + "," +
                  fmt(st.x(2)) + "," + fmt(st.x(3)) + "],\"alpha_deg\":[" +
                  fmt(st.alpha(1) * kDeg) + "," + fmt(st.alpha(2) * kDeg) +
                  "," + fmt(st.alpha(3) * kDeg) + "]";
  const std::array<double, 3> phi = st.phi();
  s += ",\"phi_deg\":[" + fmt(phi[0] * kDeg) + "," + fmt(phi[1] * kDeg) +
       "," + fmt(phi[2] * kDeg) + "]}";
  return s;
}

std::string json_point(const CriticalPoint& cp) {
  return "{\"state\":" + json_state(cp.state) +
         ",\"pressures\":{\"P1\":" + fmt(cp.pressures.P1) +
         ",\"P2\":" + fmt(cp.pressures.P2) +
         ",\"P3\":" + fmt(cp.pressures.P3()) +
         "},\"energy\":" + fmt(cp.energy) +
         ",\"hessian\":{\"trace\":" + fmt(cp.hessian_trace) +
         ",\"det\":" + fmt(cp.hessian_det) + "},\"classification\":\"" +
         to_string(cp.classification) + "\",\"residual\":" +
         fmt(cp.residual) + "}";
}

std::string json_boundary(const BoundaryState& b) {
  return "{\"which\":" + std::to_string(b.which) + ",\"x\":[" + fmt(b.x1) +
         "," + fmt(b.x2) + "," + fmt(b.x3) +
         "],\"energy\":" + fmt(b.energy) + "}";
}

std::string json_inputs(const Tensions& t, const ReducedVolumes& w) {
  return "{\"t1\":" + fmt(t.t1) + ",\"t2\":" + fmt(t.t2) +
         ",\"t3\":" + fmt(t.t3) + ",\"kappa\":" + fmt(t.kappa) +
         ",\"w1\":" + fmt(w.w1) + ",\"w2\":" + fmt(w.w2) + "}";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidInput("cannot open output file: " + path);
  os << text;
}

/// Scaled max-norm of the force/volume residuals, as reported by solvers.
double scaled_residual(const DoubletState& st, const Tensions& t,
                       const ReducedVolumes& w) {
  const std::array<double, 4> r = residual(st, t, w);
  const double tmax = std::max(t.max_surface(), t.kappa * st.y);
  const double y3 = st.y * st.y * st.y;
  return std::max({std::fabs(r[0]) / tmax, std::fabs(r[1]) / tmax,
                   std::fabs(r[2]) / (w.w1 * y3),
                   std::fabs(r[3]) / (w.w2 * y3)});
}

// ---------------------------------------------------------------------------
// Shared argument bag with NaN/empty sentinels so a JSON config file can fill
// whatever the flags left unset (flags win).

struct Args {
  double t1 = NAN, t2 = NAN, t3 = NAN, kappa = NAN;
  double w1 = NAN, w2 = NAN;
  double P1 = NAN, P2 = NAN;
  double phi1_deg = NAN, phi2_deg = NAN, phi3_deg = NAN;
  double r1 = NAN, r2 = NAN, r3 = NAN;
  double c1 = NAN, c2 = NAN, c3 = NAN;
  int n = -1, points = -1, nx = -1, nh = -1;
  std::string law;
  std::string config;
  std::string out;
  bool verify = false;
};

void merge_config(Args& a) {
  if (a.config.empty()) return;
  std::ifstream is(a.config);
  if (!is) throw InvalidInput("cannot open config file: " + a.config);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config parse error: ") + e.what());
  }
  const auto num = [&](const char* key, double& slot) {
    if (std::isnan(slot) && j.contains(key)) slot = j.at(key).get<double>();
  };
  const auto integer = [&](const char* key, int& slot) {
    if (slot < 0 && j.contains(key)) slot = j.at(key).get<int>();
  };
  const auto str = [&](const char* key, std::string& slot) {
    if (slot.empty() && j.contains(key))
      slot = j.at(key).get<std::string>();
  };
  num("t1", a.t1);
  num("t2", a.t2);
  num("t3", a.t3);
  num("kappa", a.kappa);
  num("w1", a.w1);
  num("w2", a.w2);
  num("P1", a.P1);
  num("P2", a.P2);
  num("phi1_deg", a.phi1_deg);
  num("phi2_deg", a.phi2_deg);
  num("phi3_deg", a.phi3_deg);
  num("r1", a.r1);
  num("r2", a.r2);
  num("r3", a.r3);
  num("c1", a.c1);
  num("c2", a.c2);
  num("c3", a.c3);
  integer("n", a.n);
  integer("points", a.points);
  integer("nx", a.nx);
  integer("nh", a.nh);
  str("law", a.law);
  str("out", a.out);
  if (!a.verify && j.contains("verify")) a.verify = j.at("verify").get<bool>();
}

double req(double v, const char* name) {
  if (std::isnan(v))
    throw InvalidInput(std::string("missing required value: ") + name);
  return v;
}

Tensions tensions_from(const Args& a, bool need_kappa) {
  Tensions t{req(a.t1, "t1"), req(a.t2, "t2"), req(a.t3, "t3"),
             std::isnan(a.kappa) ? 0.0 : a.kappa};
  if (need_kappa && !(t.kappa > 0.0))
    throw InvalidInput("this command requires kappa > 0");
  return t;
}

ReducedVolumes volumes_from(const Args& a) {
  return ReducedVolumes{req(a.w1, "w1"), req(a.w2, "w2")};
}

// ---------------------------------------------------------------------------
// Verification passes: recompute physics from the emitted numbers only.

void verify_solve_document(const std::string& text) {
  const json j = json::parse(text);
  const json& in = j.at("inputs");
  const Tensions t{in.at("t1"), in.at("t2"), in.at("t3"), in.at("kappa")};
  const ReducedVolumes w{in.at("w1"), in.at("w2")};

  double worst = 0.0;
  for (const json& p : j.at("critical_points")) {
    const json& st = p.at("state");
    const DoubletState s{st.at("z")[0], st.at("z")[1], st.at("z")[2],
                         st.at("y")};
    worst = std::max(worst, scaled_residual(s, t, w));
  }
  for (const json& b : j.at("boundary")) {
    const double e =
        kPi * (t.t1 * std::pow(double(b.at("x")[0]), 2) +
               t.t2 * std::pow(double(b.at("x")[1]), 2) +
               t.t3 * std::pow(double(b.at("x")[2]), 2));
    const double emitted = b.at("energy");
    worst = std::max(worst,
                     std::fabs(e - emitted) / std::max(1.0, std::fabs(emitted)));
  }
  if (worst > 1e-9)
    throw VerifyError("verification failed: residual " + fmt(worst));
  std::cerr << "verify: ok (max residual " << fmt(worst) << ")\n";
}

void verify_pressure_document(const std::string& text) {
  const json j = json::parse(text);
  const json& in = j.at("inputs");
  const Tensions t{in.at("t1"), in.at("t2"), in.at("t3"), 0.0};
  const json& p = j.at("point");
  const json& st = p.at("state");
  const double h = st.at("h");
  const double x1 = st.at("x")[0], x2 = st.at("x")[1], x3 = st.at("x")[2];
  const double P1 = p.at("pressures").at("P1");
  const double P2 = p.at("pressures").at("P2");
  const double P3 = p.at("pressures").at("P3");
  const double scale = std::max(std::fabs(P1), std::fabs(P2));

  double worst =
      std::fabs(4.0 * t.t1 * x1 / (h * h + x1 * x1) + P1) / scale;
  worst = std::max(
      worst, std::fabs(4.0 * t.t2 * x2 / (h * h + x2 * x2) - P2) / scale);
  worst = std::max(
      worst, std::fabs(4.0 * t.t3 * x3 / (h * h + x3 * x3) - P3) / scale);

  const DoubletState s{st.at("z")[0], st.at("z")[1], st.at("z")[2],
                       st.at("y")};
  const ReducedVolumes w = volumes(s);
  const double w1 = p.at("volumes").at("w1");
  const double w2 = p.at("volumes").at("w2");
  worst = std::max(worst, std::fabs(w.w1 - w1) / w1);
  worst = std::max(worst, std::fabs(w.w2 - w2) / w2);

  if (worst > 1e-9)
    throw VerifyError("verification failed: residual " + fmt(worst));
  std::cerr << "verify: ok (max residual " << fmt(worst) << ")\n";
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void cmd_solve_volumes(Args& a, const char* name, bool need_kappa) {
  merge_config(a);
  const Tensions t = tensions_from(a, need_kappa);
  const ReducedVolumes w = volumes_from(a);
  const GlobalResult gr = global_minimum(t, w);

  std::string s = "{\"command\":\"";
  s += name;
  s += "\",\"inputs\":" + json_inputs(t, w);
  if (t.kappa == 0.0) {
    const TensionRegime r = classify_regime(t);
    s += ",\"regime\":\"";
    s += regime_name(r.label);
    s += "\",\"on_threshold\":";
    s += r.on_boundary ? "true" : "false";
  } else {
    s += ",\"regime\":\"line\"";
  }
  s += ",\"critical_points\":[";
  for (size_t i = 0; i < gr.critical_points.size(); ++i) {
    if (i) s += ',';
    s += json_point(gr.critical_points[i]);
  }
  s += "],\"boundary\":[";
  for (int k = 0; k < 3; ++k) {
    if (k) s += ',';
    s += json_boundary(gr.boundary[k]);
  }
  s += "],\"global\":\"";
  s += to_string(gr.global);
  s += "\",\"global_energy\":" + fmt(gr.global_energy) + "}\n";

  if (a.verify) verify_solve_document(s);
  write_output(s, a.out);
}

void cmd_solve_pressures(Args& a) {
  merge_config(a);
  Tensions t{req(a.t1, "t1"), req(a.t2, "t2"), req(a.t3, "t3"), 0.0};
  if (!std::isnan(a.kappa) && a.kappa != 0.0)
    throw InvalidInput("pressure solve is defined for kappa = 0");
  const PressureProblem prob{t, req(a.P1, "P1"), req(a.P2, "P2")};
  const DoubletState st = solve_pressure(prob);
  const ReducedVolumes w = volumes(st);

  CriticalPoint cp;
  cp.state = st;
  cp.tensions = t;
  cp.pressures = PressurePair{prob.P1, prob.P2};
  cp.energy = energy(st, t);
  std::tie(cp.hessian_trace, cp.hessian_det) = hessian_tangent(st, t);
  cp.classification = classify(cp.hessian_trace, cp.hessian_det, t.sum());
  cp.residual = scaled_residual(st, t, w);

  std::string s =
      "{\"command\":\"solve-pressures\",\"inputs\":{\"t1\":" + fmt(t.t1) +
      ",\"t2\":" + fmt(t.t2) + ",\"t3\":" + fmt(t.t3) +
      ",\"P1\":" + fmt(prob.P1) + ",\"P2\":" + fmt(prob.P2) + "}";
  s += ",\"point\":{\"state\":" + json_state(st) +
       ",\"volumes\":{\"w1\":" + fmt(w.w1) + ",\"w2\":" + fmt(w.w2) +
       "},\"pressures\":{\"P1\":" + fmt(prob.P1) +
       ",\"P2\":" + fmt(prob.P2) + ",\"P3\":" + fmt(prob.P1 - prob.P2) +
       "},\"energy\":" + fmt(cp.energy) +
       ",\"hessian\":{\"trace\":" + fmt(cp.hessian_trace) +
       ",\"det\":" + fmt(cp.hessian_det) + "},\"classification\":\"" +
       to_string(cp.classification) + "\",\"residual\":" +
       fmt(cp.residual) + "}}\n";

  if (a.verify) verify_pressure_document(s);
  write_output(s, a.out);
}

void cmd_scan(Args& a) {
  merge_config(a);
  const double t3 = req(a.t3, "t3");
  const double kappa = std::isnan(a.kappa) ? 0.0 : a.kappa;
  const ReducedVolumes w = volumes_from(a);
  const int n = a.n < 0 ? 256 : a.n;
  const std::vector<PhaseCell> cells = scan_angle_grid(t3, kappa, w, n);

  std::ostringstream os;
  write_scan_csv(os, cells);
  write_output(os.str(), a.out);
}

void cmd_bulge_boundary(Args& a) {
  merge_config(a);
  const double t2 = req(a.t2, "t2");
  const double t3 = req(a.t3, "t3");
  const double kappa = req(a.kappa, "kappa");
  const ReducedVolumes w = volumes_from(a);
  const int pts = a.points < 0 ? 4096 : a.points;
  const std::vector<BulgeBoundaryPoint> sols =
      bulge_boundary_solve(t2, t3, kappa, w, pts);

  std::string s =
      "{\"command\":\"bulge-boundary\",\"inputs\":{\"t2\":" + fmt(t2) +
      ",\"t3\":" + fmt(t3) + ",\"kappa\":" + fmt(kappa) +
      ",\"w1\":" + fmt(w.w1) + ",\"w2\":" + fmt(w.w2) +
      "},\"solutions\":[";
  for (size_t i = 0; i < sols.size(); ++i) {
    const BulgeBoundaryPoint& b = sols[i];
    if (i) s += ',';
    s += "{\"t1\":" + fmt(b.t1) + ",\"state\":" + json_state(b.state) +
         ",\"energy\":" + fmt(b.energy) +
         ",\"hessian\":{\"trace\":" + fmt(b.trace) +
         ",\"det\":" + fmt(b.det) + "},\"classification\":\"" +
         to_string(b.classification) +
         "\",\"condition_residual\":" + fmt(b.condition_residual) +
         ",\"residual\":" + fmt(b.residual) + "}";
  }
  s += "]}\n";
  write_output(s, a.out);
}

void cmd_max_bulge_probe(Args& a) {
  merge_config(a);
  const BulgeProbe probe = max_bulge_probe();
  std::string s =
      "{\"command\":\"max-bulge-probe\",\"inputs\":" +
      json_inputs(probe.tensions, probe.volumes) +
      ",\"point\":" + json_point(probe.point) +
      ",\"phi1_deg\":" + fmt(probe.phi1_deg) + "}\n";
  write_output(s, a.out);
}

void cmd_infer(Args& a) {
  merge_config(a);
  const bool angles = !std::isnan(a.phi1_deg) || !std::isnan(a.phi2_deg) ||
                      !std::isnan(a.phi3_deg);
  const bool radii = !std::isnan(a.r1) || !std::isnan(a.r2) ||
                     !std::isnan(a.r3) || !std::isnan(a.c1) ||
                     !std::isnan(a.c2) || !std::isnan(a.c3);
  if (angles == radii)
    throw InvalidInput("pass either junction angles or radii/centers");

  std::string s;
  if (angles) {
    const double p1 = req(a.phi1_deg, "phi1_deg") / kDeg;
    const double p2 = req(a.phi2_deg, "phi2_deg") / kDeg;
    const double p3 = req(a.phi3_deg, "phi3_deg") / kDeg;
    const std::string law = a.law.empty() ? "all" : a.law;

    const auto law_of = [](const std::string& name) {
      if (name == "sine") return AngleLaw::Sine;
      if (name == "perimeter-sine") return AngleLaw::PerimeterSine;
      if (name == "perimeter-cosine") return AngleLaw::PerimeterCosine;
      if (name == "half-angle") return AngleLaw::HalfAngle;
      if (name == "cotangent") return AngleLaw::Cotangent;
      throw InvalidInput("unknown law: " + name);
    };
    const auto result_json = [](const InferenceResult& r) {
      return "{\"tensions\":[" + fmt(r.tensions[0]) + "," +
             fmt(r.tensions[1]) + "," + fmt(r.tensions[2]) +
             "],\"min_sin_phi\":" + fmt(r.min_sin_phi) + "}";
    };

    s = "{\"command\":\"infer\",\"mode\":\"angles\",\"phi_deg\":[" +
        fmt(a.phi1_deg) + "," + fmt(a.phi2_deg) + "," + fmt(a.phi3_deg) +
        "]";
    if (law == "all") {
      static const AngleLaw kLaws[] = {
          AngleLaw::Sine, AngleLaw::PerimeterSine, AngleLaw::PerimeterCosine,
          AngleLaw::HalfAngle, AngleLaw::Cotangent};
      s += ",\"laws\":{";
      double dev = 0.0;
      std::array<double, 3> first{};
      for (int i = 0; i < 5; ++i) {
        const InferenceResult r = infer_from_angles(p1, p2, p3, kLaws[i]);
        if (i == 0)
          first = r.tensions;
        else
          for (int k = 0; k < 3; ++k)
            dev = std::max(dev,
                           std::fabs(r.tensions[k] - first[k]) / first[k]);
        if (i) s += ',';
        s += std::string("\"") + to_string(kLaws[i]) +
             "\":" + result_json(r);
      }
      s += "},\"max_pairwise_deviation\":" + fmt(dev) + "}\n";
    } else {
      s += ",\"law\":\"" + law +
           "\",\"result\":" + result_json(infer_from_angles(p1, p2, p3,
                                                            law_of(law))) +
           "}\n";
    }
  } else {
    std::optional<double> r3, c3;
    if (!std::isnan(a.r3)) r3 = a.r3;
    if (!std::isnan(a.c3)) c3 = a.c3;
    const RadiiInference r = infer_from_radii(
        req(a.r1, "r1"), req(a.r2, "r2"), r3, req(a.c1, "c1"),
        req(a.c2, "c2"), c3);
    s = "{\"command\":\"infer\",\"mode\":\"radii\",\"t1\":" + fmt(r.t1) +
        ",\"t2\":" + fmt(r.t2) + ",\"t3\":";
    s += r.t3 ? fmt(*r.t3) : "null";
    s += ",\"note\":\"" + r.note + "\"}\n";
  }
  write_output(s, a.out);
}

void cmd_oracle_check(Args& a) {
  merge_config(a);
  const Tensions t = tensions_from(a, false);
  const ReducedVolumes w = volumes_from(a);
  OracleGrid grid;
  if (a.nx > 0) grid.nx = a.nx;
  if (a.nh > 0) grid.nh = a.nh;

  const GlobalResult solver = global_minimum(t, w);
  const OracleResult oracle = oracle_minimize(t, w, grid);
  const double gap = std::fabs(solver.global_energy - oracle.global_energy) /
                     std::max(1.0, std::fabs(oracle.global_energy));

  std::string s =
      "{\"command\":\"oracle-check\",\"inputs\":" + json_inputs(t, w) +
      ",\"solver\":{\"global\":\"" + to_string(solver.global) +
      "\",\"energy\":" + fmt(solver.global_energy) +
      "},\"oracle\":{\"interior\":{\"x3\":" + fmt(oracle.interior_x3) +
      ",\"h\":" + fmt(oracle.interior_h) +
      ",\"energy\":" + fmt(oracle.interior_energy) +
      "},\"boundary\":{\"which\":" + std::to_string(oracle.boundary.which) +
      ",\"energy\":" + fmt(oracle.boundary.energy) +
      "},\"global_energy\":" + fmt(oracle.global_energy) +
      ",\"interior_is_global\":";
  s += oracle.interior_is_global ? "true" : "false";
  s += "},\"relative_gap\":" + fmt(gap) + "}\n";
  write_output(s, a.out);
}

void cmd_svg(Args& a) {
  merge_config(a);
  const Tensions t = tensions_from(a, false);
  const ReducedVolumes w = volumes_from(a);
  const GlobalResult gr = global_minimum(t, w);

  std::string svg;
  const CriticalPoint* best = nullptr;
  for (const CriticalPoint& cp : gr.minima)
    if (!best || cp.energy < best->energy) best = &cp;
  if (best) {
    svg = render_svg(best->state);
  } else {
    int k = gr.global == GlobalTag::U1 ? 1 : (gr.global == GlobalTag::U2 ? 2 : 3);
    svg = render_svg(gr.boundary[k - 1]);
  }
  write_output(svg, a.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium configurations of a two-cell doublet"};
  app.require_subcommand(1);

  Args a;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", a.config, "JSON config file (flags override)");
    cmd->add_option("--out", a.out, "output path (default stdout)");
  };
  const auto add_tensions = [&](CLI::App* cmd, bool with_kappa) {
    cmd->add_option("--t1", a.t1, "tension of the outer cap of cell 1");
    cmd->add_option("--t2", a.t2, "tension of the outer cap of cell 2");
    cmd->add_option("--t3", a.t3, "tension of the interface");
    if (with_kappa)
      cmd->add_option("--kappa", a.kappa, "line tension (default 0)");
  };
  const auto add_volumes = [&](CLI::App* cmd) {
    cmd->add_option("--w1", a.w1, "reduced volume of cell 1 (6V/pi)");
    cmd->add_option("--w2", a.w2, "reduced volume of cell 2 (6V/pi)");
  };

  CLI::App* sv = app.add_subcommand(
      "solve-volumes", "equilibrium for given tensions and volumes");
  add_tensions(sv, true);
  add_volumes(sv);
  sv->add_flag("--verify", a.verify, "re-check residuals from the output");
  add_common(sv);
  sv->callback([&] { cmd_solve_volumes(a, "solve-volumes", false); });

  CLI::App* sl = app.add_subcommand(
      "solve-line", "equilibria with line tension (requires kappa > 0)");
  add_tensions(sl, true);
  add_volumes(sl);
  sl->add_flag("--verify", a.verify, "re-check residuals from the output");
  add_common(sl);
  sl->callback([&] { cmd_solve_volumes(a, "solve-line", true); });

  CLI::App* sp = app.add_subcommand(
      "solve-pressures", "geometry for given tensions and cell pressures");
  add_tensions(sp, false);
  sp->add_option("--P1", a.P1, "pressure of cell 1");
  sp->add_option("--P2", a.P2, "pressure of cell 2");
  sp->add_flag("--verify", a.verify, "re-check residuals from the output");
  add_common(sp);
  sp->callback([&] { cmd_solve_pressures(a); });

  CLI::App* sc = app.add_subcommand(
      "scan", "map the (t1,t2) plane over an angle grid; CSV output");
  sc->add_option("--t3", a.t3, "tension of the interface");
  sc->add_option("--kappa", a.kappa, "line tension (default 0)");
  add_volumes(sc);
  sc->add_option("--n", a.n, "grid size per axis (default 256)");
  add_common(sc);
  sc->callback([&] { cmd_scan(a); });

  CLI::App* bb = app.add_subcommand(
      "bulge-boundary", "solve the bulge onset surface phi1 = pi");
  bb->add_option("--t2", a.t2, "tension of the outer cap of cell 2");
  bb->add_option("--t3", a.t3, "tension of the interface");
  bb->add_option("--kappa", a.kappa, "line tension (> 0)");
  add_volumes(bb);
  bb->add_option("--points", a.points, "scan resolution (default 4096)");
  add_common(bb);
  bb->callback([&] { cmd_bulge_boundary(a); });

  CLI::App* mb = app.add_subcommand(
      "max-bulge-probe", "reference configuration of maximal bulging");
  add_common(mb);
  mb->callback([&] { cmd_max_bulge_probe(a); });

  CLI::App* in = app.add_subcommand(
      "infer", "tensions from junction angles or from radii/centers");
  in->add_option("--phi1-deg", a.phi1_deg, "junction angle phi1 (degrees)");
  in->add_option("--phi2-deg", a.phi2_deg, "junction angle phi2 (degrees)");
  in->add_option("--phi3-deg", a.phi3_deg, "junction angle phi3 (degrees)");
  in->add_option("--law", a.law,
                 "sine|perimeter-sine|perimeter-cosine|half-angle|"
                 "cotangent|all (default all)");
  in->add_option("--r1", a.r1, "radius of cap 1 (sign ignored)");
  in->add_option("--r2", a.r2, "radius of cap 2 (sign ignored)");
  in->add_option("--r3", a.r3, "radius of the interface (omit when flat)");
  in->add_option("--c1", a.c1, "axial center position of cap 1");
  in->add_option("--c2", a.c2, "axial center position of cap 2");
  in->add_option("--c3", a.c3, "axial center position of the interface");
  add_common(in);
  in->callback([&] { cmd_infer(a); });

  CLI::App* oc = app.add_subcommand(
      "oracle-check", "compare solver energy against the brute-force oracle");
  add_tensions(oc, true);
  add_volumes(oc);
  oc->add_option("--nx", a.nx, "oracle grid size in x3 (default 200)");
  oc->add_option("--nh", a.nh, "oracle grid size in h (default 200)");
  add_common(oc);
  oc->callback([&] { cmd_oracle_check(a); });

  CLI::App* sg = app.add_subcommand(
      "svg", "cross-section schematic of the solved configuration");
  add_tensions(sg, true);
  add_volumes(sg);
  add_common(sg);
  sg->callback([&] { cmd_svg(a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const doublet::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const doublet::ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
