#include "doublet/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "doublet/errors.hpp"

namespace doublet {

double Tensions::max_surface() const { return std::max({t1, t2, t3}); }

double Tensions::surface(int k) const {
  switch ((k - 1) % 3 + 1) {
    case 1: return t1;
    case 2: return t2;
    default: return t3;
  }
}

double ReducedVolumes::g(int k) const {
  switch ((k - 1) % 3 + 1) {
    case 1: return w2;
    case 2: return w1;
    default: return -(w1 + w2);
  }
}

double ReducedVolumes::d(int k) const {
  const double gm = g(detail::prv(k));
  const double gp = g(detail::nxt(k));
  return (gm - gp) / (gm + gp);
}

void validate(const Tensions& t) {
  if (!(t.t1 > 0.0) || !(t.t2 > 0.0) || !(t.t3 > 0.0))
    throw InvalidInput("surface tensions must be positive");
  if (!(t.kappa >= 0.0) || !std::isfinite(t.kappa))
    throw InvalidInput("line tension must be finite and >= 0");
  if (!std::isfinite(t.t1) || !std::isfinite(t.t2) || !std::isfinite(t.t3))
    throw InvalidInput("surface tensions must be finite");
}

void validate(const ReducedVolumes& w) {
  if (!(w.w1 > 0.0) || !(w.w2 > 0.0) || !std::isfinite(w.w1) ||
      !std::isfinite(w.w2))
    throw InvalidInput("reduced volumes must be positive and finite");
}

double DoubletState::z(int k) const {
  switch ((k - 1) % 3 + 1) {
    case 1: return z1;
    case 2: return z2;
    default: return z3;
  }
}

double DoubletState::alpha(int k) const { return 2.0 * std::atan(z(k)); }

double DoubletState::c(int k) const {
  const double zk = z(k);
  return (1.0 - zk * zk) / (1.0 + zk * zk);
}

double DoubletState::s(int k) const {
  const double zk = z(k);
  return 2.0 * zk / (1.0 + zk * zk);
}

std::array<double, 3> DoubletState::phi() const {
  const double a1 = alpha(1), a2 = alpha(2), a3 = alpha(3);
  const double p1 = a2 - a3;
  const double p2 = a3 - a1;
  return {p1, p2, -(p1 + p2)};
}

std::optional<double> DoubletState::radius(int k) const {
  const double sk = s(k);
  if (sk == 0.0) return std::nullopt;
  return h() / sk;
}

std::optional<double> DoubletState::center(int k) const {
  const double xk = x(k);
  if (xk == 0.0) return std::nullopt;
  const double hh = h();
  return (xk * xk - hh * hh) / (2.0 * xk);
}

double cap_root(double q) { return 2.0 * std::sinh(std::asinh(q) / 3.0); }

DoubletState state_from_xh(double x1, double x2, double x3, double h) {
  if (!(h > 0.0)) throw InvalidInput("junction radius must be positive");
  if (!(x1 < x3 && x3 < x2))
    throw InvalidInput("cap ordering x1 < x3 < x2 violated");
  return DoubletState{x1 / h, x2 / h, x3 / h, 1.0 / h};
}

XH xh_from_state(const DoubletState& st) {
  const double h = st.h();
  return XH{st.z1 * h, st.z2 * h, st.z3 * h, h};
}

namespace {
inline double zq(double z) { return z * (z * z + 3.0); }
}  // namespace

ReducedVolumes volumes(const DoubletState& st) {
  const double y3 = st.y * st.y * st.y;
  return ReducedVolumes{(zq(st.z3) - zq(st.z1)) / y3,
                        (zq(st.z2) - zq(st.z3)) / y3};
}

double energy(const DoubletState& st, const Tensions& t) {
  const double h = st.h();
  const double quad =
      t.t1 * st.z1 * st.z1 + t.t2 * st.z2 * st.z2 + t.t3 * st.z3 * st.z3;
  return kPi * (h * h * (quad + t.sum()) + 2.0 * t.kappa * h);
}

double energy_xh(double x1, double x2, double x3, double h,
                 const Tensions& t) {
  return kPi * (t.t1 * x1 * x1 + t.t2 * x2 * x2 + t.t3 * x3 * x3 +
                t.sum() * h * h + 2.0 * t.kappa * h);
}

DoubletState parameterize_manifold(double x3, double h,
                                   const ReducedVolumes& w) {
  validate(w);
  if (!(h > 0.0)) throw InvalidInput("junction radius must be positive");
  const double h3 = h * h * h;
  const double q = x3 * (3.0 * h * h + x3 * x3);
  const double z1 = cap_root((q - w.w1) / (2.0 * h3));
  const double z2 = cap_root((q + w.w2) / (2.0 * h3));
  return DoubletState{z1, z2, x3 / h, 1.0 / h};
}

double boundary_psi(double x, const Tensions& t, const ReducedVolumes& w) {
  const auto cbrt_sq = [](double u) { return std::cbrt(u * u); };
  return t.t1 * cbrt_sq(x - w.w1) + t.t2 * cbrt_sq(x + w.w2) +
         t.t3 * cbrt_sq(x);
}

BoundaryState boundary_point(int k, const Tensions& t,
                             const ReducedVolumes& w) {
  validate(t);
  validate(w);
  const double c1 = std::cbrt(w.w1);
  const double c2 = std::cbrt(w.w2);
  const double c3 = std::cbrt(w.w3());
  BoundaryState b;
  b.which = (k - 1) % 3 + 1;
  switch (b.which) {
    case 1:  // cell 1 swallowed by cell 2
      b.x1 = 0.0, b.x2 = c3, b.x3 = c1;
      b.energy = kPi * (t.t2 * c3 * c3 + t.t3 * c1 * c1);
      break;
    case 2:  // cell 2 swallowed by cell 1
      b.x1 = -c3, b.x2 = 0.0, b.x3 = -c2;
      b.energy = kPi * (t.t1 * c3 * c3 + t.t3 * c2 * c2);
      break;
    default:  // separated cells
      b.x1 = -c1, b.x2 = c2, b.x3 = 0.0;
      b.energy = kPi * (t.t1 * c1 * c1 + t.t2 * c2 * c2);
      break;
  }
  return b;
}

ReducedVariables reduced_variables(const Tensions& t,
                                   const ReducedVolumes& w) {
  validate(t);
  validate(w);
  if (t.kappa == 0.0)
    throw InvalidInput("tension ratios tau_k undefined for kappa = 0");
  const double scale = std::cbrt(w.w3()) / t.kappa;
  return ReducedVariables{(w.w2 - w.w1) / w.w3(), t.t1 * scale, t.t2 * scale,
                          t.t3 * scale};
}

}  // namespace doublet
