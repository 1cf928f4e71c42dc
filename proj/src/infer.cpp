#include "doublet/infer.hpp"

#include <algorithm>
#include <cmath>

#include "doublet/errors.hpp"

namespace doublet {

using detail::nxt;
using detail::prv;

const char* to_string(AngleLaw law) {
  switch (law) {
    case AngleLaw::Sine: return "sine";
    case AngleLaw::PerimeterSine: return "perimeter-sine";
    case AngleLaw::PerimeterCosine: return "perimeter-cosine";
    case AngleLaw::HalfAngle: return "half-angle";
    default: return "cotangent";
  }
}

InferenceResult infer_from_angles(double phi1, double phi2, double phi3,
                                  AngleLaw law) {
  const std::array<double, 3> phi{phi1, phi2, phi3};
  for (double p : phi)
    if (!(p > 0.0) || !(p < kPi))
      throw InvalidInput("junction angles must lie strictly in (0, pi)");
  if (std::fabs(phi1 + phi2 + phi3 - 2.0 * kPi) > 1e-9)
    throw InvalidInput("junction angles must sum to 2 pi");

  std::array<double, 3> sn, cs, hc;  // sin, cos, cot(phi/2)
  for (int k = 0; k < 3; ++k) {
    sn[k] = std::sin(phi[k]);
    cs[k] = std::cos(phi[k]);
    hc[k] = 1.0 / std::tan(0.5 * phi[k]);
  }

  std::array<double, 3> t{};
  switch (law) {
    case AngleLaw::Sine:
      t = sn;
      break;
    case AngleLaw::PerimeterSine: {
      const double beta = (sn[0] + sn[1] - sn[2]) * (sn[1] + sn[2] - sn[0]) *
                          (sn[2] + sn[0] - sn[1]) / (sn[0] * sn[1] * sn[2]);
      for (int k = 0; k < 3; ++k)
        t[k] = beta / (4.0 * sn[(k + 1) % 3] * sn[(k + 2) % 3]);
      break;
    }
    case AngleLaw::PerimeterCosine:
      for (int k = 0; k < 3; ++k) {
        const double vp = 1.0 - cs[(k + 1) % 3];
        const double vm = 1.0 - cs[(k + 2) % 3];
        t[k] = 0.5 * (1.0 / vp + 1.0 / vm - (1.0 - cs[k]) / (vp * vm));
      }
      break;
    case AngleLaw::HalfAngle:
      for (int k = 0; k < 3; ++k) {
        const double sp = std::sin(0.5 * phi[(k + 1) % 3]);
        const double sm = std::sin(0.5 * phi[(k + 2) % 3]);
        const double sk = std::sin(0.5 * phi[k]);
        t[k] = 0.25 * (1.0 / (sp * sp) + 1.0 / (sm * sm) -
                       sk * sk / (sp * sp * sm * sm));
      }
      break;
    case AngleLaw::Cotangent:
      for (int k = 0; k < 3; ++k)
        t[k] = 0.5 * hc[k] * (hc[(k + 1) % 3] + hc[(k + 2) % 3]);
      break;
  }

  const double total = t[0] + t[1] + t[2];
  if (!(total > 0.0) || !std::isfinite(total))
    throw InvalidInput("angles do not yield positive tensions");
  InferenceResult res;
  for (int k = 0; k < 3; ++k) res.tensions[k] = t[k] / total;
  res.min_sin_phi = std::min({sn[0], sn[1], sn[2]});
  return res;
}

RadiiInference infer_from_radii(double r1, double r2,
                                std::optional<double> r3, double C1,
                                double C2, std::optional<double> C3) {
  if (!(r1 != 0.0) || !(r2 != 0.0))
    throw InvalidInput("outer cap radii must be nonzero");
  RadiiInference res;
  if (!r3 || !C3) {
    // Flat interface: the third radius and center recede to infinity and the
    // two center gaps |C2 - C3|, |C3 - C1| cancel in the ratio.
    const double scale = std::fabs(r2);
    res.t1 = std::fabs(r1) / scale;
    res.t2 = 1.0;
    res.note =
        "flat interface: only t1 : t2 is determined by the radii law";
    return res;
  }
  if (!(*r3 != 0.0)) throw InvalidInput("interface radius must be nonzero");

  const double v1 = std::fabs(r1) * std::fabs(C2 - *C3);
  const double v2 = std::fabs(r2) * std::fabs(*C3 - C1);
  const double v3 = std::fabs(*r3) * std::fabs(C1 - C2);
  if (!(v3 > 0.0))
    throw InvalidInput("coincident outer centers: ratios undefined");
  res.t1 = v1 / v3;
  res.t2 = v2 / v3;
  res.t3 = 1.0;
  return res;
}

FamilyMember AmbiguityFamily::member(double lambda, double mu) const {
  FamilyMember m;
  m.tensions = Tensions{lambda * base.t1 + mu * direction[0],
                        lambda * base.t2 + mu * direction[1],
                        lambda * base.t3 + mu * direction[2],
                        lambda * base.kappa};
  m.positive = m.tensions.t1 > 0.0 && m.tensions.t2 > 0.0 &&
               m.tensions.t3 > 0.0 && m.tensions.kappa >= 0.0;

  const double scale =
      std::max({std::fabs(m.tensions.t1), std::fabs(m.tensions.t2),
                std::fabs(m.tensions.t3),
                std::fabs(m.tensions.kappa) * state.y, 1e-300});
  double rc = m.tensions.kappa * state.y;
  double rs = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const double tk = k == 1 ? m.tensions.t1
                             : (k == 2 ? m.tensions.t2 : m.tensions.t3);
    rc += tk * state.c(k);
    rs += tk * state.s(k);
  }
  m.balance_residual = std::max(std::fabs(rc), std::fabs(rs)) / scale;
  std::tie(m.trace, m.det) = hessian_tangent(state, m.tensions);
  const double ssum = std::fabs(m.tensions.t1) + std::fabs(m.tensions.t2) +
                      std::fabs(m.tensions.t3);
  m.classification = classify(m.trace, m.det, ssum);
  return m;
}

double AmbiguityFamily::lambda_min(double mu) const {
  const std::array<double, 3> t{base.t1, base.t2, base.t3};
  double lo = 0.0;
  for (int k = 0; k < 3; ++k)
    lo = std::max(lo, -mu * direction[k] / t[k]);
  return lo;
}

AmbiguityFamily ambiguity_family(const CriticalPoint& point) {
  if (point.classification != PointClass::LocalMin)
    throw InvalidInput("ambiguity family is defined at a local minimum");
  AmbiguityFamily fam;
  fam.base = point.tensions;
  fam.state = point.state;
  const std::array<double, 3> phi = point.state.phi();
  fam.direction = {std::sin(phi[0]), std::sin(phi[1]), std::sin(phi[2]), 0.0};
  return fam;
}

}  // namespace doublet
