#pragma once

#include <array>
#include <optional>
#include <string>

#include "doublet/geometry.hpp"
#include "doublet/line.hpp"

namespace doublet {

/// The five equivalent tension-from-angles laws.  All give proportional
/// results for junction angles in (0, pi) summing to 2 pi; they differ in
/// conditioning near degenerate angles.
enum class AngleLaw { Sine, PerimeterSine, PerimeterCosine, HalfAngle,
                      Cotangent };

const char* to_string(AngleLaw law);

struct InferenceResult {
  std::array<double, 3> tensions{};  // normalized to t1 + t2 + t3 = 1
  double min_sin_phi = 0.0;          // conditioning indicator
};

/// Tensions up to scale from the three junction angles (radians), all in
/// (0, pi) and summing to 2 pi within 1e-9.
InferenceResult infer_from_angles(double phi1, double phi2, double phi3,
                                  AngleLaw law);

/// Tension ratios from the cap radii and axial sphere-center positions:
///   t_k proportional to |r_k| |C_{k+1} - C_{k-1}|.
/// Normalized to t3 = 1 when the interface is curved.  A flat interface has
/// no finite (r3, C3); the limit leaves only t1 : t2 = |r1| : |r2|, returned
/// with t3 empty and an explanatory note.
struct RadiiInference {
  double t1 = 0.0;
  double t2 = 0.0;
  std::optional<double> t3;
  std::string note;
};
RadiiInference infer_from_radii(double r1, double r2,
                                std::optional<double> r3, double C1,
                                double C2, std::optional<double> C3);

/// With line tension the force balances no longer pin the tensions up to one
/// scale: at a frozen equilibrium geometry the solutions form the plane
///   (t1, t2, t3, kappa) -> lambda (t1, t2, t3, kappa)
///                          + mu (sin phi1, sin phi2, sin phi3, 0).
/// The mu direction satisfies both balances identically, so every member
/// reproduces the same configuration; lambda = 0 recovers the law-of-sines
/// tensions of a doublet without line tension.
struct FamilyMember {
  Tensions tensions;
  bool positive = false;        // all surface tensions > 0, kappa >= 0
  double balance_residual = 0.0;  // scaled force-balance residual
  double trace = 0.0;
  double det = 0.0;
  PointClass classification = PointClass::Degenerate;
};

struct AmbiguityFamily {
  Tensions base;
  DoubletState state;
  std::array<double, 4> direction{};  // (sin phi1, sin phi2, sin phi3, 0)

  FamilyMember member(double lambda, double mu) const;
  /// Positivity bound: for fixed mu, members need lambda > lambda_min(mu).
  double lambda_min(double mu) const;
};

AmbiguityFamily ambiguity_family(const CriticalPoint& point);

}  // namespace doublet
