#pragma once

// Helix detection and classification: constant tau/kappa ratio (admissible
// curves) or constant pseudo-torsion (lightlike curves), helical axis, and --
// when curvature and torsion are themselves constant -- the standard-family
// label.

#include <optional>
#include <string>

#include "minkgeo/curve.hpp"
#include "minkgeo/transform.hpp"

namespace mink {

struct HelixReport {
  bool is_helix = false;
  std::optional<Vector3d> axis;
  std::optional<CausalClass> axis_class;
  std::optional<Conjugacy> conjugacy;  // hyperbolic / elliptic / parabolic
  std::string family;                  // "beta1".."beta6", "gamma1".."gamma3", or ""
  double invariant_ratio = 0.0;        // tau/kappa, or the pseudo-torsion
  double kappa_mean = 0.0, tau_mean = 0.0;
};

// Samples the invariants across the curve's domain. Requires the curve to be
// unit-speed admissible or arc-photon lightlike throughout.
HelixReport helix_classify(const CurveModel& c, int samples = 33, double tol = 1e-6);

}  // namespace mink
