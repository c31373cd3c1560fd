#pragma once

// Total-umbilicity detector and classifier.  A totally umbilic patch (shape
// operator scalar at every sample) lies in a plane or in a central quadric
// <p - c, p - c> = +r^2 or -r^2; the quadric data (c, r) is fitted from four
// samples by eliminating the quadratic terms, then verified on the whole grid.

#include "minkgeo/surface.hpp"

namespace mink {

enum class UmbilicShape {
  Plane,
  PositiveQuadrance,  // <p-c,p-c> = +r^2  (round sphere / de Sitter type)
  NegativeQuadrance,  // <p-c,p-c> = -r^2  (hyperbolic type)
};
const char* to_string(UmbilicShape s);

struct UmbilicReport {
  UmbilicShape shape = UmbilicShape::Plane;
  double max_umbilic_deviation = 0;  // max ||S - lambda I|| / max(1, ||S||)
  Vector3d center = Vector3d::Zero();  // zero for Plane
  double radius = 0;                   // 0 for Plane
  double signed_r2 = 0;                // fitted <p-c,p-c>; 0 for Plane
  double max_membership_residual = 0;  // quadric residual / plane incidence
  double center_consistency = 0;       // max ||p + N/lambda - c||
};

// Samples an n_u x n_v grid over the model's domain.  Throws
// precondition_error when any sample fails the umbilicity test.
UmbilicReport umbilic_surface_check(const SurfaceModel& m, int n_u = 9,
                                    int n_v = 9, double umbilic_tol = 1e-6);

}  // namespace mink
