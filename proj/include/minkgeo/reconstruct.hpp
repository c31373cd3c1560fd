#pragma once

// Curve reconstruction from invariants: fixed-step RK4 on the 12-dimensional
// system (point, T, N, B) driven by the Frenet or Cartan equations, with a
// conservation report for the six pairwise frame products.

#include <functional>
#include <vector>

#include "minkgeo/curve.hpp"

namespace mink {

enum class ReconstructKind { Admissible, Lightlike, SemiLightlike };

struct ReconstructionSpec {
  ReconstructKind kind = ReconstructKind::Admissible;
  // Admissible: kappa (> 0) and tau as functions of arclength.
  std::function<double(double)> kappa;
  std::function<double(double)> tau;
  // Lightlike / SemiLightlike: pseudo-torsion.
  std::function<double(double)> ctorsion;
  Vector3d p0 = Vector3d::Zero();
  Matrix3d frame0 = Matrix3d::Identity();  // columns (T, N, B)
  Ambient ambient = Ambient::Lorentz3;
  double s0 = 0.0, s1 = 1.0;
  double step = 1e-3;
};

struct ReconstructionResult {
  std::vector<double> params;
  std::vector<Vector3d> points;
  std::vector<Matrix3d> frames;          // columns (T, N, B)
  Vector6d initial_products;             // (TT, NN, BB, TN, TB, NB)
  double max_product_drift = 0.0;        // max deviation from initial_products
};

// The six pairwise products of the frame columns under the ambient metric.
Vector6d frame_products(Ambient amb, const Matrix3d& frame);

// Validates the initial frame for the kind, integrates, and reports.
ReconstructionResult reconstruct_curve(const ReconstructionSpec& spec);

}  // namespace mink
