#pragma once

// Frenet trihedron for unit-speed admissible curves in R^3 and L^3.
//
// Conventions (nu = ambient index, eps = <T,T>, eta = <N,N>):
//   T = alpha',  kappa = |alpha''| > 0,  N = alpha''/kappa,
//   B = (-1)^nu eps eta (T x N),
//   T' = kappa N,   N' = -eps eta kappa T + tau B,   B' = (-1)^(nu+1) eps tau N.

#include "minkgeo/curve.hpp"

namespace mink {

struct FrenetData {
  Vector3d T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
  int eps = 1;  // indicator of T
  int eta = 1;  // coindicator: indicator of N
};

FrenetData frenet_apparatus(const CurveModel& c, double s, double tol = 1e-6);

// Frame derivative under the Frenet system, for residual checks and
// reconstruction: columns of `frame` are (T, N, B).
Matrix3d frenet_rhs(const Matrix3d& frame, double kappa, double tau, int nu, int eps,
                    int eta);

}  // namespace mink
