#pragma once

// Cartan trihedron for lightlike (arc-photon) and semi-lightlike (unit-speed)
// curves in L^3.
//
// With eps = <T,T> and eta = <N,N> restricted to (eps,eta) in {(0,1),(1,0)}:
//   T = alpha',  N = alpha'',
//   B is the unique lightlike vector with <B,T> = -eta, <B,N> = -eps,
//   and (T,N,B) positively oriented; pseudo-torsion c = -<N',B>.
//
// When the orientation of (T,N) is repairable by reflecting the parameter
// (semi-lightlike case) this is done automatically and reported via
// `flipped`. On a lightlike curve with past-directed tangent no binormal
// satisfies both the products and det(T,N,B) > 0; the product-determined
// frame is returned with `positively_oriented = false` (the moving-frame
// equations hold either way).
// Cartan equations:
//   lightlike:       T' = N,  N' = c T + B,  B' = c N
//   semi-lightlike:  T' = N,  N' = c N,      B' = T - c B

#include "minkgeo/curve.hpp"

namespace mink {

struct CartanData {
  Vector3d T, N, B;
  double pseudo_torsion = 0.0;
  int eps = 0;
  int eta = 1;
  bool flipped = false;  // parameter was reflected to orient (T,N) positively
  bool positively_oriented = true;  // sign of det(T,N,B)
};

CartanData cartan_apparatus(const CurveModel& c, double t, double tol = 1e-6);

// Frame derivative under the Cartan system; columns of `frame` are (T, N, B).
Matrix3d cartan_rhs(const Matrix3d& frame, double ctorsion, bool semi_lightlike);

}  // namespace mink
