#pragma once

// Index-nu cross products: the unique vector v with <v,x>_nu = det(x, v_1,
// ..., v_{n-1}) for all x, computed by the formal cofactor expansion with
// metric weights on the basis row.

#include <vector>

#include "minkgeo/inner.hpp"

namespace mink {

// General dimension: n-1 vectors in R^n_nu.
VectorXd cross_product(const Signature& sig, const std::vector<VectorXd>& vs);

// 3-dimensional fast path, templated on scalar so jets flow through.
template <class T>
Eigen::Matrix<T, 3, 1> cross3(Ambient amb, const Eigen::Matrix<T, 3, 1>& u,
                              const Eigen::Matrix<T, 3, 1>& v) {
  const T c1 = u[1] * v[2] - u[2] * v[1];
  const T c2 = u[2] * v[0] - u[0] * v[2];
  const T c3 = u[0] * v[1] - u[1] * v[0];
  switch (amb) {
    case Ambient::Euclidean3: return {c1, c2, c3};
    case Ambient::Lorentz3: return {c1, c2, -c3};
    case Ambient::Index2_3: return {c1, -c2, -c3};
  }
  return {T{}, T{}, T{}};
}

inline Vector3d cross3(Ambient amb, const Vector3d& u, const Vector3d& v) {
  return cross3<double>(amb, u, v);
}

// Orientation of an ordered basis (v, w) of a degenerate (lightlike) plane in
// L^3: positive iff the Euclidean cross product v x w is future-directed.
// (For lightlike *future-directed* v this is the same as v x_L w = lambda v
// with lambda < 0; for past-directed v the two notions are opposite.)
inline bool lightlike_plane_positive(const Vector3d& v, const Vector3d& w) {
  return cross3(Ambient::Euclidean3, v, w)[2] > 0.0;
}

}  // namespace mink
