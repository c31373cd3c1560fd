#pragma once

// Indefinite inner products on R^n_nu, causal classification, fake norms and
// time orientation.

#include <cmath>
#include <optional>

#include "minkgeo/types.hpp"

namespace mink {

namespace detail {
inline void require_dim(const Signature& sig, Eigen::Index len, const char* who) {
  if (!sig.valid()) throw signature_error(std::string(who) + ": invalid signature");
  if (len != sig.n) throw signature_error(std::string(who) + ": coordinate count != n");
}
}  // namespace detail

// <x,y>_nu = sum_{i<n-nu} x_i y_i - sum_{i>=n-nu} x_i y_i.
template <class DA, class DB>
double inner(const Signature& sig, const Eigen::MatrixBase<DA>& x,
             const Eigen::MatrixBase<DB>& y) {
  detail::require_dim(sig, x.size(), "inner");
  if (x.size() != y.size()) throw signature_error("inner: mixed dimensions");
  const int p = sig.n - sig.nu;
  double s = 0.0;
  if (p > 0) s += x.head(p).dot(y.head(p));
  if (sig.nu > 0) s -= x.tail(sig.nu).dot(y.tail(sig.nu));
  return s;
}

inline double inner(const Vec& x, const Vec& y) {
  if (!(x.sig == y.sig)) throw signature_error("inner: signature mismatch");
  return inner(x.sig, x.coords, y.coords);
}

// 3-dimensional fast path, templated on the scalar so jet-valued components
// propagate through.
template <class T>
T inner3(Ambient amb, const Eigen::Matrix<T, 3, 1>& a, const Eigen::Matrix<T, 3, 1>& b) {
  switch (amb) {
    case Ambient::Euclidean3: return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    case Ambient::Lorentz3: return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
    case Ambient::Index2_3: return a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
  }
  return T{};
}

inline double inner3(Ambient amb, const Vector3d& a, const Vector3d& b) {
  return inner3<double>(amb, a, b);
}

// Fake norm |x|_nu = sqrt(|<x,x>_nu|).
template <class D>
double fake_norm(const Signature& sig, const Eigen::MatrixBase<D>& x) {
  return std::sqrt(std::abs(inner(sig, x, x)));
}

inline double fake_norm3(Ambient amb, const Vector3d& x) {
  return std::sqrt(std::abs(inner3(amb, x, x)));
}

// Causal classification of the scalar q = <x,x> given the Euclidean scale of x.
inline CausalClass classify_quadrance(double q, double euclid_sq, double tol = kCausalTol) {
  if (std::abs(q) <= tol * std::max(euclid_sq, 1e-300))
    return CausalClass::Lightlike;
  return q > 0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

struct CausalRecord {
  CausalClass cls;
  int indicator;     // +1 / -1 / 0
  double quadrance;  // <x,x>
  double fake_norm;  // sqrt(|<x,x>|)
};

template <class D>
CausalRecord causal_character(const Signature& sig, const Eigen::MatrixBase<D>& x,
                              double tol = kCausalTol) {
  detail::require_dim(sig, x.size(), "causal_character");
  const double e2 = x.squaredNorm();
  if (e2 == 0.0) throw precondition_error("causal_character: zero vector");
  const double q = inner(sig, x, x);
  const CausalClass c = classify_quadrance(q, e2, tol);
  return {c, indicator(c), q, std::sqrt(std::abs(q))};
}

inline CausalRecord causal_character(const Vec& x, double tol = kCausalTol) {
  return causal_character(x.sig, x.coords, tol);
}

inline CausalRecord causal_character3(Ambient amb, const Vector3d& x, double tol = kCausalTol) {
  const double e2 = x.squaredNorm();
  if (e2 == 0.0) throw precondition_error("causal_character: zero vector");
  const double q = inner3(amb, x, x);
  const CausalClass c = classify_quadrance(q, e2, tol);
  return {c, indicator(c), q, std::sqrt(std::abs(q))};
}

// Time orientation of a causal (timelike or lightlike) vector in L^n:
// future-directed iff <v, e_n> < 0, i.e. iff the last coordinate is positive.
template <class D>
TimeOrientation time_orientation(const Signature& sig, const Eigen::MatrixBase<D>& v,
                                 double tol = kCausalTol) {
  detail::require_dim(sig, v.size(), "time_orientation");
  if (sig.nu != 1) throw precondition_error("time_orientation: requires index 1");
  if (v.squaredNorm() == 0.0) return TimeOrientation::None;
  const CausalClass c = classify_quadrance(inner(sig, v, v), v.squaredNorm(), tol);
  if (c == CausalClass::Spacelike) return TimeOrientation::None;
  const double vn = v[sig.n - 1];
  if (vn > 0) return TimeOrientation::Future;
  if (vn < 0) return TimeOrientation::Past;
  return TimeOrientation::None;
}

inline TimeOrientation time_orientation(const Vec& v, double tol = kCausalTol) {
  return time_orientation(v.sig, v.coords, tol);
}

inline TimeOrientation time_orientation3(const Vector3d& v, double tol = kCausalTol) {
  return time_orientation(kLorentz3, v, tol);
}

}  // namespace mink
