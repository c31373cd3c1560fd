#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mink {

using Eigen::Matrix2d;
using Eigen::Matrix3d;
using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXd;
using Vector6d = Eigen::Matrix<double, 6, 1>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs carry incompatible dimensions/signatures.
struct signature_error : error {
  using error::error;
};
// A set of vectors required to be independent is (numerically) dependent.
struct dependent_input_error : error {
  using error::error;
};
// An intermediate span in the adapted Gram-Schmidt chain is degenerate.
struct degenerate_chain_error : error {
  using error::error;
};
// Inverse of a split-complex zero divisor (or of zero) was requested.
struct zero_divisor_error : error {
  using error::error;
};
// A documented mathematical precondition does not hold for the input.
struct precondition_error : error {
  using error::error;
};
// A numerical procedure failed to reach its target (fold, non-convergence...).
struct numerical_error : error {
  using error::error;
};

// ---------------------------------------------------------------------------
// Signatures and causal classes
// ---------------------------------------------------------------------------

// Scale-relative tolerance used to declare an inner product value zero:
// |<x,x>| <= kCausalTol * |x|_E^2.
inline constexpr double kCausalTol = 1e-9;

// Pseudo-Euclidean signature: dimension n with nu trailing minus signs.
struct Signature {
  int n = 3;
  int nu = 1;

  constexpr bool operator==(const Signature&) const = default;
  // Metric weight of coordinate i (0-based): +1 for i < n-nu, -1 after.
  constexpr double weight(int i) const { return i < n - nu ? 1.0 : -1.0; }
  constexpr bool valid() const { return n >= 1 && nu >= 0 && nu <= n; }
};

inline constexpr Signature kEuclidean3{3, 0};
inline constexpr Signature kLorentz3{3, 1};
inline constexpr Signature kIndex2_3{3, 2};

// The three ambient spaces the 3-dimensional machinery runs in.
enum class Ambient { Euclidean3, Lorentz3, Index2_3 };

constexpr Signature signature_of(Ambient a) {
  switch (a) {
    case Ambient::Euclidean3: return kEuclidean3;
    case Ambient::Lorentz3: return kLorentz3;
    case Ambient::Index2_3: return kIndex2_3;
  }
  return kLorentz3;
}

inline const char* to_string(Ambient a) {
  switch (a) {
    case Ambient::Euclidean3: return "euclidean3";
    case Ambient::Lorentz3: return "lorentz3";
    case Ambient::Index2_3: return "index2_3";
  }
  return "?";
}

enum class CausalClass { Spacelike, Timelike, Lightlike };

// Indicator epsilon: +1 spacelike, -1 timelike, 0 lightlike.
constexpr int indicator(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return 1;
    case CausalClass::Timelike: return -1;
    case CausalClass::Lightlike: return 0;
  }
  return 0;
}

constexpr CausalClass class_of_indicator(int eps) {
  return eps > 0   ? CausalClass::Spacelike
         : eps < 0 ? CausalClass::Timelike
                   : CausalClass::Lightlike;
}

inline const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
  }
  return "?";
}

enum class TimeOrientation { Future, Past, None };

inline const char* to_string(TimeOrientation t) {
  switch (t) {
    case TimeOrientation::Future: return "future";
    case TimeOrientation::Past: return "past";
    case TimeOrientation::None: return "none";
  }
  return "?";
}

// A vector bundled with its signature (convenience record for I/O layers;
// the math routines below take the signature explicitly).
struct Vec {
  VectorXd coords;
  Signature sig;
};

// Closed parameter interval / rectangle used as evaluation domains.
struct Interval {
  double lo = 0.0, hi = 1.0;
  constexpr double length() const { return hi - lo; }
  constexpr bool contains(double t) const { return t >= lo && t <= hi; }
  constexpr double mid() const { return 0.5 * (lo + hi); }
};

struct Rect {
  Interval u, v;
  constexpr bool contains(double uu, double vv) const {
    return u.contains(uu) && v.contains(vv);
  }
};

}  // namespace mink
