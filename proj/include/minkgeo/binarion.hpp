#pragma once

// Two-dimensional real algebras R[e] / (e^2 - Sign) as one template:
//   Sign = -1 : ordinary complex numbers  (e = i, i^2 = -1)
//   Sign = +1 : split-complex numbers     (e = h, h^2 = +1)
// The standard library complex type is deliberately not used so that both
// algebras share one implementation, including the exponential and the
// scale-relative zero-divisor guard that only the split case needs.

#include <cmath>
#include <string>

#include "minkgeo/types.hpp"

namespace mink {

template <int Sign>
struct Binarion {
  static_assert(Sign == 1 || Sign == -1, "Binarion sign must be +1 or -1");

  double re = 0.0;
  double im = 0.0;

  constexpr Binarion() = default;
  constexpr Binarion(double r, double i) : re(r), im(i) {}
  constexpr explicit Binarion(double r) : re(r), im(0.0) {}

  // w * conj(w) = re^2 - Sign * im^2; real, and may be negative for Sign=+1.
  constexpr double quadrance() const { return re * re - double(Sign) * im * im; }
  // Euclidean size used for scale-relative tolerances.
  double euclidean_norm() const { return std::hypot(re, im); }
  // |w| = sqrt(|w conj(w)|); for Sign=-1 this is the usual complex modulus.
  double modulus() const { return std::sqrt(std::abs(quadrance())); }

  constexpr Binarion conj() const { return {re, -im}; }

  constexpr Binarion operator-() const { return {-re, -im}; }
  constexpr Binarion operator+(const Binarion& o) const { return {re + o.re, im + o.im}; }
  constexpr Binarion operator-(const Binarion& o) const { return {re - o.re, im - o.im}; }
  // (a + e b)(c + e d) = (ac + Sign bd) + e (ad + bc)
  constexpr Binarion operator*(const Binarion& o) const {
    return {re * o.re + double(Sign) * im * o.im, re * o.im + im * o.re};
  }
  constexpr Binarion operator*(double s) const { return {re * s, im * s}; }
  constexpr Binarion operator/(double s) const { return {re / s, im / s}; }
  Binarion& operator+=(const Binarion& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Binarion& operator-=(const Binarion& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr bool operator==(const Binarion&) const = default;

  // Non-invertible iff w*conj(w) ~ 0, detected scale-relatively as
  // ||re| - |im|| <= tol (|re| + |im|); for Sign=+1 that is the pair of null
  // lines |re| = |im|, for Sign=-1 only the origin.
  bool is_invertible(double tol = 1e-12) const {
    const double scale = std::abs(re) + std::abs(im);
    if (scale == 0.0) return false;
    if constexpr (Sign == -1) return true;
    return std::abs(std::abs(re) - std::abs(im)) > tol * scale;
  }
  // A zero divisor is a NONZERO element with w*conj(w) ~ 0.
  bool is_zero_divisor(double tol = 1e-12) const {
    const double scale = std::abs(re) + std::abs(im);
    return scale > 0.0 && !is_invertible(tol);
  }

  Binarion inverse(double tol = 1e-12) const {
    if (!is_invertible(tol)) {
      throw zero_divisor_error(
          "inverse of a non-invertible element (zero or zero divisor) requested");
    }
    const double q = quadrance();
    return {re / q, -im / q};
  }
  Binarion operator/(const Binarion& o) const { return *this * o.inverse(); }
};

template <int Sign>
constexpr Binarion<Sign> operator*(double s, const Binarion<Sign>& w) {
  return w * s;
}

// exp(x + e y) = e^x (cos y + e sin y)  for e^2 = -1,
//                e^x (cosh y + e sinh y) for e^2 = +1.
template <int Sign>
Binarion<Sign> exp(const Binarion<Sign>& w) {
  const double ex = std::exp(w.re);
  if constexpr (Sign == -1) {
    return {ex * std::cos(w.im), ex * std::sin(w.im)};
  } else {
    return {ex * std::cosh(w.im), ex * std::sinh(w.im)};
  }
}

using Complexd = Binarion<-1>;
// Split-complex numbers x + h y with h^2 = +1; Re(w1 * conj(w2)) is the
// two-dimensional Lorentz inner product x1 x2 - y1 y2.
using SplitComplex = Binarion<+1>;

template <int Sign>
std::string to_string(const Binarion<Sign>& w) {
  const char unit = Sign == -1 ? 'i' : 'h';
  return std::to_string(w.re) + (w.im < 0 ? " - " : " + ") + std::to_string(std::abs(w.im)) +
         unit;
}

}  // namespace mink
