#pragma once

// Generalized complex number systems C_{alpha,beta} = { a + u b } with
// u^2 = alpha + beta u. The discriminant Delta = beta^2 + 4 alpha sorts the
// systems into elliptic (field, e.g. C), parabolic (dual numbers) and
// hyperbolic (split-complex-like, with two zero-divisor lines).

#include <array>
#include <optional>

#include "minkgeo/types.hpp"

namespace mink {

enum class SystemClass { Elliptic, Parabolic, Hyperbolic };

const char* to_string(SystemClass c);

struct GeneralizedComplex {
  double a = 0.0;
  double b = 0.0;
};

struct GeneralizedSystem {
  double alpha = 0.0;
  double beta = 0.0;

  double delta() const { return beta * beta + 4.0 * alpha; }
  SystemClass classify(double tol = 1e-12) const;

  // (a + u b)(c + u d) = (ac + alpha bd) + u (ad + bc + beta bd).
  GeneralizedComplex multiply(GeneralizedComplex x, GeneralizedComplex y) const;

  // D = a^2 + beta a b - alpha b^2 = x * conj(x) with conj(x) = a + beta b - u b.
  double D(GeneralizedComplex x) const;
  GeneralizedComplex conj(GeneralizedComplex x) const;

  // Invertible iff D != 0 (scale-relative test).
  bool invertible(GeneralizedComplex x, double tol = 1e-12) const;
  // Throws zero_divisor_error when D ~ 0.
  GeneralizedComplex inverse(GeneralizedComplex x, double tol = 1e-12) const;

  // For Delta >= 0 the non-invertible locus is the pair of lines
  // a + (beta +- sqrt(Delta)) b / 2 = 0 (a double line when Delta = 0);
  // empty for elliptic systems.
  std::optional<std::array<double, 2>> zero_divisor_line_slopes(double tol = 1e-12) const;
  // Index (0 or 1) of the line x lies on, if any.
  std::optional<int> on_zero_divisor_line(GeneralizedComplex x, double tol = 1e-9) const;
};

}  // namespace mink
