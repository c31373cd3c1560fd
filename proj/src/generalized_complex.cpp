#include "minkgeo/generalized.hpp"

#include <cmath>

namespace mink {

const char* to_string(SystemClass c) {
  switch (c) {
    case SystemClass::Elliptic: return "elliptic";
    case SystemClass::Parabolic: return "parabolic";
    case SystemClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

SystemClass GeneralizedSystem::classify(double tol) const {
  const double d = delta();
  const double scale = std::max(1.0, std::max(std::abs(alpha), beta * beta));
  if (d < -tol * scale) return SystemClass::Elliptic;
  if (d > tol * scale) return SystemClass::Hyperbolic;
  return SystemClass::Parabolic;
}

GeneralizedComplex GeneralizedSystem::multiply(GeneralizedComplex x,
                                               GeneralizedComplex y) const {
  return {x.a * y.a + alpha * x.b * y.b,
          x.a * y.b + x.b * y.a + beta * x.b * y.b};
}

double GeneralizedSystem::D(GeneralizedComplex x) const {
  return x.a * x.a + beta * x.a * x.b - alpha * x.b * x.b;
}

GeneralizedComplex GeneralizedSystem::conj(GeneralizedComplex x) const {
  return {x.a + beta * x.b, -x.b};
}

bool GeneralizedSystem::invertible(GeneralizedComplex x, double tol) const {
  const double scale = x.a * x.a + x.b * x.b;
  if (scale == 0.0) return false;
  const double coeff = std::max(1.0, std::max(std::abs(alpha), std::abs(beta)));
  return std::abs(D(x)) > tol * coeff * scale;
}

GeneralizedComplex GeneralizedSystem::inverse(GeneralizedComplex x, double tol) const {
  if (!invertible(x, tol)) {
    throw zero_divisor_error("generalized inverse: D(x) = 0 (zero divisor or zero)");
  }
  const GeneralizedComplex c = conj(x);
  const double d = D(x);
  return {c.a / d, c.b / d};
}

std::optional<std::array<double, 2>> GeneralizedSystem::zero_divisor_line_slopes(
    double tol) const {
  if (classify(tol) == SystemClass::Elliptic) return std::nullopt;
  const double root = std::sqrt(std::max(0.0, delta()));
  // Lines a + (beta +- root) b / 2 = 0, reported as the coefficient of b.
  return std::array<double, 2>{0.5 * (beta + root), 0.5 * (beta - root)};
}

std::optional<int> GeneralizedSystem::on_zero_divisor_line(GeneralizedComplex x,
                                                           double tol) const {
  const auto lines = zero_divisor_line_slopes();
  if (!lines) return std::nullopt;
  const double scale = std::max(1.0, std::abs(x.a) + std::abs(x.b));
  for (int i = 0; i < 2; ++i) {
    if (std::abs(x.a + (*lines)[i] * x.b) <= tol * scale) return i;
  }
  return std::nullopt;
}

}  // namespace mink
