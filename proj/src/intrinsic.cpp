#include "minkgeo/intrinsic.hpp"

#include <cmath>

namespace mink {

namespace {

void check_index_sign(int nu, int eps_gamma) {
  if (nu != 0 && nu != 1) throw precondition_error("metric index must be 0 or 1");
  if (eps_gamma != 1 && eps_gamma != -1)
    throw precondition_error("eps_gamma must be +1 or -1");
  if (nu == 0 && eps_gamma != 1)
    throw precondition_error("Riemannian Fermi metric needs eps_gamma = +1");
}

double sqrt_abs_checked(const ScalarField2& G, int eps_gamma, double u, double v) {
  const double g = G(u, v);
  if (g == 0 || (g > 0 ? 1 : -1) != eps_gamma)
    throw precondition_error("G vanishes or changes sign near evaluation point");
  return std::sqrt(std::abs(g));
}

}  // namespace

double curvature_from_G(const ScalarField2& G, int nu, int eps_gamma,
                        double u, double v, double h) {
  check_index_sign(nu, eps_gamma);
  const double sm = sqrt_abs_checked(G, eps_gamma, u - h, v);
  const double s0 = sqrt_abs_checked(G, eps_gamma, u, v);
  const double sp = sqrt_abs_checked(G, eps_gamma, u + h, v);
  const double s_uu = (sp - 2 * s0 + sm) / (h * h);
  const double sign = (nu % 2 == 0 ? -1.0 : 1.0) * eps_gamma;
  return sign * s_uu / s0;
}

double curvature_from_G_exact(const ScalarField2& s, const ScalarField2& s_uu,
                              int nu, int eps_gamma, double u, double v) {
  check_index_sign(nu, eps_gamma);
  const double s0 = s(u, v);
  if (s0 == 0) throw precondition_error("sqrt|G| vanishes at evaluation point");
  const double sign = (nu % 2 == 0 ? -1.0 : 1.0) * eps_gamma;
  return sign * s_uu(u, v) / s0;
}

ConstantKProfile constant_K_profile(int nu, int eps_gamma, double K) {
  check_index_sign(nu, eps_gamma);
  ConstantKProfile out;
  out.kappa = (nu % 2 == 0 ? 1.0 : -1.0) * eps_gamma * K;
  const double kappa = out.kappa;
  if (kappa > 0) {
    const double a = std::sqrt(kappa);
    out.s = [a](double u, double) { return std::cos(a * u); };
    out.s_uu = [a, kappa](double u, double) { return -kappa * std::cos(a * u); };
  } else if (kappa < 0) {
    const double a = std::sqrt(-kappa);
    out.s = [a](double u, double) { return std::cosh(a * u); };
    out.s_uu = [a, kappa](double u, double) { return -kappa * std::cosh(a * u); };
  } else {
    out.s = [](double, double) { return 1.0; };
    out.s_uu = [](double, double) { return 0.0; };
  }
  const auto s = out.s;
  const double eps = eps_gamma;
  out.G = [s, eps](double u, double v) {
    const double val = s(u, v);
    return eps * val * val;
  };
  return out;
}

double riemann_H(const ScalarField2& G, double x, double y) {
  const double u = std::hypot(x, y);
  if (u < 1e-12) throw precondition_error("H(x,y) is undefined at the origin");
  const double v = std::atan2(y, x);
  const double u2 = u * u;
  return (G(u, v) - u2) / (u2 * u2);
}

double riemann_K_at_origin(const ScalarField2& G, double r) {
  if (!(r > 0)) throw precondition_error("extrapolation radius must be positive");
  const double h1 = riemann_H(G, r, 0.0);
  const double h2 = riemann_H(G, r / 2, 0.0);
  const double h0 = (4 * h2 - h1) / 3;  // removes the O(u^2) term
  return -3 * h0;
}

}  // namespace mink
