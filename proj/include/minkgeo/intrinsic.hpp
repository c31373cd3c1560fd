#pragma once

// Intrinsic curvature tools for Fermi-form metrics
// ds^2 = (-1)^nu eps_gamma du^2 + G(u,v) dv^2:
//   K = (-1)^{nu+1} eps_gamma (sqrt|G|)_uu / sqrt|G|,
// the constant-K solution table of that ODE, and the punctured-disk field
// H(x,y) = (G - u^2)/u^4 whose limit at the origin is -K(0,0)/3.

#include "minkgeo/metric_patch.hpp"

namespace mink {

// K from a black-box G, second derivative by central differences (step h).
// Requires sign(G) == eps_gamma near (u,v).
double curvature_from_G(const ScalarField2& G, int nu, int eps_gamma,
                        double u, double v, double h = 1e-4);

// K from closed-form s = sqrt|G| and its exact u-second-derivative.
double curvature_from_G_exact(const ScalarField2& s, const ScalarField2& s_uu,
                              int nu, int eps_gamma, double u, double v);

// Closed-form solution of (sqrt|G|)_uu + (-1)^nu eps_gamma K sqrt|G| = 0 with
// G(0,v) = eps_gamma, G_u(0,v) = 0.  With kappa = (-1)^nu eps_gamma K:
// sqrt|G| = cos(sqrt(kappa) u), cosh(sqrt(-kappa) u), or 1, and
// G = eps_gamma (sqrt|G|)^2.
struct ConstantKProfile {
  double kappa = 0;
  ScalarField2 G;     // metric coefficient, sign eps_gamma
  ScalarField2 s;     // sqrt|G|
  ScalarField2 s_uu;  // exact second u-derivative of s
};
ConstantKProfile constant_K_profile(int nu, int eps_gamma, double K);

// H(x,y) = (G(u,v) - u^2)/u^4 under x = u cos v, y = u sin v (u > 0).
double riemann_H(const ScalarField2& G, double x, double y);

// -3 H(0,0) via Richardson extrapolation in u^2 at radii r and r/2; equals
// the Gauss curvature at the origin for a Riemannian Fermi-polar metric.
double riemann_K_at_origin(const ScalarField2& G, double r = 1e-2);

}  // namespace mink
