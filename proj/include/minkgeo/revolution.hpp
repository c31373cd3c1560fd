#pragma once

// Surfaces of revolution spanned by a profile curve alpha(u) = (f(u), 0, g(u))
// under a one-parameter rotation group of the ambient. Four rotation kinds:
//
//   CircularZ     x = (f cos v,  f sin v,  g)   needs weight(x) == weight(y)
//   CircularX     x = (g, f cos v,  f sin v)    needs weight(y) == weight(z)
//   HyperbolicXY  x = (f sinh v, f cosh v, g)   needs weight(x) != weight(y)
//   HyperbolicYZ  x = (g, f cosh v, f sinh v)   needs weight(y) != weight(z)
//
// (circular orbits need a definite rotation plane, hyperbolic ones a
// Lorentzian plane). The constant-K checker verifies the unit-speed profile
// relations f'' + eps_alpha K f = 0 and g'(u)^2 = (eps_alpha - w_f f'(u)^2)/w_g,
// where (w_f, w_g) are the metric weights of the profile-plane slots; for the
// about-z case in R^3_nu the latter is g' = sqrt((-1)^nu (eps_alpha - f'^2)).

#include "minkgeo/curve.hpp"
#include "minkgeo/surface.hpp"

namespace mink {

enum class RevolutionKind { CircularZ, CircularX, HyperbolicXY, HyperbolicYZ };
const char* to_string(RevolutionKind k);

// The profile is a CurveModel whose jets give (f, 0, g) componentwise; its
// ambient is the surface's ambient. Throws precondition_error when the
// rotation kind is incompatible with the ambient weights, the profile leaves
// the plane y = 0, or f <= 0 somewhere on the sampled domain.
SurfaceModel revolution_surface(const CurveModel& profile, RevolutionKind kind,
                                Interval v_range, int profile_samples = 64);

struct RevolutionConstKCheck {
  int eps_alpha = 0;           // causal indicator of the embedded profile
  double max_unit_speed_err = 0;  // | <alpha',alpha'> - eps_alpha |
  double max_ode_residual = 0;    // | f'' + eps_alpha K f |
  double max_g_pointwise = 0;     // | w_f f'^2 + w_g g'^2 - eps_alpha |
  double max_g_integral = 0;      // | |g(u)-g(u0)| - int |g'| | via Simpson
};

// Verifies the constant-K profile relations at `samples` points of the
// profile domain. Throws precondition_error when the g-radicand
// (eps_alpha - w_f f'^2)/w_g goes negative on the sampled range.
RevolutionConstKCheck revolution_constant_K_check(const CurveModel& profile,
                                                  RevolutionKind kind, double K,
                                                  int samples = 33);

// Unit-speed profiles for the catalog of constant-K revolution surfaces.
// de Sitter S^2_1 about z in L^3: f = cosh u, g = sinh u (K = 1).
CurveModel de_sitter_profile(Interval domain = {-1.5, 1.5});
// Hyperbolic plane H^2 about z in L^3: f = sinh u, g = cosh u (K = -1).
CurveModel hyperbolic_profile(Interval domain = {0.2, 1.5});
// Cylinder about z: f = 1, g = u (K = 0).
CurveModel cylinder_profile(Ambient ambient = Ambient::Lorentz3,
                            Interval domain = {-1.0, 1.0});
// Elliptic-integral profile f = cosh u, g = int_0^u sqrt(2 - cosh^2 t) dt:
// timelike in R^3_2 (K = 1 under HyperbolicXY), spacelike in L^3 (K = -1
// under HyperbolicYZ). Needs cosh^2 u < 2.
CurveModel elliptic_cosh_profile(Ambient ambient, Interval domain = {-0.85, 0.85});
// Profile f = cos u, g = int_0^u sqrt(1 + sin^2 t) dt: timelike in L^3
// (K = -1 under CircularZ), spacelike in R^3_2 (K = 1 under CircularX);
// domain |u| < pi/2.
CurveModel elliptic_cos_profile(Ambient ambient, Interval domain = {-1.2, 1.2});

}  // namespace mink
