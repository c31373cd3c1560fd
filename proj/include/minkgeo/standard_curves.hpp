#pragma once

// Closed-form curve catalog with exact jets: the six admissible standard
// helices beta1..beta6, the three lightlike standard helices gamma1..gamma3,
// horocycles, semi-lightlike graphs, and a few generic shapes.

#include <map>
#include <string>
#include <vector>

#include "minkgeo/curve.hpp"

namespace mink {

// Unit-speed standard helices. beta1 lives in R^3, the rest in L^3.
//   beta1(s) = (a cos(s/c), a sin(s/c), b s/c),   c = sqrt(a^2+b^2)
//   beta2(s) = (a cos(s/c), a sin(s/c), b s/c),   c = sqrt|a^2-b^2|
//   beta3(s) = (b s/c, a cosh(s/c), a sinh(s/c)), c = sqrt|a^2-b^2|
//   beta4(s) = (b s/c, a sinh(s/c), a cosh(s/c)), c = sqrt(a^2+b^2)
//   beta5(s) = (a s^2/2, a^2 s^3/6, s + a^2 s^3/6)
//   beta6(s) = (a s^2/2, s - a^2 s^3/6, -a^2 s^3/6)
CurveModel beta1(double a, double b);
CurveModel beta2(double a, double b);
CurveModel beta3(double a, double b);
CurveModel beta4(double a, double b);
CurveModel beta5(double a);
CurveModel beta6(double a);

// Arc-photon lightlike standard helices (r > 0):
//   gamma1(phi) = (sqrt(r) phi, r cosh(phi/sqrt r), r sinh(phi/sqrt r))
//   gamma2(phi) = (r cos(phi/sqrt r), r sin(phi/sqrt r), sqrt(r) phi)
//   gamma3(phi) = (-phi^3/4 + phi/3, phi^2/2, -phi^3/4 - phi/3)
CurveModel gamma1(double r);
CurveModel gamma2(double r);
CurveModel gamma3();

// Horocycle of H^2 based on v = (0,1,1) at level c < 0:
//   alpha(s) = -(s^2/2c) v + s w1 + w2, semi-lightlike with zero
//   pseudo-torsion.
CurveModel horocycle(double c);

// Semi-lightlike graph s -> (s, f(s), f(s)) from a scalar jet function
// (requires f'' != 0 on the domain of use).
CurveModel semi_lightlike_graph(std::function<Jet3d(double)> f, Interval domain);

// The cosh graph: (s, cosh s, cosh s); pseudo-torsion tanh s.
CurveModel graph_cosh();

// Constant-pseudo-torsion semi-lightlike curve in the plane y = z:
//   alpha(s) = (s + a, (b/ct^2) e^(ct s) + c s + d, same), ct != 0, b != 0.
CurveModel semi_lightlike_exp(double ct, double a = 0, double b_coef = 1, double c_coef = 0,
                              double d_coef = 0);

// Planar circle (r cos t, r sin t, 0) in the given ambient, parameter t (not
// unit speed unless r = 1).
CurveModel circle(double r, Ambient amb = Ambient::Euclidean3);

// Straight line p0 + t v.
CurveModel line(const Vector3d& p0, const Vector3d& v, Ambient amb = Ambient::Lorentz3);

// Lightlike circular helix (r cos t, r sin t, r t) in its natural parameter
// (arc-photon only after reparametrization; reparametrizing yields gamma2).
CurveModel lightlike_helix_raw(double r);

// --- name registry for the CLI -------------------------------------------
struct NamedCurveEntry {
  std::string name;
  std::vector<std::string> params;  // accepted parameter keys
  std::string summary;
};

const std::vector<NamedCurveEntry>& curve_catalog();

// Build a catalog curve by name; unknown keys and constraint violations throw
// precondition_error. Missing parameters take documented defaults.
CurveModel make_named_curve(const std::string& name,
                            const std::map<std::string, double>& params);

}  // namespace mink
