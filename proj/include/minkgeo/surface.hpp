#pragma once

// Regular parametrized sheets r(u,v) carrying order-2 jets: fundamental
// forms, Gauss map, mean/Gaussian curvature, and the shape-operator
// diagonalization diagnosis.

#include <functional>
#include <optional>

#include "minkgeo/inner.hpp"
#include "minkgeo/types.hpp"

namespace mink {

// Position and partial derivatives of a sheet at one (u,v).
struct SurfaceJet {
  Vector3d value, du, dv, duu, duv, dvv;
};

struct SurfaceModel {
  std::function<SurfaceJet(double, double)> eval;
  Rect domain{};
  Ambient ambient = Ambient::Lorentz3;
};

// Wraps a black-box position function with central-difference jets
// (step 1e-4; second derivatives accurate to roughly 1e-6).
SurfaceModel surface_from_positions(std::function<Vector3d(double, double)> pos,
                                    Rect domain, Ambient ambient, double h = 1e-4);

// Scalar height jet for graph surfaces (u, v, f(u,v)).
struct ScalarJet2 {
  double f = 0, fu = 0, fv = 0, fuu = 0, fuv = 0, fvv = 0;
};

SurfaceModel graph_surface(std::function<ScalarJet2(double, double)> f, Rect domain,
                           Ambient ambient = Ambient::Lorentz3);

// First/second fundamental form coefficients at a point, with the unit
// normal N = (r_u x r_v)/|r_u x r_v| (ambient cross product and fake norm)
// and its indicator eps_M = <N,N>. A degenerate (lightlike) tangent plane is
// a reported state: the first form is still filled in, the normal direction
// has vanishing fake norm so eps_M/normal/e/f/g are absent.
struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  bool degenerate = false;
  CausalClass surface_class = CausalClass::Spacelike;  // of the tangent plane
  std::optional<int> eps_M;
  std::optional<Vector3d> normal;
  double e = 0, f = 0, g = 0;  // meaningful only when !degenerate
};

// tol is the scale-relative threshold on EG - F^2 (relative to the Euclidean
// size of r_u, r_v) below which the tangent plane is declared degenerate.
// Throws precondition_error when (r_u, r_v) are dependent (irregular point).
FundamentalForms fundamental_forms(const SurfaceModel& m, double u, double v,
                                   double tol = 1e-10);

enum class Diagonalizable { Yes, No, Inconclusive };
const char* to_string(Diagonalizable d);

struct PrincipalData {
  double k1 = 0, k2 = 0;            // shape-operator eigenvalues, k1 <= k2
  Vector2d dir1{1, 0}, dir2{0, 1};  // coordinates in the (r_u, r_v) basis
};

struct CurvatureReport {
  FundamentalForms forms;
  double H = 0, K = 0;
  double discriminant = 0;            // H^2 - eps_M K
  Matrix2d shape = Matrix2d::Zero();  // (first form)^{-1} (second form)
  Diagonalizable diagonalizable = Diagonalizable::Inconclusive;
  bool umbilic = false;
  std::optional<PrincipalData> principal;
};

// Mean and Gaussian curvature from the coordinate formulas
//   H = (eps_M/2)(Eg + eG - 2Ff)/(EG - F^2),  K = eps_M (eg - f^2)/(EG - F^2)
// and the diagnosis of the shape operator by the discriminant H^2 - eps_M K:
// positive -> diagonalizable with eigenvalues eps_M H -+ sqrt(disc); negative
// -> not diagonalizable; tie (|disc| <= tie_tol at curvature scale) -> umbilic
// on a spacelike sheet; on a timelike sheet a scalar shape matrix is umbilic
// while a non-scalar one has a single lightlike eigendirection and the
// criterion is inconclusive. Throws precondition_error at degenerate points.
CurvatureReport curvatures(const SurfaceModel& m, double u, double v,
                           double tie_tol = 1e-10);

// Causal character of the quadratic form E w1^2 + 2F w1 w2 + G w2^2 applied
// to tangent coordinates w (scale-relative lightlike band).
CausalClass tangent_causal_class(const FundamentalForms& ff, const Vector2d& w,
                                 double tol = kCausalTol);

}  // namespace mink
