#pragma once

// Abstract 2D metric patches g_ij(u,v) of index 0 or 1, with Christoffel
// symbols and fixed-step RK4 geodesics.

#include <functional>
#include <vector>

#include "minkgeo/surface.hpp"
#include "minkgeo/types.hpp"

namespace mink {

using ScalarField2 = std::function<double(double, double)>;

struct MetricPatch {
  ScalarField2 g11, g12, g22;
  // First partials; filled by the factory helpers below.
  ScalarField2 g11_u, g11_v, g12_u, g12_v, g22_u, g22_v;
  int nu = 0;  // metric index: 0 Riemannian, 1 Lorentzian
  Rect domain{};

  Matrix2d components(double u, double v) const {
    Matrix2d g;
    const double a = g11(u, v), b = g12(u, v), c = g22(u, v);
    g << a, b, b, c;
    return g;
  }
};

// Metric from coefficient functions, partials by central difference (step h).
MetricPatch metric_from_functions(ScalarField2 g11, ScalarField2 g12,
                                  ScalarField2 g22, Rect domain, int nu,
                                  double h = 1e-5);

// First fundamental form of an embedded sheet as an abstract patch.
MetricPatch induced_metric(const SurfaceModel& m, double h = 1e-5);

// Christoffel symbols: symbols[k](i,j) = Gamma^k_{ij} from
// Gamma^k_{ij} = sum_r (g^{kr}/2)(d_i g_jr + d_j g_ir - d_r g_ij).
// Throws precondition_error when det g vanishes at the point.
struct Christoffels {
  Matrix2d gamma1, gamma2;  // Gamma^1_{ij}, Gamma^2_{ij}
};
Christoffels christoffel_symbols(const MetricPatch& p, double u, double v);

// Geodesic state ((u,v), (du/dt, dv/dt)).
struct GeodesicState {
  Vector2d pos, vel;
};

struct GeodesicTrace {
  std::vector<double> t;
  std::vector<GeodesicState> states;
  double speed_drift = 0;  // max | <y',y'> - <y'(0),y'(0)> | along the way
};

// Integrates u''^k + Gamma^k_{ij} u'^i u'^j = 0 with `steps` RK4 steps up to
// t1. Throws precondition_error if the metric degenerates along the way.
GeodesicTrace integrate_geodesic(const MetricPatch& p, const GeodesicState& s0,
                                 double t1, int steps);

// Quadrance of a tangent vector under the patch metric.
double patch_quadrance(const MetricPatch& p, double u, double v, const Vector2d& w);

}  // namespace mink
