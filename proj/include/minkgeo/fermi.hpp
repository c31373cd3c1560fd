#pragma once

// Numerical Fermi charts: coordinates adapted to a non-lightlike unit-speed
// base geodesic gamma(v), built by shooting geodesics orthogonal to gamma and
// following them for arclength u.  In exact arithmetic the pulled-back metric
// is (-1)^nu eps_gamma du^2 + G(u,v) dv^2 with G(0,v) = eps_gamma and
// G_u(0,v) = 0; the report carries the numerical defects of E, F and G_u(0,v)
// as diagnostics.

#include <vector>

#include "minkgeo/metric_patch.hpp"

namespace mink {

struct FermiOptions {
  int u_half_samples = 10;  // rows on each side of the base geodesic
  int v_samples = 21;       // columns along the base geodesic (>= 3)
  int substeps = 8;         // RK4 substeps per grid interval
  double max_condition = 1e6;  // fold detector on the chart Jacobian
};

struct FermiChart {
  std::vector<double> u;  // grid values; u[u_half_samples] == 0
  std::vector<double> v;
  MatrixXd E, F, G;              // measured first-form coefficients, (u x v)
  MatrixXd point_u, point_v;     // source-patch coordinates of grid points
  int eps_gamma = 1;             // causal sign of the base geodesic
  double E_expected = 1;         // (-1)^nu * eps_gamma
  double max_F = 0;              // max |F| over the grid
  double max_E_err = 0;          // max |E - E_expected|
  double max_Gu0 = 0;            // max |G_u(0,v)| along the base row
};

// base_start: state of the base geodesic at v_range.lo (velocity is
// normalized internally; lightlike start is rejected).
FermiChart fermi_chart(const MetricPatch& p, const GeodesicState& base_start,
                       double half_width, Interval v_range,
                       const FermiOptions& opt = {});

}  // namespace mink
