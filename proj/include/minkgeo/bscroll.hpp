#pragma once

// Ruled surfaces x(phi, t) = alpha(phi) + t B(phi) over a lightlike base
// curve in arc-photon parameter: the canonical example of a timelike surface
// whose shape operator has a double eigenvalue but is not diagonalizable.
// Writing c for the pseudo-torsion and D = det(T,N,B), the closed identities
//   K = c^2 D^2,   H = c D
// hold everywhere; in the coordinate basis the shape operator is
//   D [[c, 0], [1 + t c'(phi), c]],
// so it fails to be diagonalizable exactly where 1 + t c'(phi) != 0.

#include "minkgeo/cartan.hpp"
#include "minkgeo/surface.hpp"

namespace mink {

// Surface model of the scroll; (u,v) = (phi, t). The pseudo-torsion
// derivative entering x_phiphi is taken by central difference (step 1e-5).
// Throws precondition_error when alpha is not a lightlike curve in
// arc-photon parameter.
SurfaceModel b_scroll(const CurveModel& alpha, Interval t_range);

struct BScrollCheck {
  int n_phi = 0, n_t = 0;
  double max_K_err = 0, max_H_err = 0;  // numeric vs closed identities
  int non_diagonalizable_count = 0;
  // non-diagonalizable (rank-1 kernel of shape - cD*Id) exactly at samples
  // with |1 + t c'(phi)| above tolerance
  bool flags_consistent = true;
  double min_D = 0, max_D = 0;  // det(T,N,B) range over the phi samples
};

BScrollCheck b_scroll_verify(const CurveModel& alpha, Interval t_range, int n_phi,
                             int n_t, double tol = 1e-8);

}  // namespace mink
