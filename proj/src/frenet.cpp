#include "minkgeo/frenet.hpp"

#include <cmath>

#include "minkgeo/cross.hpp"

namespace mink {

FrenetData frenet_apparatus(const CurveModel& c, double s, double tol) {
  const CurveJet j = c.eval(s);
  const double tt = inner3(c.ambient, j.d1, j.d1);
  if (std::abs(std::abs(tt) - 1.0) > tol)
    throw precondition_error("frenet_apparatus: curve is not unit-speed here");
  if (j.d2.norm() < 1e-10)
    throw precondition_error("frenet_apparatus: not biregular (alpha'' ~ 0)");

  FrenetData fd;
  fd.eps = tt > 0 ? 1 : -1;
  fd.T = j.d1;

  const CausalRecord n2 = causal_character3(c.ambient, j.d2);
  if (n2.cls == CausalClass::Lightlike)
    throw precondition_error(
        "frenet_apparatus: degenerate osculating plane (use cartan_apparatus)");
  fd.kappa = n2.fake_norm;
  fd.N = j.d2 / fd.kappa;
  fd.eta = n2.indicator;

  const int nu = signature_of(c.ambient).nu;
  const double sB = (nu % 2 == 0 ? 1.0 : -1.0) * fd.eps * fd.eta;
  fd.B = sB * cross3(c.ambient, fd.T, fd.N);
  fd.tau = sB * inner3(c.ambient, j.d3, fd.B) / fd.kappa;
  return fd;
}

Matrix3d frenet_rhs(const Matrix3d& frame, double kappa, double tau, int nu, int eps,
                    int eta) {
  const Vector3d T = frame.col(0), N = frame.col(1), B = frame.col(2);
  Matrix3d d;
  d.col(0) = kappa * N;
  d.col(1) = -double(eps * eta) * kappa * T + tau * B;
  d.col(2) = (nu % 2 == 0 ? -1.0 : 1.0) * double(eps) * tau * N;
  return d;
}

}  // namespace mink
