#include "minkgeo/bscroll.hpp"

#include <cmath>

namespace mink {

namespace {

void require_lightlike_base(const CurveModel& alpha) {
  if (alpha.ambient != Ambient::Lorentz3)
    throw precondition_error("b_scroll: base curve must live in L^3");
  const CartanData probe = cartan_apparatus(alpha, alpha.domain.mid());
  if (probe.eps != 0)
    throw precondition_error("b_scroll: base curve is not lightlike");
}

}  // namespace

SurfaceModel b_scroll(const CurveModel& alpha, Interval t_range) {
  require_lightlike_base(alpha);
  SurfaceModel m;
  m.domain = {alpha.domain, t_range};
  m.ambient = Ambient::Lorentz3;
  m.eval = [alpha](double phi, double t) {
    const CartanData cd = cartan_apparatus(alpha, phi);
    const double h = 1e-5;
    const double cp = (cartan_apparatus(alpha, phi + h).pseudo_torsion -
                       cartan_apparatus(alpha, phi - h).pseudo_torsion) /
                      (2.0 * h);
    const double c = cd.pseudo_torsion;
    SurfaceJet j;
    j.value = alpha.eval(phi).p + t * cd.B;
    j.du = cd.T + (t * c) * cd.N;
    j.dv = cd.B;
    // x_phiphi = T' + t(c N)' with T' = N, N' = cT + B:
    j.duu = (t * c * c) * cd.T + (1.0 + t * cp) * cd.N + (t * c) * cd.B;
    j.duv = c * cd.N;
    j.dvv.setZero();
    return j;
  };
  return m;
}

BScrollCheck b_scroll_verify(const CurveModel& alpha, Interval t_range, int n_phi,
                             int n_t, double tol) {
  if (n_phi < 2 || n_t < 2)
    throw precondition_error("b_scroll_verify: need at least a 2x2 grid");
  const SurfaceModel m = b_scroll(alpha, t_range);
  BScrollCheck out;
  out.n_phi = n_phi;
  out.n_t = n_t;
  out.min_D = std::numeric_limits<double>::infinity();
  out.max_D = -out.min_D;

  for (int i = 0; i < n_phi; ++i) {
    const double phi =
        alpha.domain.lo + alpha.domain.length() * i / double(n_phi - 1);
    const CartanData cd = cartan_apparatus(alpha, phi);
    const double c = cd.pseudo_torsion;
    const double fd = 1e-5;
    const double cp = (cartan_apparatus(alpha, phi + fd).pseudo_torsion -
                       cartan_apparatus(alpha, phi - fd).pseudo_torsion) /
                      (2.0 * fd);
    Matrix3d F;
    F.col(0) = cd.T;
    F.col(1) = cd.N;
    F.col(2) = cd.B;
    const double D = F.determinant();
    out.min_D = std::min(out.min_D, D);
    out.max_D = std::max(out.max_D, D);

    for (int k = 0; k < n_t; ++k) {
      const double t = t_range.lo + t_range.length() * k / double(n_t - 1);
      const CurvatureReport r = curvatures(m, phi, t);
      out.max_K_err = std::max(out.max_K_err, std::abs(r.K - c * c * D * D));
      out.max_H_err = std::max(out.max_H_err, std::abs(r.H - c * D));
      // Kernel test at the double eigenvalue cD: a nonzero deviation means a
      // one-dimensional eigenspace, i.e. not diagonalizable.  The closed form
      // of the deviation is the single entry D(1 + t c'(phi)): multiplying
      // the scroll's first-form inverse into its second form gives shape
      // = D [[c, 0], [1 + t c', c]], so non-diagonalizability is governed by
      // the *derivative* of the pseudo-torsion.
      const Matrix2d dev = r.shape - (c * D) * Matrix2d::Identity();
      const double thr = tol * std::max(1.0, r.shape.norm());
      const bool nondiag = dev.norm() > thr;
      if (nondiag) ++out.non_diagonalizable_count;
      const bool expected = std::abs(1.0 + t * cp) * std::abs(D) > thr;
      if (nondiag != expected) out.flags_consistent = false;
    }
  }
  return out;
}

}  // namespace mink
