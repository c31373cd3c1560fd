#include "minkgeo/cartan.hpp"

#include <cmath>


namespace mink {

CartanData cartan_apparatus(const CurveModel& c, double t, double tol) {
  if (c.ambient != Ambient::Lorentz3)
    throw precondition_error("cartan_apparatus: defined in L^3 only");
  const CurveJet j = c.eval(t);
  if (j.d2.norm() < 1e-12)
    throw precondition_error("cartan_apparatus: alpha'' vanishes");

  const Ambient amb = c.ambient;
  const double tt = inner3(amb, j.d1, j.d1);
  const double nn = inner3(amb, j.d2, j.d2);

  CartanData cd;
  const double t_scale = std::max(j.d1.squaredNorm(), 1e-300);
  const double n_scale = std::max(j.d2.squaredNorm(), 1e-300);
  if (std::abs(tt) <= tol * t_scale && std::abs(nn - 1.0) <= tol) {
    cd.eps = 0;  // lightlike curve in arc-photon parameter
    cd.eta = 1;
  } else if (std::abs(tt - 1.0) <= tol && std::abs(nn) <= tol * n_scale) {
    cd.eps = 1;  // semi-lightlike unit-speed curve
    cd.eta = 0;
  } else {
    throw precondition_error(
        "cartan_apparatus: curve is neither lightlike arc-photon nor semi-lightlike "
        "unit-speed here");
  }

  Vector3d T = j.d1, N = j.d2, d3 = j.d3;

  // Orientation of the degenerate-plane basis (T,N). Writing L for the
  // lightlike frame member (T on a lightlike curve, N on a semi-lightlike
  // one), the product-constrained binormal below completes (T,N) to a frame
  // with det(T,N,B) = -|T x_E N|^2 / <T x_E N, Id_{2,1} L>_E, so the frame
  // comes out positively oriented exactly when that pairing is negative.
  const auto orient = [&cd](const Vector3d& Tv, const Vector3d& Nv) {
    const Vector3d cE = Tv.cross(Nv);
    const Vector3d& L = cd.eps == 0 ? Tv : Nv;
    return cE[0] * L[0] + cE[1] * L[1] - cE[2] * L[2];
  };
  if (j.d1.cross(j.d2).squaredNorm() <
      1e-20 * j.d1.squaredNorm() * j.d2.squaredNorm())
    throw precondition_error("cartan_apparatus: (T,N) is not a lightlike-plane basis");
  if (orient(T, N) > 0.0) {
    if (cd.eps == 1) {
      // Reflect the parameter (t -> -t): odd derivatives change sign. The
      // reflected curve keeps the same normalization and geometric trace.
      cd.flipped = true;
      T = -T;
      d3 = -d3;
      if (orient(T, N) > 0.0)
        throw numerical_error("cartan_apparatus: orientation repair failed");
    }
    // On a lightlike curve the pairing is invariant under reflection: a
    // past-directed tangent admits no binormal that both satisfies the
    // product constraints and closes a positively oriented frame. The frame
    // is still well defined and obeys the same moving-frame equations, so
    // it is reported with positively_oriented = false instead of failing.
  }

  // B = B0 + s*dir on the affine line <.,T> = -eta, <.,N> = -eps; the lightlike
  // direction orthogonal to both T and N is T (lightlike case) or N (semi-
  // lightlike case), so <B,dir> = -1 stays fixed along the line and the
  // lightlike condition <B,B> = 0 is linear in s.
  Eigen::Matrix<double, 2, 3> M;
  M.row(0) = Vector3d(T[0], T[1], -T[2]);
  M.row(1) = Vector3d(N[0], N[1], -N[2]);
  const Eigen::Vector2d rhs(-double(cd.eta), -double(cd.eps));
  const Vector3d B0 = M.completeOrthogonalDecomposition().solve(rhs);
  const Vector3d dir = cd.eps == 0 ? T : N;
  const double bd = inner3(amb, B0, dir);
  if (std::abs(bd) < 1e-12)
    throw numerical_error("cartan_apparatus: binormal line solve degenerated");
  const double s = -inner3(amb, B0, B0) / (2.0 * bd);
  const Vector3d B = B0 + s * dir;

  Matrix3d basis;
  basis.col(0) = T;
  basis.col(1) = N;
  basis.col(2) = B;
  const double det = basis.determinant();
  if (det == 0.0)
    throw numerical_error("cartan_apparatus: frame determinant vanished");
  cd.positively_oriented = det > 0.0;

  cd.T = T;
  cd.N = N;
  cd.B = B;
  cd.pseudo_torsion = -inner3(amb, d3, B);  // N' = alpha'''
  return cd;
}

Matrix3d cartan_rhs(const Matrix3d& frame, double ctorsion, bool semi_lightlike) {
  const Vector3d T = frame.col(0), N = frame.col(1), B = frame.col(2);
  Matrix3d d;
  d.col(0) = N;
  if (semi_lightlike) {
    d.col(1) = ctorsion * N;
    d.col(2) = T - ctorsion * B;
  } else {
    d.col(1) = ctorsion * T + B;
    d.col(2) = ctorsion * N;
  }
  return d;
}

}  // namespace mink
