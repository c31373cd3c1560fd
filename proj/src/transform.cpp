#include "minkgeo/transform.hpp"

#include <algorithm>
#include <cmath>

#include "minkgeo/cross.hpp"

namespace mink {

namespace {

MatrixXd metric_matrix(const Signature& sig) {
  VectorXd d(sig.n);
  for (int i = 0; i < sig.n; ++i) d[i] = sig.weight(i);
  return d.asDiagonal();
}

}  // namespace

Nullspace3 nullspace3(const Matrix3d& m, double rel_tol) {
  const Vector3d r0 = m.row(0), r1 = m.row(1), r2 = m.row(2);
  const double row_scale =
      std::max({r0.squaredNorm(), r1.squaredNorm(), r2.squaredNorm()});
  Nullspace3 ns;
  if (row_scale <= rel_tol * rel_tol) {   // zero matrix
    ns.dim = 3;
    return ns;
  }
  const Vector3d c01 = r0.cross(r1), c02 = r0.cross(r2), c12 = r1.cross(r2);
  Vector3d best = c01;
  if (c02.squaredNorm() > best.squaredNorm()) best = c02;
  if (c12.squaredNorm() > best.squaredNorm()) best = c12;
  if (best.squaredNorm() > rel_tol * rel_tol * row_scale * row_scale) {
    ns.dim = 1;   // rank 2
    ns.v = best.normalized();
    return ns;
  }
  ns.dim = 2;     // rank 1 (rank 0 handled above)
  return ns;
}

PseudoOrthReport classify_transform(const MatrixXd& L, const Signature& sig,
                                    double tol) {
  if (L.rows() != L.cols()) throw precondition_error("classify_transform: non-square matrix");
  if (L.rows() != sig.n) throw signature_error("classify_transform: size != signature dimension");

  PseudoOrthReport rep;
  const MatrixXd g = metric_matrix(sig);
  const MatrixXd residual = L.transpose() * g * L - g;
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  rep.membership_residual = residual.cwiseAbs().maxCoeff();
  rep.is_member = rep.membership_residual <= tol * scale * scale;
  rep.det_total = L.determinant();

  const int p = sig.n - sig.nu;
  rep.det_spatial = p > 0 ? L.topLeftCorner(p, p).determinant() : 1.0;
  rep.det_temporal = sig.nu > 0 ? L.bottomRightCorner(sig.nu, sig.nu).determinant() : 1.0;

  if (!rep.is_member) return rep;

  const bool s_pos = rep.det_spatial > 0, t_pos = rep.det_temporal > 0;
  rep.component = s_pos ? (t_pos ? Component::PlusUp : Component::PlusDown)
                        : (t_pos ? Component::MinusUp : Component::MinusDown);

  if (sig.nu != 1 || rep.component != Component::PlusUp) return rep;

  if (sig.n == 2) {
    // Identity component of O_1(2): cosh/sinh matrix. The angle sign follows
    // the lower-left entry.
    rep.angle = std::asinh(L(1, 0));
    rep.note = "angle convention: Lambda_21 = sinh(phi)";
    return rep;
  }

  if (sig.n == 3) {
    const Matrix3d A = L.topLeftCorner<3, 3>();
    const Matrix3d shifted = A - Matrix3d::Identity();
    if (shifted.cwiseAbs().maxCoeff() <= tol * scale) {
      rep.conjugacy = Conjugacy::Elliptic;  // identity = rotation by 0
      rep.angle = 0.0;
      rep.note = "identity transform reported as elliptic with angle 0";
      return rep;
    }
    const Nullspace3 fixed = nullspace3(shifted);
    if (fixed.dim != 1) {
      rep.note = "eigenspace of 1 is not one-dimensional; no conjugacy label";
      return rep;
    }
    const CausalRecord c = causal_character3(Ambient::Lorentz3, fixed.v);
    const double half = 0.5 * (A.trace() - 1.0);
    switch (c.cls) {
      case CausalClass::Spacelike:
        rep.conjugacy = Conjugacy::Hyperbolic;
        rep.angle = std::acosh(std::max(1.0, half));
        rep.axis = fixed.v / c.fake_norm;
        break;
      case CausalClass::Timelike:
        rep.conjugacy = Conjugacy::Elliptic;
        rep.angle = std::acos(std::clamp(half, -1.0, 1.0));
        rep.axis = fixed.v / c.fake_norm;
        break;
      case CausalClass::Lightlike:
        rep.conjugacy = Conjugacy::Parabolic;
        rep.axis = fixed.v;  // lightlike axes have no unit normalization
        rep.note = "parabolic members have no conjugation-invariant angle";
        break;
    }
  }
  return rep;
}

BoostEigen restricted_eigenvalues(const Matrix3d& L) {
  BoostEigen be;
  const double b = L.trace() - 1.0;  // sum of the two non-unit eigenvalues
  const double disc = b * b - 4.0;
  if (disc <= 0) return be;          // elliptic or parabolic: complex/repeated
  be.real_pair = true;
  be.lambda = 0.5 * (b + std::sqrt(disc));
  return be;
}

HyperbolicFrame hyperbolic_frame(const Matrix3d& L) {
  const PseudoOrthReport rep = classify_transform(L, kLorentz3);
  if (!rep.is_member || rep.component != Component::PlusUp)
    throw precondition_error("hyperbolic_frame: matrix is not in the identity component of O_1(3)");
  const BoostEigen be = restricted_eigenvalues(L);
  if (!be.real_pair || be.lambda <= 1.0 + 1e-12)
    throw precondition_error("hyperbolic_frame: transform is not hyperbolic");

  auto eigvec = [&](double mu) {
    const Nullspace3 ns = nullspace3(L - mu * Matrix3d::Identity());
    if (ns.dim != 1) throw numerical_error("hyperbolic_frame: eigenvector extraction failed");
    return ns.v;
  };

  HyperbolicFrame fr;
  fr.lambda = be.lambda;
  fr.v_lambda = eigvec(be.lambda);
  fr.v_inv_lambda = eigvec(1.0 / be.lambda);
  fr.v1 = eigvec(1.0);

  // Lightlike eigenvectors oriented to the future (positive last coordinate).
  if (fr.v_lambda[2] < 0) fr.v_lambda = -fr.v_lambda;
  if (fr.v_inv_lambda[2] < 0) fr.v_inv_lambda = -fr.v_inv_lambda;

  // Unit spacelike fixed vector, signed so the basis is positively oriented.
  const CausalRecord c1 = causal_character3(Ambient::Lorentz3, fr.v1);
  if (c1.cls != CausalClass::Spacelike)
    throw numerical_error("hyperbolic_frame: fixed eigenvector is not spacelike");
  fr.v1 /= c1.fake_norm;
  Matrix3d basis;
  basis.col(0) = fr.v_lambda;
  basis.col(1) = fr.v1;
  basis.col(2) = fr.v_inv_lambda;
  if (basis.determinant() < 0) fr.v1 = -fr.v1;
  return fr;
}

double margulis_invariant(const Matrix3d& L, const Vector3d& w) {
  const HyperbolicFrame fr = hyperbolic_frame(L);
  return inner3(Ambient::Lorentz3, w, fr.v1);
}

}  // namespace mink
