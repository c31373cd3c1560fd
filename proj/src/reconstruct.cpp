#include "minkgeo/reconstruct.hpp"

#include <cmath>

#include "minkgeo/cartan.hpp"
#include "minkgeo/frenet.hpp"
#include "minkgeo/rk4.hpp"

namespace mink {

Vector6d frame_products(Ambient amb, const Matrix3d& frame) {
  const Vector3d T = frame.col(0), N = frame.col(1), B = frame.col(2);
  Vector6d a;
  a << inner3(amb, T, T), inner3(amb, N, N), inner3(amb, B, B), inner3(amb, T, N),
      inner3(amb, T, B), inner3(amb, N, B);
  return a;
}

namespace {

void validate_frame(const ReconstructionSpec& spec, int* eps_out, int* eta_out) {
  const Vector6d a = frame_products(spec.ambient, spec.frame0);
  const double tol = 1e-9;
  auto expect = [&](const Vector6d& want, const char* what) {
    if ((a - want).cwiseAbs().maxCoeff() > tol)
      throw precondition_error(std::string("reconstruct_curve: initial frame is not ") +
                               what);
  };
  switch (spec.kind) {
    case ReconstructKind::Lightlike: {
      Vector6d want;
      want << 0, 1, 0, 0, -1, 0;
      expect(want, "a Cartan frame of a lightlike curve");
      break;
    }
    case ReconstructKind::SemiLightlike: {
      Vector6d want;
      want << 1, 0, 0, 0, 0, -1;
      expect(want, "a Cartan frame of a semi-lightlike curve");
      break;
    }
    case ReconstructKind::Admissible: {
      const double tt = a[0], nn = a[1];
      if (std::abs(std::abs(tt) - 1.0) > tol || std::abs(std::abs(nn) - 1.0) > tol ||
          std::abs(a[3]) > tol || std::abs(a[4]) > tol || std::abs(a[5]) > tol)
        throw precondition_error(
            "reconstruct_curve: initial frame is not orthonormal");
      *eps_out = tt > 0 ? 1 : -1;
      *eta_out = nn > 0 ? 1 : -1;
      const int nu = signature_of(spec.ambient).nu;
      const double sB = (nu % 2 == 0 ? 1.0 : -1.0) * (*eps_out) * (*eta_out);
      const double bb_want = sB;  // <B,B> = eps_B = (-1)^nu eps eta
      if (std::abs(a[2] - bb_want) > tol)
        throw precondition_error("reconstruct_curve: binormal has wrong causal type");
      break;
    }
  }
  const double det = spec.frame0.determinant();
  if (spec.kind == ReconstructKind::Admissible) {
    if (det <= 0.0)
      throw precondition_error(
          "reconstruct_curve: initial frame is not positively oriented");
  } else if (det == 0.0) {
    // Cartan frames with a past-directed lightlike member legitimately have
    // det < 0; only a degenerate frame is rejected.
    throw precondition_error("reconstruct_curve: initial frame is degenerate");
  }
}

}  // namespace

ReconstructionResult reconstruct_curve(const ReconstructionSpec& spec) {
  if (spec.step <= 0.0) throw precondition_error("reconstruct_curve: step <= 0");
  if (spec.s1 <= spec.s0) throw precondition_error("reconstruct_curve: empty range");
  int eps = 1, eta = 1;
  validate_frame(spec, &eps, &eta);
  const int nu = signature_of(spec.ambient).nu;

  using State = Eigen::Matrix<double, 12, 1>;
  auto pack = [](const Vector3d& p, const Matrix3d& f) {
    State y;
    y.segment<3>(0) = p;
    y.segment<3>(3) = f.col(0);
    y.segment<3>(6) = f.col(1);
    y.segment<3>(9) = f.col(2);
    return y;
  };
  auto unpack_frame = [](const State& y) {
    Matrix3d f;
    f.col(0) = y.segment<3>(3);
    f.col(1) = y.segment<3>(6);
    f.col(2) = y.segment<3>(9);
    return f;
  };

  auto rhs = [&](double s, const State& y) -> State {
    const Matrix3d f = unpack_frame(y);
    Matrix3d df;
    switch (spec.kind) {
      case ReconstructKind::Admissible:
        df = frenet_rhs(f, spec.kappa(s), spec.tau(s), nu, eps, eta);
        break;
      case ReconstructKind::Lightlike:
        df = cartan_rhs(f, spec.ctorsion(s), false);
        break;
      case ReconstructKind::SemiLightlike:
        df = cartan_rhs(f, spec.ctorsion(s), true);
        break;
    }
    State d;
    d.segment<3>(0) = f.col(0);  // point follows T
    d.segment<3>(3) = df.col(0);
    d.segment<3>(6) = df.col(1);
    d.segment<3>(9) = df.col(2);
    return d;
  };

  ReconstructionResult res;
  res.initial_products = frame_products(spec.ambient, spec.frame0);
  const long steps = std::lround((spec.s1 - spec.s0) / spec.step);
  State y = pack(spec.p0, spec.frame0);
  res.params.reserve(steps + 1);
  res.points.reserve(steps + 1);
  res.frames.reserve(steps + 1);
  for (long i = 0; i <= steps; ++i) {
    const double s = spec.s0 + i * spec.step;
    const Matrix3d f = unpack_frame(y);
    res.params.push_back(s);
    res.points.push_back(y.segment<3>(0));
    res.frames.push_back(f);
    const Vector6d drift = frame_products(spec.ambient, f) - res.initial_products;
    res.max_product_drift = std::max(res.max_product_drift, drift.cwiseAbs().maxCoeff());
    if (i < steps) y = rk4_step(rhs, s, y, spec.step);
  }
  return res;
}

}  // namespace mink
