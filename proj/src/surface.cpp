#include "minkgeo/surface.hpp"

#include <cmath>

#include "minkgeo/cross.hpp"

namespace mink {

const char* to_string(Diagonalizable d) {
  switch (d) {
    case Diagonalizable::Yes: return "yes";
    case Diagonalizable::No: return "no";
    case Diagonalizable::Inconclusive: return "inconclusive";
  }
  return "?";
}

SurfaceModel surface_from_positions(std::function<Vector3d(double, double)> pos,
                                    Rect domain, Ambient ambient, double h) {
  SurfaceModel m;
  m.domain = domain;
  m.ambient = ambient;
  m.eval = [pos = std::move(pos), h](double u, double v) {
    const Vector3d p00 = pos(u, v);
    const Vector3d pu1 = pos(u + h, v), pu_1 = pos(u - h, v);
    const Vector3d pv1 = pos(u, v + h), pv_1 = pos(u, v - h);
    const Vector3d ppp = pos(u + h, v + h), ppm = pos(u + h, v - h),
                   pmp = pos(u - h, v + h), pmm = pos(u - h, v - h);
    SurfaceJet j;
    j.value = p00;
    j.du = (pu1 - pu_1) / (2.0 * h);
    j.dv = (pv1 - pv_1) / (2.0 * h);
    j.duu = (pu1 - 2.0 * p00 + pu_1) / (h * h);
    j.dvv = (pv1 - 2.0 * p00 + pv_1) / (h * h);
    j.duv = (ppp - ppm - pmp + pmm) / (4.0 * h * h);
    return j;
  };
  return m;
}

SurfaceModel graph_surface(std::function<ScalarJet2(double, double)> f, Rect domain,
                           Ambient ambient) {
  SurfaceModel m;
  m.domain = domain;
  m.ambient = ambient;
  m.eval = [f = std::move(f)](double u, double v) {
    const ScalarJet2 s = f(u, v);
    SurfaceJet j;
    j.value = {u, v, s.f};
    j.du = {1, 0, s.fu};
    j.dv = {0, 1, s.fv};
    j.duu = {0, 0, s.fuu};
    j.duv = {0, 0, s.fuv};
    j.dvv = {0, 0, s.fvv};
    return j;
  };
  return m;
}

FundamentalForms fundamental_forms(const SurfaceModel& m, double u, double v,
                                   double tol) {
  const SurfaceJet j = m.eval(u, v);
  const double scale =
      std::max(j.du.squaredNorm() * j.dv.squaredNorm(), 1e-300);
  if (j.du.cross(j.dv).squaredNorm() <= 1e-20 * scale)
    throw precondition_error("fundamental_forms: irregular point (dependent partials)");

  FundamentalForms ff;
  ff.E = inner3(m.ambient, j.du, j.du);
  ff.F = inner3(m.ambient, j.du, j.dv);
  ff.G = inner3(m.ambient, j.dv, j.dv);
  const double den = ff.E * ff.G - ff.F * ff.F;

  if (std::abs(den) <= tol * scale) {
    ff.degenerate = true;
    ff.surface_class = CausalClass::Lightlike;
    return ff;
  }
  if (den > 0.0 && ff.E < 0.0)
    // Negative-definite tangent plane; possible only with ambient index 2,
    // outside the spacelike/timelike/lightlike trichotomy.
    throw precondition_error("fundamental_forms: negative-definite tangent plane");
  ff.surface_class = den > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;

  const Vector3d c = cross3(m.ambient, j.du, j.dv);
  const double q = inner3(m.ambient, c, c);
  const Vector3d N = c / std::sqrt(std::abs(q));
  ff.normal = N;
  ff.eps_M = q > 0 ? 1 : -1;
  ff.e = inner3(m.ambient, j.duu, N);
  ff.f = inner3(m.ambient, j.duv, N);
  ff.g = inner3(m.ambient, j.dvv, N);
  return ff;
}

CausalClass tangent_causal_class(const FundamentalForms& ff, const Vector2d& w,
                                 double tol) {
  if (w.squaredNorm() == 0.0)
    throw precondition_error("tangent_causal_class: zero vector");
  const double q = ff.E * w[0] * w[0] + 2.0 * ff.F * w[0] * w[1] + ff.G * w[1] * w[1];
  const double scale =
      (std::abs(ff.E) + 2.0 * std::abs(ff.F) + std::abs(ff.G)) * w.squaredNorm();
  return classify_quadrance(q, scale, tol);
}

namespace {

// Unit null vector of the 2x2 matrix A (assumed rank <= 1): from the row of
// larger norm, (a b) w = 0 gives w = (-b, a).
Vector2d null_direction(const Matrix2d& A) {
  const Vector2d r0 = A.row(0), r1 = A.row(1);
  const Vector2d r = r0.squaredNorm() >= r1.squaredNorm() ? r0 : r1;
  const Vector2d w{-r[1], r[0]};
  const double n = w.norm();
  if (n == 0.0) return {1.0, 0.0};  // zero matrix: every direction works
  return w / n;
}

}  // namespace

CurvatureReport curvatures(const SurfaceModel& m, double u, double v,
                           double tie_tol) {
  CurvatureReport r;
  r.forms = fundamental_forms(m, u, v);
  if (r.forms.degenerate)
    throw precondition_error("curvatures: degenerate (lightlike) surface point");
  const FundamentalForms& ff = r.forms;
  const double eps = *ff.eps_M;
  const double den = ff.E * ff.G - ff.F * ff.F;

  r.H = 0.5 * eps * (ff.E * ff.g + ff.e * ff.G - 2.0 * ff.F * ff.f) / den;
  r.K = eps * (ff.e * ff.g - ff.f * ff.f) / den;
  r.discriminant = r.H * r.H - eps * r.K;

  Matrix2d I, II;
  I << ff.E, ff.F, ff.F, ff.G;
  II << ff.e, ff.f, ff.f, ff.g;
  r.shape = I.inverse() * II;

  const double curv_scale = std::max(1.0, r.H * r.H + std::abs(r.K));
  if (std::abs(r.discriminant) <= tie_tol * curv_scale) {
    // Double eigenvalue eps*H of the shape operator.
    const double k = eps * r.H;
    if (ff.surface_class == CausalClass::Spacelike) {
      // A symmetric operator on a definite plane is always diagonalizable,
      // so the double root forces a scalar shape operator.
      r.diagonalizable = Diagonalizable::Yes;
      r.umbilic = true;
      r.principal = PrincipalData{k, k, {1, 0}, {0, 1}};
      return r;
    }
    // Timelike sheet: scalar shape matrix means umbilic; otherwise the lone
    // eigendirection is lightlike and the discriminant test cannot decide.
    const Matrix2d dev = r.shape - k * Matrix2d::Identity();
    const double shape_scale = std::max(r.shape.norm(), 1.0);
    if (dev.norm() <= 1e-8 * shape_scale) {
      r.diagonalizable = Diagonalizable::Yes;
      r.umbilic = true;
      r.principal = PrincipalData{k, k, {1, 0}, {0, 1}};
    } else {
      r.diagonalizable = Diagonalizable::Inconclusive;
    }
    return r;
  }

  if (r.discriminant < 0.0) {
    r.diagonalizable = Diagonalizable::No;
    return r;
  }

  // Distinct real eigenvalues: roots of t^2 - 2 eps H t + eps K.
  const double s = std::sqrt(r.discriminant);
  PrincipalData pd;
  pd.k1 = eps * r.H - s;
  pd.k2 = eps * r.H + s;
  pd.dir1 = null_direction(r.shape - pd.k1 * Matrix2d::Identity());
  pd.dir2 = null_direction(r.shape - pd.k2 * Matrix2d::Identity());
  r.diagonalizable = Diagonalizable::Yes;
  r.principal = pd;
  return r;
}

}  // namespace mink
