#include "minkgeo/umbilic.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "minkgeo/inner.hpp"

namespace mink {

const char* to_string(UmbilicShape s) {
  switch (s) {
    case UmbilicShape::Plane: return "plane";
    case UmbilicShape::PositiveQuadrance: return "quadric <p-c,p-c> = +r^2";
    case UmbilicShape::NegativeQuadrance: return "quadric <p-c,p-c> = -r^2";
  }
  return "?";
}

namespace {

struct Sample {
  Vector3d p, n;
  double lambda;
};

Vector3d metric_weights(Ambient amb) {
  const Signature sig = signature_of(amb);
  return Vector3d(sig.weight(0), sig.weight(1), sig.weight(2));
}

}  // namespace

UmbilicReport umbilic_surface_check(const SurfaceModel& m, int n_u, int n_v,
                                    double umbilic_tol) {
  if (n_u < 2 || n_v < 2) throw precondition_error("umbilic check needs a 2x2 grid at least");

  const Vector3d w = metric_weights(m.ambient);
  auto quad = [&w](const Vector3d& a) { return a.dot(w.asDiagonal() * a); };

  std::vector<Sample> samples;
  samples.reserve(static_cast<size_t>(n_u) * n_v);
  UmbilicReport rep;

  for (int i = 0; i < n_u; ++i) {
    const double u = m.domain.u.lo + m.domain.u.length() * i / (n_u - 1);
    for (int j = 0; j < n_v; ++j) {
      const double v = m.domain.v.lo + m.domain.v.length() * j / (n_v - 1);
      const CurvatureReport cr = curvatures(m, u, v);
      const double lambda = 0.5 * cr.shape.trace();
      const double dev = (cr.shape - lambda * Matrix2d::Identity()).norm() /
                         std::max(1.0, cr.shape.norm());
      rep.max_umbilic_deviation = std::max(rep.max_umbilic_deviation, dev);
      if (dev > umbilic_tol)
        throw precondition_error("patch is not totally umbilic");
      samples.push_back({m.eval(u, v).value, *cr.forms.normal, lambda});
    }
  }

  double max_abs_lambda = 0;
  for (const Sample& s : samples) max_abs_lambda = std::max(max_abs_lambda, std::abs(s.lambda));

  if (max_abs_lambda <= 1e-8) {
    // Vanishing shape operator: planar patch.  Verify a constant normal and
    // incidence of every sample with the plane through the first one.
    rep.shape = UmbilicShape::Plane;
    const Vector3d n0 = samples.front().n;
    const Vector3d p0 = samples.front().p;
    for (const Sample& s : samples) {
      rep.max_membership_residual = std::max(
          {rep.max_membership_residual, (s.n - n0).norm(),
           std::abs(inner3(m.ambient, s.p - p0, n0)) / std::max(1.0, s.p.norm())});
    }
    return rep;
  }

  // Quadric fit: differencing <p,p> - 2<p,c> = const across four samples
  // eliminates the quadratic term and leaves a 3x3 linear system for c.
  const std::array<std::array<size_t, 4>, 3> candidate_sets = {{
      {0, static_cast<size_t>(n_v - 1), samples.size() - static_cast<size_t>(n_v),
       samples.size() - 1},
      {0, static_cast<size_t>(n_v - 1), samples.size() / 2, samples.size() - 1},
      {0, static_cast<size_t>(n_v / 2), samples.size() / 2,
       samples.size() - 1 - static_cast<size_t>(n_v / 2)},
  }};

  Vector3d center = Vector3d::Zero();
  bool solved = false;
  for (const auto& idx : candidate_sets) {
    const Vector3d p0 = samples[idx[0]].p;
    Matrix3d A;
    Vector3d b;
    for (int k = 0; k < 3; ++k) {
      const Vector3d pk = samples[idx[k + 1]].p;
      A.row(k) = 2 * (w.asDiagonal() * (pk - p0)).transpose();
      b[k] = quad(pk) - quad(p0);
    }
    double rowscale = 1;
    for (int k = 0; k < 3; ++k) rowscale *= std::max(A.row(k).norm(), 1e-30);
    if (std::abs(A.determinant()) <= 1e-10 * rowscale) continue;
    center = A.colPivHouseholderQr().solve(b);
    solved = true;
    break;
  }
  if (!solved) throw numerical_error("quadric fit points are nearly coplanar");

  rep.center = center;
  rep.signed_r2 = quad(samples.front().p - center);
  if (std::abs(rep.signed_r2) <= 1e-12)
    throw numerical_error("fitted quadric has vanishing radius");
  rep.shape = rep.signed_r2 > 0 ? UmbilicShape::PositiveQuadrance
                                : UmbilicShape::NegativeQuadrance;
  rep.radius = std::sqrt(std::abs(rep.signed_r2));

  const double scale = std::max(1.0, std::abs(rep.signed_r2));
  for (const Sample& s : samples) {
    rep.max_membership_residual =
        std::max(rep.max_membership_residual,
                 std::abs(quad(s.p - center) - rep.signed_r2) / scale);
    rep.center_consistency = std::max(
        rep.center_consistency, (s.p + s.n / s.lambda - center).norm());
  }
  return rep;
}

}  // namespace mink
