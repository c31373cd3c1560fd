#include "minkgeo/curve.hpp"

#include <cmath>

#include "minkgeo/cross.hpp"

namespace mink {

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Admissible: return "admissible";
    case CurveKind::Lightlike: return "lightlike";
    case CurveKind::SemiLightlike: return "semi-lightlike";
    case CurveKind::Other: return "other";
  }
  return "?";
}

CurveModel curve_from_positions(std::function<Vector3d(double)> pos, Interval domain,
                                Ambient ambient, double h) {
  CurveModel m;
  m.domain = domain;
  m.ambient = ambient;
  m.eval = [pos = std::move(pos), h](double t) {
    const Vector3d pm2 = pos(t - 2 * h), pm1 = pos(t - h), p0 = pos(t),
                   pp1 = pos(t + h), pp2 = pos(t + 2 * h);
    CurveJet j;
    j.p = p0;
    j.d1 = (pm2 - 8.0 * pm1 + 8.0 * pp1 - pp2) / (12.0 * h);
    j.d2 = (pm1 - 2.0 * p0 + pp1) / (h * h);
    j.d3 = (-pm2 + 2.0 * pm1 - 2.0 * pp1 + pp2) / (-2.0 * h * h * h);
    return j;
  };
  return m;
}

namespace {

bool independent(const Vector3d& a, const Vector3d& b) {
  const double scale = a.norm() * b.norm();
  return a.cross(b).norm() > 1e-10 * std::max(scale, 1e-300);
}

// |det of the restricted Gram| relative to the Euclidean scale of the plane.
bool osculating_plane_degenerate(Ambient amb, const Vector3d& d1, const Vector3d& d2) {
  const double a = inner3(amb, d1, d1), b = inner3(amb, d1, d2), c = inner3(amb, d2, d2);
  const double det = a * c - b * b;
  const double scale = d1.squaredNorm() * d2.squaredNorm();
  return std::abs(det) <= kCausalTol * std::max(scale, 1e-300);
}

}  // namespace

CurveKind curve_kind_at(const CurveModel& c, double t) {
  const CurveJet j = c.eval(t);
  if (j.d1.squaredNorm() == 0.0)
    throw precondition_error("curve_kind_at: non-regular point");
  const CausalClass tangent = causal_character3(c.ambient, j.d1).cls;
  const bool bireg = independent(j.d1, j.d2);
  if (tangent == CausalClass::Lightlike)
    return bireg ? CurveKind::Lightlike : CurveKind::Other;
  if (!bireg) return CurveKind::Other;
  if (osculating_plane_degenerate(c.ambient, j.d1, j.d2))
    return tangent == CausalClass::Spacelike ? CurveKind::SemiLightlike : CurveKind::Other;
  return CurveKind::Admissible;
}

CurveClassification classify_curve(const CurveModel& c, int samples) {
  if (samples < 2) throw precondition_error("classify_curve: need at least 2 samples");
  CurveClassification out;
  out.biregular = true;
  out.admissible = true;
  bool same_class = true, same_kind = true;
  std::optional<CurveKind> kind;
  for (int i = 0; i < samples; ++i) {
    const double t = c.domain.lo + c.domain.length() * i / (samples - 1);
    const CurveJet j = c.eval(t);
    if (j.d1.squaredNorm() == 0.0)
      throw precondition_error("classify_curve: non-regular point");
    const CausalClass cls = causal_character3(c.ambient, j.d1).cls;
    out.params.push_back(t);
    out.tangent_classes.push_back(cls);
    if (cls != out.tangent_classes.front()) same_class = false;

    const bool bireg = independent(j.d1, j.d2);
    out.biregular = out.biregular && bireg;
    const bool tangent_ok = cls != CausalClass::Lightlike;
    const bool plane_ok = !osculating_plane_degenerate(c.ambient, j.d1, j.d2);
    out.admissible = out.admissible && bireg && tangent_ok && plane_ok;

    const CurveKind k = curve_kind_at(c, t);
    if (!kind) kind = k;
    else if (*kind != k) same_kind = false;
  }
  if (same_class) out.constant_class = out.tangent_classes.front();
  if (same_kind) out.kind = kind;
  return out;
}

}  // namespace mink
