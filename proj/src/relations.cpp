#include "minkgeo/relations.hpp"

#include <cmath>

namespace mink {

CausalRelation causal_relations(const Vec& p, const Vec& q) {
  if (!(p.sig == q.sig)) throw signature_error("causal_relations: mismatched signatures");
  if (p.sig.nu != 1) throw signature_error("causal_relations: requires index 1");
  const int n = p.sig.n;

  CausalRelation rel;
  const VectorXd d = q.coords - p.coords;
  if (d.squaredNorm() == 0.0) {
    rel.separation_class = CausalClass::Lightlike;  // zero separation
    return rel;
  }

  Vec dv{d, p.sig};
  const CausalRecord rec = causal_character(dv);
  rel.separation_class = rec.cls;
  rel.separation_orientation = time_orientation(dv);

  const bool future = rel.separation_orientation == TimeOrientation::Future;
  rel.chronological = future && rec.cls == CausalClass::Timelike;
  rel.causal = future && rec.cls != CausalClass::Spacelike;

  // Angle between two timelike rays with the same time orientation.
  auto try_vectors = [&]() -> bool {
    if (p.coords.squaredNorm() == 0.0 || q.coords.squaredNorm() == 0.0) return false;
    const CausalRecord cp = causal_character(p);
    const CausalRecord cq = causal_character(q);
    if (cp.cls != CausalClass::Timelike || cq.cls != CausalClass::Timelike) return false;
    if (time_orientation(p) != time_orientation(q)) return false;
    const double c = std::abs(inner(p, q)) / (cp.fake_norm * cq.fake_norm);
    rel.hyperbolic_angle = std::acosh(std::max(1.0, c));
    return true;
  };
  // Angle between a timelike separation and the time axis.
  auto try_separation = [&]() -> bool {
    if (rec.cls != CausalClass::Timelike) return false;
    const double c = std::abs(d[n - 1]) / rec.fake_norm;
    rel.hyperbolic_angle = std::acosh(std::max(1.0, c));
    return true;
  };

  if (try_vectors() || try_separation()) {
    rel.gamma = std::cosh(*rel.hyperbolic_angle);
    rel.relative_speed = std::tanh(*rel.hyperbolic_angle);
  }
  return rel;
}

}  // namespace mink
