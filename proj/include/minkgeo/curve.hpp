#pragma once

// Curve models carrying exact order-3 jets, and causal classification of
// curves in R^3 and L^3.

#include <functional>
#include <optional>
#include <vector>

#include "minkgeo/inner.hpp"
#include "minkgeo/jets.hpp"
#include "minkgeo/types.hpp"

namespace mink {

// Position and first three parameter derivatives at one parameter value.
struct CurveJet {
  Vector3d p, d1, d2, d3;
};

inline CurveJet pack_jets(const Jet3d& x, const Jet3d& y, const Jet3d& z) {
  return {{x.f, y.f, z.f}, {x.d1, y.d1, z.d1}, {x.d2, y.d2, z.d2}, {x.d3, y.d3, z.d3}};
}

struct CurveModel {
  std::function<CurveJet(double)> eval;
  Interval domain{0.0, 1.0};
  Ambient ambient = Ambient::Lorentz3;
};

// Wraps a black-box position function with central-difference jets
// (step 1e-4; accuracy roughly 1e-8 on d1, degrading to ~1e-4 on d3).
CurveModel curve_from_positions(std::function<Vector3d(double)> pos, Interval domain,
                                Ambient ambient, double h = 1e-4);

// How a curve interacts with the metric, constant over the sampled range.
enum class CurveKind { Admissible, Lightlike, SemiLightlike, Other };
std::string to_string(CurveKind k);

struct CurveClassification {
  std::vector<double> params;
  std::vector<CausalClass> tangent_classes;  // of alpha' per sample
  std::optional<CausalClass> constant_class;
  bool biregular = false;   // {alpha', alpha''} independent at all samples
  bool admissible = false;  // biregular + tangent line and osculating plane non-degenerate
  std::optional<CurveKind> kind;  // when consistent across samples
};

// Samples the curve uniformly over its domain and classifies it.
// Throws precondition_error at a non-regular sample (alpha' = 0).
CurveClassification classify_curve(const CurveModel& c, int samples);

// Pointwise kind: admissible / lightlike / semi-lightlike / other.
CurveKind curve_kind_at(const CurveModel& c, double t);

}  // namespace mink
