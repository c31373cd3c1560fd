#pragma once

#include <optional>

#include "minkgeo/inner.hpp"
#include "minkgeo/types.hpp"

namespace mink {

// Causal relations between two events of L^n and, when defined, the
// hyperbolic angle between timelike directions.
struct CausalRelation {
  CausalClass separation_class = CausalClass::Spacelike;
  TimeOrientation separation_orientation = TimeOrientation::None;
  bool chronological = false;  // q - p timelike and future-directed
  bool causal = false;         // q - p non-spacelike and future-directed
  std::optional<double> hyperbolic_angle;  // between timelike directions
  std::optional<double> gamma;             // cosh(angle)
  std::optional<double> relative_speed;    // tanh(angle)
};

// Relation of q relative to p. The angle is reported when p and q are both
// timelike with equal time orientation (angle between the rays), or otherwise
// when q - p is timelike (angle between q - p and the time axis e_n).
CausalRelation causal_relations(const Vec& p, const Vec& q);

}  // namespace mink
