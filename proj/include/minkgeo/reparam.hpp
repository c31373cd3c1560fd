#pragma once

// Reparametrization by arclength (unit speed) or arc-photon parameter,
// via cumulative quadrature of a weight plus monotone Newton inversion.

#include "minkgeo/curve.hpp"

namespace mink {

enum class ReparamMode {
  UnitSpeed,  // weight |alpha'|;   requires the curve nowhere lightlike
  ArcPhoton,  // weight sqrt|alpha''|; requires a lightlike curve, alpha'' != 0
};

// New model in the normalized parameter. The new domain is
// [sigma(lo), sigma(hi)] with sigma anchored by sigma(lo) = lo.
CurveModel reparametrize(const CurveModel& c, ReparamMode mode);

// Parameter map sigma(t) of the reparametrization (exposed for tests: e.g.
// two arc-photon parameters of one curve differ by a constant).
std::function<double(double)> reparam_sigma(const CurveModel& c, ReparamMode mode);

}  // namespace mink
