#include "minkgeo/helix.hpp"

#include <cmath>

#include "minkgeo/cartan.hpp"
#include "minkgeo/frenet.hpp"

namespace mink {

namespace {

bool nearly_constant(const std::vector<double>& xs, double tol) {
  double lo = xs.front(), hi = xs.front();
  for (double x : xs) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi - lo <= tol * std::max(1.0, std::abs(0.5 * (hi + lo)));
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / xs.size();
}

std::string admissible_family(Ambient amb, int eps, int eta, double kappa, double tau,
                              double tie_tol) {
  if (amb == Ambient::Euclidean3) return "beta1";
  const double at = std::abs(tau);
  const bool tie = std::abs(kappa - at) <= tie_tol * std::max(1.0, kappa);
  if (eps == -1) {  // timelike helix
    if (tie) return "beta5";
    return kappa > at ? "beta3" : "beta2";
  }
  if (eta == -1) return "beta4";  // spacelike, timelike normal
  // spacelike, timelike binormal
  if (tie) return "beta6";
  return kappa < at ? "beta3" : "beta2";
}

}  // namespace

HelixReport helix_classify(const CurveModel& c, int samples, double tol) {
  if (samples < 2) throw precondition_error("helix_classify: need at least 2 samples");
  const double mid = c.domain.mid();
  const CurveKind kind = curve_kind_at(c, mid);
  const int nu = signature_of(c.ambient).nu;

  HelixReport rep;
  if (kind == CurveKind::Lightlike) {
    std::vector<double> cs;
    CartanData at_mid{};
    for (int i = 0; i < samples; ++i) {
      const double t = c.domain.lo + c.domain.length() * i / (samples - 1);
      const CartanData cd = cartan_apparatus(c, t);
      cs.push_back(cd.pseudo_torsion);
      if (i == samples / 2) at_mid = cd;
    }
    rep.invariant_ratio = mean(cs);
    rep.is_helix = nearly_constant(cs, tol);
    if (!rep.is_helix) return rep;
    const double ct = rep.invariant_ratio;
    if (std::abs(ct) <= 1e-9) {
      rep.axis = at_mid.B;  // B is constant when the pseudo-torsion vanishes
      rep.axis_class = CausalClass::Lightlike;
      rep.conjugacy = Conjugacy::Parabolic;
      rep.family = "gamma3";
    } else {
      rep.axis = at_mid.T - (1.0 / ct) * at_mid.B;  // <axis,axis> = 2/ct
      rep.axis_class = causal_character3(c.ambient, *rep.axis).cls;
      rep.conjugacy = ct > 0 ? Conjugacy::Hyperbolic : Conjugacy::Elliptic;
      rep.family = ct > 0 ? "gamma1" : "gamma2";
    }
    return rep;
  }

  if (kind != CurveKind::Admissible)
    throw precondition_error("helix_classify: curve is neither admissible nor lightlike");

  std::vector<double> ks, ts, ratios;
  FrenetData at_mid{};
  for (int i = 0; i < samples; ++i) {
    const double s = c.domain.lo + c.domain.length() * i / (samples - 1);
    const FrenetData fd = frenet_apparatus(c, s);
    ks.push_back(fd.kappa);
    ts.push_back(fd.tau);
    ratios.push_back(fd.tau / fd.kappa);
    if (i == samples / 2) at_mid = fd;
  }
  rep.kappa_mean = mean(ks);
  rep.tau_mean = mean(ts);
  rep.invariant_ratio = mean(ratios);
  rep.is_helix = nearly_constant(ratios, tol);
  if (!rep.is_helix) return rep;

  const double ratio = rep.invariant_ratio;
  if (std::abs(ratio) <= 1e-9) {
    rep.axis = at_mid.B;  // planar curve: B itself is the axis
  } else {
    const double sgn = nu % 2 == 0 ? 1.0 : -1.0;
    rep.axis = at_mid.T + (sgn * at_mid.eps / ratio) * at_mid.B;
  }
  rep.axis_class = causal_character3(c.ambient, *rep.axis).cls;
  if (c.ambient == Ambient::Lorentz3) {
    switch (*rep.axis_class) {
      case CausalClass::Spacelike: rep.conjugacy = Conjugacy::Hyperbolic; break;
      case CausalClass::Timelike: rep.conjugacy = Conjugacy::Elliptic; break;
      case CausalClass::Lightlike: rep.conjugacy = Conjugacy::Parabolic; break;
    }
  }
  if (nearly_constant(ks, tol) && nearly_constant(ts, tol))
    rep.family =
        admissible_family(c.ambient, at_mid.eps, at_mid.eta, rep.kappa_mean,
                          std::abs(rep.tau_mean) < 1e-12 ? 0.0 : rep.tau_mean, 1e-8);
  return rep;
}

}  // namespace mink
