#include "minkgeo/standard_curves.hpp"

#include <cmath>

namespace mink {

namespace {

constexpr Interval kWideDomain{-20.0, 20.0};
// For curves with cosh/sinh/exp components: keeps coordinates small enough
// that scale-relative causal classification stays sharp.
constexpr Interval kGrowthDomain{-5.0, 5.0};

CurveModel model(Ambient amb, Interval dom, std::function<CurveJet(double)> eval) {
  CurveModel m;
  m.ambient = amb;
  m.domain = dom;
  m.eval = std::move(eval);
  return m;
}

double get(const std::map<std::string, double>& p, const std::string& key, double dflt) {
  const auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

}  // namespace

CurveModel beta1(double a, double b) {
  if (a == 0.0) throw precondition_error("beta1: requires a != 0");
  const double c = std::hypot(a, b);
  return model(Ambient::Euclidean3, kWideDomain, [a, b, c](double s) {
    const Jet3d u = Jet3d::variable(s) / c;
    return pack_jets(a * cos(u), a * sin(u), b * u);
  });
}

CurveModel beta2(double a, double b) {
  if (a == 0.0 || std::abs(a) == std::abs(b))
    throw precondition_error("beta2: requires a != 0 and |a| != |b|");
  const double c = std::sqrt(std::abs(a * a - b * b));
  return model(Ambient::Lorentz3, kWideDomain, [a, b, c](double s) {
    const Jet3d u = Jet3d::variable(s) / c;
    return pack_jets(a * cos(u), a * sin(u), b * u);
  });
}

CurveModel beta3(double a, double b) {
  if (a == 0.0 || std::abs(a) == std::abs(b))
    throw precondition_error("beta3: requires a != 0 and |a| != |b|");
  const double c = std::sqrt(std::abs(a * a - b * b));
  return model(Ambient::Lorentz3, kGrowthDomain, [a, b, c](double s) {
    const Jet3d u = Jet3d::variable(s) / c;
    return pack_jets(b * u, a * cosh(u), a * sinh(u));
  });
}

CurveModel beta4(double a, double b) {
  if (a == 0.0) throw precondition_error("beta4: requires a != 0");
  const double c = std::hypot(a, b);
  return model(Ambient::Lorentz3, kGrowthDomain, [a, b, c](double s) {
    const Jet3d u = Jet3d::variable(s) / c;
    return pack_jets(b * u, a * sinh(u), a * cosh(u));
  });
}

CurveModel beta5(double a) {
  if (a == 0.0) throw precondition_error("beta5: requires a != 0");
  return model(Ambient::Lorentz3, kWideDomain, [a](double s) {
    const Jet3d u = Jet3d::variable(s);
    const Jet3d cubic = (a * a / 6.0) * u * u * u;
    return pack_jets((a / 2.0) * u * u, cubic, u + cubic);
  });
}

CurveModel beta6(double a) {
  if (a == 0.0) throw precondition_error("beta6: requires a != 0");
  return model(Ambient::Lorentz3, kWideDomain, [a](double s) {
    const Jet3d u = Jet3d::variable(s);
    const Jet3d cubic = (a * a / 6.0) * u * u * u;
    return pack_jets((a / 2.0) * u * u, u - cubic, -cubic);
  });
}

CurveModel gamma1(double r) {
  if (r <= 0.0) throw precondition_error("gamma1: requires r > 0");
  const double sr = std::sqrt(r);
  return model(Ambient::Lorentz3, kGrowthDomain, [r, sr](double phi) {
    const Jet3d u = Jet3d::variable(phi);
    const Jet3d arg = u / sr;
    return pack_jets(sr * u, r * cosh(arg), r * sinh(arg));
  });
}

CurveModel gamma2(double r) {
  if (r <= 0.0) throw precondition_error("gamma2: requires r > 0");
  const double sr = std::sqrt(r);
  return model(Ambient::Lorentz3, kWideDomain, [r, sr](double phi) {
    const Jet3d u = Jet3d::variable(phi);
    const Jet3d arg = u / sr;
    return pack_jets(r * cos(arg), r * sin(arg), sr * u);
  });
}

CurveModel gamma3() {
  return model(Ambient::Lorentz3, kWideDomain, [](double phi) {
    const Jet3d u = Jet3d::variable(phi);
    const Jet3d cubic = 0.25 * u * u * u;
    const Jet3d lin = u / 3.0;
    return pack_jets(-cubic + lin, 0.5 * u * u, -cubic - lin);
  });
}

CurveModel horocycle(double c) {
  if (c >= 0.0) throw precondition_error("horocycle: requires c < 0");
  // w2 = (0, sinh th, cosh th) is unit timelike with <w2,v> = -e^{-th} = c.
  const double th = -std::log(-c);
  const Vector3d v(0, 1, 1), w1(1, 0, 0), w2(0, std::sinh(th), std::cosh(th));
  return model(Ambient::Lorentz3, kWideDomain, [c, v, w1, w2](double s) {
    CurveJet j;
    j.p = -(s * s / (2 * c)) * v + s * w1 + w2;
    j.d1 = -(s / c) * v + w1;
    j.d2 = -(1.0 / c) * v;
    j.d3 = Vector3d::Zero();
    return j;
  });
}

CurveModel semi_lightlike_graph(std::function<Jet3d(double)> f, Interval domain) {
  return model(Ambient::Lorentz3, domain, [f = std::move(f)](double s) {
    const Jet3d y = f(s);
    return pack_jets(Jet3d::variable(s), y, y);
  });
}

CurveModel graph_cosh() {
  return semi_lightlike_graph([](double s) { return cosh(Jet3d::variable(s)); },
                              kGrowthDomain);
}

CurveModel semi_lightlike_exp(double ct, double a, double b_coef, double c_coef,
                              double d_coef) {
  if (ct == 0.0) throw precondition_error("semi_lightlike_exp: requires ct != 0");
  if (b_coef == 0.0) throw precondition_error("semi_lightlike_exp: requires b != 0");
  return model(Ambient::Lorentz3, kGrowthDomain, [=](double s) {
    const Jet3d u = Jet3d::variable(s);
    const Jet3d y = (b_coef / (ct * ct)) * exp(ct * u) + c_coef * u + Jet3d::constant(d_coef);
    return pack_jets(u + Jet3d::constant(a), y, y);
  });
}

CurveModel circle(double r, Ambient amb) {
  if (r <= 0.0) throw precondition_error("circle: requires r > 0");
  return model(amb, Interval{0.0, 2.0 * M_PI}, [r](double t) {
    const Jet3d u = Jet3d::variable(t);
    return pack_jets(r * cos(u), r * sin(u), Jet3d::constant(0.0));
  });
}

CurveModel line(const Vector3d& p0, const Vector3d& v, Ambient amb) {
  if (v.squaredNorm() == 0.0) throw precondition_error("line: zero direction");
  return model(amb, kWideDomain, [p0, v](double t) {
    CurveJet j;
    j.p = p0 + t * v;
    j.d1 = v;
    j.d2 = Vector3d::Zero();
    j.d3 = Vector3d::Zero();
    return j;
  });
}

CurveModel lightlike_helix_raw(double r) {
  if (r <= 0.0) throw precondition_error("lightlike_helix_raw: requires r > 0");
  return model(Ambient::Lorentz3, kWideDomain, [r](double t) {
    const Jet3d u = Jet3d::variable(t);
    return pack_jets(r * cos(u), r * sin(u), r * u);
  });
}

const std::vector<NamedCurveEntry>& curve_catalog() {
  static const std::vector<NamedCurveEntry> entries = {
      {"beta1", {"a", "b"}, "Euclidean circular helix (unit speed)"},
      {"beta2", {"a", "b"}, "L^3 helix around the time axis (unit speed)"},
      {"beta3", {"a", "b"}, "L^3 hyperbolic helix, cosh/sinh profile (unit speed)"},
      {"beta4", {"a", "b"}, "L^3 helix with timelike normal (unit speed)"},
      {"beta5", {"a"}, "parabolic timelike helix (unit speed)"},
      {"beta6", {"a"}, "parabolic spacelike helix (unit speed)"},
      {"gamma1", {"r"}, "hyperbolic lightlike helix (arc-photon)"},
      {"gamma2", {"r"}, "elliptic lightlike helix (arc-photon)"},
      {"gamma3", {}, "parabolic lightlike cubic (arc-photon)"},
      {"horocycle", {"c"}, "horocycle of H^2 at level c < 0 (semi-lightlike)"},
      {"graph-cosh", {}, "semi-lightlike graph (s, cosh s, cosh s)"},
      {"semi-lightlike-exp", {"ct", "a", "b", "c", "d"},
       "constant-pseudo-torsion semi-lightlike curve"},
      {"circle", {"r"}, "planar circle of radius r in R^3 (parameter t)"},
      {"lightlike-helix-raw", {"r"},
       "lightlike circular helix in its natural (non arc-photon) parameter"},
  };
  return entries;
}

CurveModel make_named_curve(const std::string& name,
                            const std::map<std::string, double>& params) {
  if (name == "beta1") return beta1(get(params, "a", 1.0), get(params, "b", 1.0));
  if (name == "beta2") return beta2(get(params, "a", 1.0), get(params, "b", 2.0));
  if (name == "beta3") return beta3(get(params, "a", 1.0), get(params, "b", 2.0));
  if (name == "beta4") return beta4(get(params, "a", 1.0), get(params, "b", 1.0));
  if (name == "beta5") return beta5(get(params, "a", 1.0));
  if (name == "beta6") return beta6(get(params, "a", 1.0));
  if (name == "gamma1") return gamma1(get(params, "r", 1.0));
  if (name == "gamma2") return gamma2(get(params, "r", 1.0));
  if (name == "gamma3") return gamma3();
  if (name == "horocycle") return horocycle(get(params, "c", -1.0));
  if (name == "graph-cosh") return graph_cosh();
  if (name == "semi-lightlike-exp")
    return semi_lightlike_exp(get(params, "ct", 1.0), get(params, "a", 0.0),
                              get(params, "b", 1.0), get(params, "c", 0.0),
                              get(params, "d", 0.0));
  if (name == "circle") return circle(get(params, "r", 1.0));
  if (name == "lightlike-helix-raw") return lightlike_helix_raw(get(params, "r", 1.0));
  throw precondition_error("unknown curve name: " + name);
}

}  // namespace mink
