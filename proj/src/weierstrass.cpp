#include "minkgeo/weierstrass.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "minkgeo/quadrature.hpp"

namespace mink {

const char* to_string(WKind k) {
  return k == WKind::TypeI_fg ? "TypeI_fg" : "TypeII_F";
}

const char* to_string(WAmbient a) {
  switch (a) {
    case WAmbient::R3: return "R3";
    case WAmbient::L3_spacelike: return "L3_spacelike";
    case WAmbient::L3_timelike: return "L3_timelike";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Effective data: chart pullback. With z = c(w) the representation integrals
// transform by substitution, so the effective pair is f(c(w)) c'(w), g(c(w));
// for type II the role of g is played by the chart image itself.
// ---------------------------------------------------------------------------

template <int S>
struct Pair1 {
  FnJet<S> f, g;
};

Pair1<-1> effective_complex(const WeierstrassData& d, Complexd w) {
  ChartJet c;
  if (d.chart) {
    c = d.chart(w);
  } else {
    c = {w, Complexd{1.0, 0.0}, Complexd{0.0, 0.0}};
  }
  if (d.kind == WKind::TypeI_fg) {
    if (!d.f || !d.g) throw precondition_error("TypeI_fg data needs f and g");
    const FnJet<-1> fj = d.f(c.v);
    const FnJet<-1> gj = d.g(c.v);
    return {{fj.v * c.d1, fj.d * (c.d1 * c.d1) + fj.v * c.d2}, {gj.v, gj.d * c.d1}};
  }
  if (!d.F) throw precondition_error("TypeII_F data needs F");
  const FnJet<-1> Fj = d.F(c.v);
  return {{Fj.v * c.d1, Fj.d * (c.d1 * c.d1) + Fj.v * c.d2}, {c.v, c.d1}};
}

Pair1<+1> effective_split(const WeierstrassData& d, SplitComplex w) {
  if (d.kind == WKind::TypeI_fg) {
    if (!d.sf || !d.sg) throw precondition_error("timelike TypeI_fg data needs sf and sg");
    return {d.sf(w), d.sg(w)};
  }
  if (!d.sF) throw precondition_error("timelike TypeII_F data needs sF");
  const FnJet<+1> Fj = d.sF(w);
  return {Fj, {w, SplitComplex{1.0, 0.0}}};
}

// ---------------------------------------------------------------------------
// Integrand triples phi (resp. psi) and their parameter derivatives.
// ---------------------------------------------------------------------------

template <int S>
struct Triple {
  std::array<Binarion<S>, 3> v{}, d{};
};

Triple<-1> triple_complex(const WeierstrassData& data, Complexd w) {
  const Pair1<-1> e = effective_complex(data, w);
  const Complexd i{0.0, 1.0};
  const Complexd fg2 = e.f.v * (e.g.v * e.g.v);
  const Complexd fg = e.f.v * e.g.v;
  const Complexd dfg = e.f.d * e.g.v + e.f.v * e.g.d;
  const Complexd dfg2 = e.f.d * (e.g.v * e.g.v) + 2.0 * (fg * e.g.d);

  Triple<-1> t;
  if (data.ambient == WAmbient::R3) {
    // phi = ( f(1-g^2)/2, i f(1+g^2)/2, f g )
    t.v = {0.5 * (e.f.v - fg2), 0.5 * (i * (e.f.v + fg2)), fg};
    t.d = {0.5 * (e.f.d - dfg2), 0.5 * (i * (e.f.d + dfg2)), dfg};
  } else {
    // phi = ( f(1+g^2)/2, i f(1-g^2)/2, -f g )
    t.v = {0.5 * (e.f.v + fg2), 0.5 * (i * (e.f.v - fg2)), -fg};
    t.d = {0.5 * (e.f.d + dfg2), 0.5 * (i * (e.f.d - dfg2)), -dfg};
  }
  return t;
}

Triple<+1> triple_split(const WeierstrassData& data, SplitComplex w) {
  const Pair1<+1> e = effective_split(data, w);
  const SplitComplex fg2 = e.f.v * (e.g.v * e.g.v);
  const SplitComplex fg = e.f.v * e.g.v;
  const SplitComplex dfg = e.f.d * e.g.v + e.f.v * e.g.d;
  const SplitComplex dfg2 = e.f.d * (e.g.v * e.g.v) + 2.0 * (fg * e.g.d);

  // psi = ( f(1-g^2)/2, f g, f(1+g^2)/2 ): the fg-term sits SECOND.
  Triple<+1> t;
  t.v = {0.5 * (e.f.v - fg2), fg, 0.5 * (e.f.v + fg2)};
  t.d = {0.5 * (e.f.d - dfg2), dfg, 0.5 * (e.f.d + dfg2)};
  return t;
}

// ---------------------------------------------------------------------------
// Path integration of a triple along a straight segment (32-point
// Gauss-Legendre, one panel per unit of Euclidean length).
// ---------------------------------------------------------------------------

template <int S, typename TripleFn>
std::array<Binarion<S>, 3> integrate_leg(const TripleFn& f, Binarion<S> a, Binarion<S> b) {
  const Binarion<S> dir = b - a;
  const double len = dir.euclidean_norm();
  std::array<Binarion<S>, 3> total{};
  if (len == 0.0) return total;
  const int panels = std::max(1, static_cast<int>(std::ceil(len)));
  const GaussLegendre& gl = gauss_legendre_32();
  for (int p = 0; p < panels; ++p) {
    const double t0 = double(p) / panels, t1 = double(p + 1) / panels;
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    std::array<Binarion<S>, 3> acc{};
    for (int k = 0; k < gl.order; ++k) {
      const double t = mid + half * gl.nodes[k];
      const auto val = f(a + t * dir);
      for (int j = 0; j < 3; ++j) acc[j] += gl.weights[k] * val[j];
    }
    for (int j = 0; j < 3; ++j) total[j] += (half * acc[j]) * dir;
  }
  return total;
}

// L path from w0 to w1: horizontal leg first (corner (w1.re, w0.im)), or
// vertical first when reversed.
template <int S, typename TripleFn>
std::array<Binarion<S>, 3> integrate_L_path(const TripleFn& f, Binarion<S> w0,
                                            Binarion<S> w1, bool reversed) {
  const Binarion<S> corner =
      reversed ? Binarion<S>{w0.re, w1.im} : Binarion<S>{w1.re, w0.im};
  const auto leg1 = integrate_leg<S>(f, w0, corner);
  const auto leg2 = integrate_leg<S>(f, corner, w1);
  std::array<Binarion<S>, 3> total;
  for (int j = 0; j < 3; ++j) total[j] = leg1[j] + leg2[j];
  return total;
}

bool is_split(const WeierstrassData& d) { return d.ambient == WAmbient::L3_timelike; }

// signed conformal factor from the effective data
double conformal_from_pair_complex(const WeierstrassData& d, const Pair1<-1>& e) {
  const double fm2 = e.f.v.quadrance();  // |f|^2
  const double gm2 = e.g.v.quadrance();  // |g|^2
  if (d.ambient == WAmbient::R3) {
    return fm2 * (1.0 + gm2) * (1.0 + gm2);
  }
  return fm2 * (1.0 - gm2) * (1.0 - gm2);
}

double conformal_from_pair_split(const Pair1<+1>& e) {
  const double ffbar = e.f.v.quadrance();  // f conj(f), real and sign-carrying
  const double img = e.g.v.im;
  return -4.0 * ffbar * img * img;  // eps_u lambda^2
}

double dist_to_null_lines(const Vector2d& center, double u, double v) {
  const double du = u - center.x(), dv = v - center.y();
  return std::min(std::abs(du - dv), std::abs(du + dv)) / std::sqrt(2.0);
}

void check_domain_free_of_singularities(const WeierstrassData& d, double guard) {
  const Rect& r = d.domain;
  if (!r.contains(d.basepoint.x(), d.basepoint.y())) {
    throw precondition_error("weierstrass: basepoint outside the data domain");
  }
  for (const Vector2d& p : d.poles) {
    if (p.x() >= r.u.lo - guard && p.x() <= r.u.hi + guard && p.y() >= r.v.lo - guard &&
        p.y() <= r.v.hi + guard) {
      throw precondition_error(
          "weierstrass: declared pole inside the generation domain; split the domain");
    }
  }
  for (const Vector2d& c : d.null_line_centers) {
    // the lines (u-c.x) = +-(v-c.y) meet the rectangle iff the ranges of
    // u - v and u + v over the corners straddle the corresponding constants
    const double smin = r.u.lo - r.v.hi, smax = r.u.hi - r.v.lo;  // u - v
    const double tmin = r.u.lo + r.v.lo, tmax = r.u.hi + r.v.hi;  // u + v
    const double sc = c.x() - c.y(), tc = c.x() + c.y();
    if ((sc >= smin - guard && sc <= smax + guard) ||
        (tc >= tmin - guard && tc <= tmax + guard)) {
      throw precondition_error(
          "weierstrass: a declared null line crosses the generation domain");
    }
  }
}

std::vector<double> linspace(const Interval& iv, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = n == 1 ? iv.mid() : iv.lo + iv.length() * double(i) / double(n - 1);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Regularity
// ---------------------------------------------------------------------------

RegularityReport regularity_check(const WeierstrassData& data, int nu, int nv,
                                  double mask_tol, double guard) {
  if (nu < 2 || nv < 2) throw precondition_error("regularity_check: grid needs >= 2x2");
  RegularityReport rep;
  rep.us = linspace(data.domain.u, nu);
  rep.vs = linspace(data.domain.v, nv);
  rep.mask = Eigen::ArrayXXi::Zero(nu, nv);
  rep.conformal = MatrixXd::Zero(nu, nv);

  auto fire = [&rep](int i, int j, const char* clause) {
    rep.mask(i, j) = 1;
    ++rep.clause_counts[clause];
    ++rep.masked_count;
  };

  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      const double u = rep.us[i], v = rep.vs[j];

      bool guarded = false;
      for (const Vector2d& p : data.poles) {
        if (std::hypot(u - p.x(), v - p.y()) <= guard) {
          fire(i, j, "pole guard band");
          guarded = true;
          break;
        }
      }
      if (!guarded) {
        for (const Vector2d& c : data.null_line_centers) {
          if (dist_to_null_lines(c, u, v) <= guard) {
            fire(i, j, "null line guard band");
            guarded = true;
            break;
          }
        }
      }
      if (guarded) continue;

      try {
        if (is_split(data)) {
          const Pair1<+1> e = effective_split(data, {u, v});
          const double conf = conformal_from_pair_split(e);
          rep.conformal(i, j) = conf;
          if (std::abs(conf) <= mask_tol) {
            if (e.g.v.im * e.g.v.im <= mask_tol) fire(i, j, "g real");
            else if (!e.f.v.is_invertible(1e-9)) fire(i, j, "f zero divisor");
            else fire(i, j, "conformal factor vanishes");
          }
        } else {
          const Pair1<-1> e = effective_complex(data, {u, v});
          const double conf = conformal_from_pair_complex(data, e);
          rep.conformal(i, j) = conf;
          if (std::abs(conf) <= mask_tol) {
            const double gm2 = e.g.v.quadrance();
            if (data.ambient == WAmbient::L3_spacelike &&
                std::abs(1.0 - gm2) * std::abs(1.0 - gm2) * e.f.v.quadrance() <= mask_tol)
              fire(i, j, "|g| = 1");
            else fire(i, j, "f vanishes");
          }
        }
      } catch (const zero_divisor_error&) {
        fire(i, j, "zero divisor in data evaluation");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

GeneratedSurface generate(const WeierstrassData& data, int nu, int nv, bool reversed_L) {
  constexpr double kGuard = 1e-6;
  check_domain_free_of_singularities(data, kGuard);

  GeneratedSurface out;
  out.regularity = regularity_check(data, nu, nv, 1e-6, kGuard);
  out.constants = data.base_image;

  const bool split = is_split(data);
  const bool reversed = reversed_L;
  const WeierstrassData d = data;  // captured by value below

  SurfaceModel m;
  m.domain = data.domain;
  m.ambient = data.ambient == WAmbient::R3 ? Ambient::Euclidean3 : Ambient::Lorentz3;
  m.eval = [d, split, reversed](double u, double v) -> SurfaceJet {
    SurfaceJet jet;
    if (split) {
      const SplitComplex w0{d.basepoint.x(), d.basepoint.y()};
      auto f = [&d](SplitComplex w) { return triple_split(d, w).v; };
      const auto I = integrate_L_path<+1>(f, w0, {u, v}, reversed);
      const Triple<+1> t = triple_split(d, {u, v});
      for (int j = 0; j < 3; ++j) {
        jet.value[j] = d.base_image[j] + 2.0 * I[j].re;
        jet.du[j] = 2.0 * t.v[j].re;
        jet.dv[j] = 2.0 * t.v[j].im;
        jet.duu[j] = 2.0 * t.d[j].re;
        jet.duv[j] = 2.0 * t.d[j].im;
        jet.dvv[j] = jet.duu[j];  // x satisfies the wave equation
      }
    } else {
      const Complexd w0{d.basepoint.x(), d.basepoint.y()};
      auto f = [&d](Complexd w) { return triple_complex(d, w).v; };
      const auto I = integrate_L_path<-1>(f, w0, {u, v}, reversed);
      const Triple<-1> t = triple_complex(d, {u, v});
      for (int j = 0; j < 3; ++j) {
        jet.value[j] = d.base_image[j] + 2.0 * I[j].re;
        jet.du[j] = 2.0 * t.v[j].re;
        jet.dv[j] = -2.0 * t.v[j].im;
        jet.duu[j] = 2.0 * t.d[j].re;
        jet.duv[j] = -2.0 * t.d[j].im;
        jet.dvv[j] = -jet.duu[j];  // x is harmonic
      }
    }
    return jet;
  };
  out.model = m;
  return out;
}

double isothermal_residual(const WeierstrassData& data, double u, double v) {
  if (is_split(data)) {
    const Triple<+1> t = triple_split(data, {u, v});
    const SplitComplex s = t.v[0] * t.v[0] + t.v[1] * t.v[1] - t.v[2] * t.v[2];
    return s.euclidean_norm();
  }
  const Triple<-1> t = triple_complex(data, {u, v});
  Complexd s = t.v[0] * t.v[0] + t.v[1] * t.v[1];
  s = data.ambient == WAmbient::R3 ? s + t.v[2] * t.v[2] : s - t.v[2] * t.v[2];
  return s.euclidean_norm();
}

double conformal_factor(const WeierstrassData& data, double u, double v) {
  if (is_split(data)) return conformal_from_pair_split(effective_split(data, {u, v}));
  return conformal_from_pair_complex(data, effective_complex(data, {u, v}));
}

// ---------------------------------------------------------------------------
// Named gallery
// ---------------------------------------------------------------------------

const std::vector<NamedSurface>& all_named_surfaces() {
  static const std::vector<NamedSurface> kAll = {
      NamedSurface::EnneperR3,         NamedSurface::EnneperL3Spacelike,
      NamedSurface::CatalanR3,         NamedSurface::CatenoidL3Spacelike,
      NamedSurface::HennebergR3,       NamedSurface::EnneperL3Timelike,
      NamedSurface::CatenoidL3Timelike};
  return kAll;
}

const char* to_string(NamedSurface k) {
  switch (k) {
    case NamedSurface::EnneperR3: return "EnneperR3";
    case NamedSurface::EnneperL3Spacelike: return "EnneperL3Spacelike";
    case NamedSurface::CatalanR3: return "CatalanR3";
    case NamedSurface::CatenoidL3Spacelike: return "CatenoidL3Spacelike";
    case NamedSurface::HennebergR3: return "HennebergR3";
    case NamedSurface::EnneperL3Timelike: return "EnneperL3Timelike";
    case NamedSurface::CatenoidL3Timelike: return "CatenoidL3Timelike";
  }
  return "?";
}

NamedSurface named_surface_from_string(const std::string& name) {
  for (NamedSurface k : all_named_surfaces())
    if (name == to_string(k)) return k;
  throw precondition_error("unknown named surface: " + name);
}

namespace {

// chart c(w) = -exp(m w): c' = m c, c'' = m^2 c.
ChartFn scaled_exp_chart(Complexd m) {
  return [m](Complexd w) {
    const Complexd c = -1.0 * exp(m * w);
    const Complexd d1 = m * c;
    return ChartJet{c, d1, m * d1};
  };
}

Vector3d eval_at(const std::function<Vector3d(double, double)>& pos, Vector2d p) {
  return pos(p.x(), p.y());
}

}  // namespace

NamedWeierstrass named_surface(NamedSurface kind) {
  NamedWeierstrass out;
  out.name = to_string(kind);
  WeierstrassData d;
  d.name = out.name;
  std::function<Vector3d(double, double)> pos;
  Ambient amb = Ambient::Euclidean3;

  switch (kind) {
    case NamedSurface::EnneperR3: {
      d.kind = WKind::TypeI_fg;
      d.ambient = WAmbient::R3;
      d.domain = {{-1.5, 1.5}, {-1.5, 1.5}};
      d.basepoint = {0.0, 0.0};
      d.f = [](Complexd) { return FnJet<-1>{{1.0, 0.0}, {0.0, 0.0}}; };
      d.g = [](Complexd z) { return FnJet<-1>{z, {1.0, 0.0}}; };
      pos = [](double u, double v) {
        return Vector3d(u - u * u * u / 3.0 + u * v * v,
                        -v + v * v * v / 3.0 - u * u * v, u * u - v * v);
      };
      amb = Ambient::Euclidean3;
      out.mask_description = "nothing masked";
      break;
    }
    case NamedSurface::EnneperL3Spacelike: {
      d.kind = WKind::TypeI_fg;
      d.ambient = WAmbient::L3_spacelike;
      // default domain stays inside the unit disk so every node is regular;
      // widen the domain to see the |g| = 1 circle masked
      d.domain = {{-0.7, 0.7}, {-0.7, 0.7}};
      d.basepoint = {0.0, 0.0};
      d.f = [](Complexd) { return FnJet<-1>{{1.0, 0.0}, {0.0, 0.0}}; };
      d.g = [](Complexd z) { return FnJet<-1>{z, {1.0, 0.0}}; };
      pos = [](double u, double v) {
        return Vector3d(u + u * u * u / 3.0 - u * v * v,
                        -v - v * v * v / 3.0 + u * u * v, v * v - u * u);
      };
      amb = Ambient::Lorentz3;
      out.mask_description = "unit circle |z| = 1 (|g| = 1)";
      break;
    }
    case NamedSurface::CatalanR3: {
      d.kind = WKind::TypeII_F;
      d.ambient = WAmbient::R3;
      d.domain = {{0.3, 5.9}, {-1.2, 1.2}};
      d.basepoint = {M_PI, 0.0};
      d.F = [](Complexd z) {
        const Complexd i{0.0, 1.0};
        const Complexd z1 = z.inverse();
        const Complexd z2 = z1 * z1, z3 = z2 * z1, z4 = z2 * z2;
        return FnJet<-1>{i * (z1 - z3), i * (3.0 * z4 - z2)};
      };
      d.chart = scaled_exp_chart({0.0, -0.5});  // z = -exp(-i w / 2)
      pos = [](double u, double v) {
        return Vector3d(u - std::sin(u) * std::cosh(v), 1.0 - std::cos(u) * std::cosh(v),
                        -4.0 * std::sin(u / 2.0) * std::sinh(v / 2.0));
      };
      amb = Ambient::Euclidean3;
      out.mask_description =
          "branch points w = 2 pi k on the real axis (F(c(w)) = 0); outside the default "
          "domain";
      break;
    }
    case NamedSurface::CatenoidL3Spacelike: {
      d.kind = WKind::TypeII_F;
      d.ambient = WAmbient::L3_spacelike;
      // default domain stays outside the unit disk (min radius ~ 1.14)
      d.domain = {{1.1, 2.5}, {0.3, 1.7}};
      d.basepoint = {1.8, 1.0};
      d.F = [](Complexd z) {
        const Complexd z1 = z.inverse();
        const Complexd z2 = z1 * z1, z3 = z2 * z1;
        return FnJet<-1>{z2, -2.0 * z3};
      };
      d.poles = {Vector2d(0.0, 0.0)};
      pos = [](double u, double v) {
        const double r2 = u * u + v * v;
        return Vector3d(u - u / r2, v - v / r2, -std::log(r2));
      };
      amb = Ambient::Lorentz3;
      out.mask_description = "unit circle |z| = 1 (|g| = 1); data pole at z = 0";
      break;
    }
    case NamedSurface::HennebergR3: {
      d.kind = WKind::TypeII_F;
      d.ambient = WAmbient::R3;
      d.domain = {{-1.0, 1.0}, {-1.5, 1.5}};
      d.basepoint = {0.5, 0.0};
      d.F = [](Complexd z) {
        const Complexd z1 = z.inverse();
        const Complexd z2 = z1 * z1, z4 = z2 * z2, z5 = z4 * z1;
        return FnJet<-1>{Complexd{1.0, 0.0} - z4, 4.0 * z5};
      };
      d.chart = scaled_exp_chart({-1.0, 0.0});  // z = -exp(-w)
      pos = [](double u, double v) {
        return Vector3d(
            2.0 * std::sinh(u) * std::cos(v) - (2.0 / 3.0) * std::sinh(3 * u) * std::cos(3 * v),
            2.0 * std::sinh(u) * std::sin(v) + (2.0 / 3.0) * std::sinh(3 * u) * std::sin(3 * v),
            2.0 * std::cosh(2 * u) * std::cos(2 * v));
      };
      amb = Ambient::Euclidean3;
      out.mask_description =
          "isolated zeros of F(c(w)) on the line u = 0 (w = 0 inside the default domain)";
      break;
    }
    case NamedSurface::EnneperL3Timelike: {
      d.kind = WKind::TypeII_F;
      d.ambient = WAmbient::L3_timelike;
      d.domain = {{-1.2, 1.2}, {-1.2, 1.2}};
      d.basepoint = {0.0, 0.5};
      d.sF = [](SplitComplex) { return FnJet<+1>{{0.0, 1.0}, {0.0, 0.0}}; };
      pos = [](double u, double v) {
        return Vector3d(v - u * u * v - v * v * v / 3.0, 2.0 * u * v,
                        v + u * u * v + v * v * v / 3.0);
      };
      amb = Ambient::Lorentz3;
      out.mask_description = "real axis v = 0 (g real)";
      break;
    }
    case NamedSurface::CatenoidL3Timelike: {
      d.kind = WKind::TypeII_F;
      d.ambient = WAmbient::L3_timelike;
      d.domain = {{1.2, 2.6}, {-0.9, 0.9}};
      d.basepoint = {1.9, 0.45};
      d.sF = [](SplitComplex w) {
        const SplitComplex w1 = w.inverse();
        const SplitComplex w2 = w1 * w1, w3 = w2 * w1;
        return FnJet<+1>{w2, -2.0 * w3};
      };
      d.null_line_centers = {Vector2d(0.0, 0.0)};
      pos = [](double u, double v) {
        const double q = u * u - v * v;
        return Vector3d(-u / q - u, std::log(std::abs(q)), -u / q + u);
      };
      amb = Ambient::Lorentz3;
      out.mask_description = "real axis v = 0 (g real); null lines |u| = |v| excluded";
      break;
    }
  }

  d.base_image = eval_at(pos, d.basepoint);
  out.closed_form = surface_from_positions(pos, d.domain, amb);
  out.data = d;
  return out;
}

double typeII_gaussian_curvature(const WeierstrassData& data, double u, double v) {
  if (data.kind != WKind::TypeII_F || data.ambient == WAmbient::L3_timelike) {
    throw precondition_error("typeII_gaussian_curvature: needs type II spacelike data");
  }
  if (data.chart) {
    throw precondition_error(
        "typeII_gaussian_curvature: formula is stated in the type II parameter; "
        "chart substitutions are not supported");
  }
  const int nu = data.ambient == WAmbient::R3 ? 0 : 1;
  const FnJet<-1> Fj = data.F(Complexd{u, v});
  const double fm2 = Fj.v.quadrance();
  const double base = (nu == 0 ? 1.0 : -1.0) + u * u + v * v;
  if (fm2 < 1e-30 || std::abs(base) < 1e-12) {
    throw precondition_error("typeII_gaussian_curvature: irregular point");
  }
  const double sign = nu == 0 ? -1.0 : 1.0;  // (-1)^(nu+1)
  const double b2 = base * base;
  return sign * 4.0 / (fm2 * b2 * b2);
}

std::string gallery_manifest_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (NamedSurface k : all_named_surfaces()) {
    const NamedWeierstrass n = named_surface(k);
    nlohmann::json e;
    e["name"] = n.name;
    e["kind"] = to_string(n.data.kind);
    e["ambient"] = to_string(n.data.ambient);
    e["domain"] = {{"u", {n.data.domain.u.lo, n.data.domain.u.hi}},
                   {"v", {n.data.domain.v.lo, n.data.domain.v.hi}}};
    e["basepoint"] = {n.data.basepoint.x(), n.data.basepoint.y()};
    e["base_image"] = {n.data.base_image.x(), n.data.base_image.y(),
                       n.data.base_image.z()};
    e["mask"] = n.mask_description;
    e["uses_chart"] = bool(n.data.chart);
    arr.push_back(e);
  }
  nlohmann::json root;
  root["gallery"] = arr;
  return root.dump(2);
}

}  // namespace mink
