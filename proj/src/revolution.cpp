#include "minkgeo/revolution.hpp"

#include <cmath>

#include "minkgeo/quadrature.hpp"

namespace mink {

const char* to_string(RevolutionKind k) {
  switch (k) {
    case RevolutionKind::CircularZ: return "circular_z";
    case RevolutionKind::CircularX: return "circular_x";
    case RevolutionKind::HyperbolicXY: return "hyperbolic_xy";
    case RevolutionKind::HyperbolicYZ: return "hyperbolic_yz";
  }
  return "?";
}

namespace {

// Metric weights of the slots receiving f and g when the profile is embedded
// at the v = 0 orbit position.
struct SlotWeights {
  double wf, wg;
};

SlotWeights slot_weights(Ambient amb, RevolutionKind kind) {
  const Signature sig = signature_of(amb);
  const double w0 = sig.weight(0), w1 = sig.weight(1), w2 = sig.weight(2);
  switch (kind) {
    case RevolutionKind::CircularZ:
      if (w0 != w1)
        throw precondition_error("revolution_surface: circular orbit in a Lorentzian plane");
      return {w0, w2};
    case RevolutionKind::CircularX:
      if (w1 != w2)
        throw precondition_error("revolution_surface: circular orbit in a Lorentzian plane");
      return {w1, w0};
    case RevolutionKind::HyperbolicXY:
      if (w0 == w1)
        throw precondition_error("revolution_surface: hyperbolic orbit in a definite plane");
      return {w1, w2};
    case RevolutionKind::HyperbolicYZ:
      if (w1 == w2)
        throw precondition_error("revolution_surface: hyperbolic orbit in a definite plane");
      return {w1, w0};
  }
  throw precondition_error("revolution_surface: unknown kind");
}

void check_profile(const CurveModel& profile, int samples) {
  for (int i = 0; i < samples; ++i) {
    const double u =
        profile.domain.lo + profile.domain.length() * i / double(samples - 1);
    const CurveJet j = profile.eval(u);
    const double scale = std::max(1.0, j.p.norm() + j.d1.norm());
    if (std::abs(j.p[1]) > 1e-10 * scale || std::abs(j.d1[1]) > 1e-10 * scale)
      throw precondition_error("revolution_surface: profile leaves the plane y=0");
    if (j.d1.squaredNorm() == 0.0)
      throw precondition_error("revolution_surface: profile is not regular");
    if (j.p[0] <= 0.0)
      throw precondition_error("revolution_surface: profile touches the axis (f <= 0)");
  }
}

}  // namespace

SurfaceModel revolution_surface(const CurveModel& profile, RevolutionKind kind,
                                Interval v_range, int profile_samples) {
  slot_weights(profile.ambient, kind);  // validates kind vs ambient
  check_profile(profile, profile_samples);
  SurfaceModel m;
  m.domain = {profile.domain, v_range};
  m.ambient = profile.ambient;
  m.eval = [profile, kind](double u, double v) {
    const CurveJet pj = profile.eval(u);
    const double f = pj.p[0], f1 = pj.d1[0], f2 = pj.d2[0];
    const double g = pj.p[2], g1 = pj.d1[2], g2 = pj.d2[2];
    // Rotation pair (a, b) with a'' = s a, b'' = s b.
    double a, b, a1, b1, s;
    if (kind == RevolutionKind::CircularZ || kind == RevolutionKind::CircularX) {
      a = std::cos(v), b = std::sin(v), a1 = -b, b1 = a, s = -1.0;
    } else {
      a = std::sinh(v), b = std::cosh(v), a1 = b, b1 = a, s = 1.0;
    }
    SurfaceJet j;
    const bool orbit_first = kind == RevolutionKind::CircularZ ||
                             kind == RevolutionKind::HyperbolicXY;
    if (orbit_first) {
      j.value = {f * a, f * b, g};
      j.du = {f1 * a, f1 * b, g1};
      j.dv = {f * a1, f * b1, 0};
      j.duu = {f2 * a, f2 * b, g2};
      j.duv = {f1 * a1, f1 * b1, 0};
      j.dvv = {s * f * a, s * f * b, 0};
    } else if (kind == RevolutionKind::CircularX) {
      j.value = {g, f * a, f * b};
      j.du = {g1, f1 * a, f1 * b};
      j.dv = {0, f * a1, f * b1};
      j.duu = {g2, f2 * a, f2 * b};
      j.duv = {0, f1 * a1, f1 * b1};
      j.dvv = {0, s * f * a, s * f * b};
    } else {  // HyperbolicYZ: x = (g, f cosh v, f sinh v)
      j.value = {g, f * b, f * a};
      j.du = {g1, f1 * b, f1 * a};
      j.dv = {0, f * b1, f * a1};
      j.duu = {g2, f2 * b, f2 * a};
      j.duv = {0, f1 * b1, f1 * a1};
      j.dvv = {0, s * f * b, s * f * a};
    }
    return j;
  };
  return m;
}

RevolutionConstKCheck revolution_constant_K_check(const CurveModel& profile,
                                                  RevolutionKind kind, double K,
                                                  int samples) {
  if (samples < 3)
    throw precondition_error("revolution_constant_K_check: need >= 3 samples");
  const SlotWeights w = slot_weights(profile.ambient, kind);
  check_profile(profile, samples);
  RevolutionConstKCheck out;

  const auto speed = [&](double u) {
    const CurveJet j = profile.eval(u);
    return w.wf * j.d1[0] * j.d1[0] + w.wg * j.d1[2] * j.d1[2];
  };
  const double q_mid = speed(profile.domain.mid());
  out.eps_alpha = q_mid > 0 ? 1 : -1;

  const auto radicand = [&](double u) {
    const CurveJet j = profile.eval(u);
    return (out.eps_alpha - w.wf * j.d1[0] * j.d1[0]) / w.wg;
  };
  const CurveJet j0 = profile.eval(profile.domain.lo);

  for (int i = 0; i < samples; ++i) {
    const double u =
        profile.domain.lo + profile.domain.length() * i / double(samples - 1);
    const CurveJet j = profile.eval(u);
    out.max_unit_speed_err =
        std::max(out.max_unit_speed_err, std::abs(speed(u) - out.eps_alpha));
    out.max_ode_residual = std::max(
        out.max_ode_residual, std::abs(j.d2[0] + out.eps_alpha * K * j.p[0]));
    const double rad = radicand(u);
    if (rad < -1e-12)
      throw precondition_error("revolution_constant_K_check: g-radicand negative");
    out.max_g_pointwise =
        std::max(out.max_g_pointwise, std::abs(j.d1[2] * j.d1[2] - rad));
    const double integral = adaptive_simpson(
        [&](double t) {
          const double r = std::max(radicand(t), 0.0);
          const double sgn = profile.eval(t).d1[2] < 0 ? -1.0 : 1.0;
          return sgn * std::sqrt(r);
        },
        profile.domain.lo, u, 1e-10);
    out.max_g_integral =
        std::max(out.max_g_integral, std::abs(j.p[2] - j0.p[2] - integral));
  }
  return out;
}

namespace {

CurveModel analytic_profile(std::function<CurveJet(double)> eval, Interval domain,
                            Ambient ambient) {
  CurveModel m;
  m.eval = std::move(eval);
  m.domain = domain;
  m.ambient = ambient;
  return m;
}

}  // namespace

CurveModel de_sitter_profile(Interval domain) {
  return analytic_profile(
      [](double u) {
        const double c = std::cosh(u), s = std::sinh(u);
        return CurveJet{{c, 0, s}, {s, 0, c}, {c, 0, s}, {s, 0, c}};
      },
      domain, Ambient::Lorentz3);
}

CurveModel hyperbolic_profile(Interval domain) {
  return analytic_profile(
      [](double u) {
        const double c = std::cosh(u), s = std::sinh(u);
        return CurveJet{{s, 0, c}, {c, 0, s}, {s, 0, c}, {c, 0, s}};
      },
      domain, Ambient::Lorentz3);
}

CurveModel cylinder_profile(Ambient ambient, Interval domain) {
  return analytic_profile(
      [](double u) {
        return CurveJet{{1, 0, u}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}};
      },
      domain, ambient);
}

CurveModel elliptic_cosh_profile(Ambient ambient, Interval domain) {
  if (std::cosh(domain.lo) >= std::sqrt(2.0) || std::cosh(domain.hi) >= std::sqrt(2.0))
    throw precondition_error("elliptic_cosh_profile: domain needs cosh^2 u < 2");
  return analytic_profile(
      [](double u) {
        const double c = std::cosh(u), s = std::sinh(u);
        const double r = 2.0 - c * c;  // radicand, g' = sqrt(r)
        const double sr = std::sqrt(r);
        const double g = adaptive_simpson(
            [](double t) { return std::sqrt(2.0 - std::cosh(t) * std::cosh(t)); },
            0.0, u, 1e-12);
        const double g2 = -c * s / sr;
        const double g3 = -(c * c + s * s) / sr - (c * c * s * s) / (sr * sr * sr);
        return CurveJet{{c, 0, g}, {s, 0, sr}, {c, 0, g2}, {s, 0, g3}};
      },
      domain, ambient);
}

CurveModel elliptic_cos_profile(Ambient ambient, Interval domain) {
  return analytic_profile(
      [](double u) {
        const double c = std::cos(u), s = std::sin(u);
        const double r = 1.0 + s * s;  // g' = sqrt(r)
        const double sr = std::sqrt(r);
        const double g = adaptive_simpson(
            [](double t) {
              return std::sqrt(1.0 + std::sin(t) * std::sin(t));
            },
            0.0, u, 1e-12);
        const double g2 = s * c / sr;
        const double g3 = (c * c - s * s) / sr - (s * s * c * c) / (sr * sr * sr);
        return CurveJet{{c, 0, g}, {-s, 0, sr}, {-c, 0, g2}, {s, 0, g3}};
      },
      domain, ambient);
}

}  // namespace mink
