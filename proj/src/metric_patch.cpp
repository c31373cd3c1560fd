#include "minkgeo/metric_patch.hpp"

#include <cmath>

#include "minkgeo/inner.hpp"
#include "minkgeo/rk4.hpp"

namespace mink {

namespace {

ScalarField2 partial_u(const ScalarField2& f, double h) {
  return [f, h](double u, double v) { return (f(u + h, v) - f(u - h, v)) / (2 * h); };
}

ScalarField2 partial_v(const ScalarField2& f, double h) {
  return [f, h](double u, double v) { return (f(u, v + h) - f(u, v - h)) / (2 * h); };
}

}  // namespace

MetricPatch metric_from_functions(ScalarField2 g11, ScalarField2 g12,
                                  ScalarField2 g22, Rect domain, int nu,
                                  double h) {
  if (nu != 0 && nu != 1) throw precondition_error("metric index must be 0 or 1");
  MetricPatch p;
  p.g11 = g11;
  p.g12 = g12;
  p.g22 = g22;
  p.g11_u = partial_u(g11, h);
  p.g11_v = partial_v(g11, h);
  p.g12_u = partial_u(g12, h);
  p.g12_v = partial_v(g12, h);
  p.g22_u = partial_u(g22, h);
  p.g22_v = partial_v(g22, h);
  p.nu = nu;
  p.domain = domain;
  return p;
}

MetricPatch induced_metric(const SurfaceModel& m, double h) {
  auto coef = [m](int which) -> ScalarField2 {
    return [m, which](double u, double v) {
      const SurfaceJet j = m.eval(u, v);
      switch (which) {
        case 0: return inner3(m.ambient, j.du, j.du);
        case 1: return inner3(m.ambient, j.du, j.dv);
        default: return inner3(m.ambient, j.dv, j.dv);
      }
    };
  };
  // The patch index is the index of the induced form itself (a spacelike
  // sheet of L^3 carries a Riemannian metric), probed at the domain center.
  const double uc = 0.5 * (m.domain.u.lo + m.domain.u.hi);
  const double vc = 0.5 * (m.domain.v.lo + m.domain.v.hi);
  const double E = coef(0)(uc, vc), F = coef(1)(uc, vc), G = coef(2)(uc, vc);
  const double det = E * G - F * F;
  const double scale = std::max(1e-300, E * E + 2 * F * F + G * G);
  if (std::abs(det) <= 1e-12 * scale)
    throw precondition_error("induced_metric: degenerate at the domain center");
  int nu = 1;
  if (det > 0) {
    if (E < 0) throw precondition_error("induced_metric: negative definite sheet");
    nu = 0;
  }
  return metric_from_functions(coef(0), coef(1), coef(2), m.domain, nu, h);
}

Christoffels christoffel_symbols(const MetricPatch& p, double u, double v) {
  const Matrix2d g = p.components(u, v);
  const double det = g.determinant();
  if (std::abs(det) <= 1e-14 * std::max(1.0, g.squaredNorm()))
    throw precondition_error("metric degenerates at requested point");
  const Matrix2d ginv = g.inverse();

  // dg[r](i,j) = d_r g_ij
  Matrix2d dg[2];
  dg[0] << p.g11_u(u, v), p.g12_u(u, v), p.g12_u(u, v), p.g22_u(u, v);
  dg[1] << p.g11_v(u, v), p.g12_v(u, v), p.g12_v(u, v), p.g22_v(u, v);

  Christoffels out;
  Matrix2d* gam[2] = {&out.gamma1, &out.gamma2};
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0;
        for (int r = 0; r < 2; ++r)
          s += 0.5 * ginv(k, r) * (dg[j](i, r) + dg[i](j, r) - dg[r](i, j));
        (*gam[k])(i, j) = s;
      }
  }
  return out;
}

double patch_quadrance(const MetricPatch& p, double u, double v, const Vector2d& w) {
  return w.dot(p.components(u, v) * w);
}

GeodesicTrace integrate_geodesic(const MetricPatch& p, const GeodesicState& s0,
                                 double t1, int steps) {
  if (steps <= 0) throw precondition_error("geodesic integration needs steps > 0");
  using State = Eigen::Vector4d;  // (u, v, u', v')

  auto rhs = [&p](double, const State& y) {
    const Christoffels ch = christoffel_symbols(p, y[0], y[1]);
    const Vector2d vel(y[2], y[3]);
    State dy;
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = -vel.dot(ch.gamma1 * vel);
    dy[3] = -vel.dot(ch.gamma2 * vel);
    return dy;
  };

  GeodesicTrace tr;
  tr.t.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  const double h = t1 / steps;
  State y;
  y << s0.pos[0], s0.pos[1], s0.vel[0], s0.vel[1];
  const double q0 = patch_quadrance(p, y[0], y[1], s0.vel);

  double t = 0;
  tr.t.push_back(t);
  tr.states.push_back(s0);
  for (int i = 0; i < steps; ++i) {
    y = rk4_step(rhs, t, y, h);
    t = (i + 1) * h;
    GeodesicState s{{y[0], y[1]}, {y[2], y[3]}};
    tr.speed_drift = std::max(
        tr.speed_drift, std::abs(patch_quadrance(p, y[0], y[1], s.vel) - q0));
    tr.t.push_back(t);
    tr.states.push_back(s);
  }
  return tr;
}

}  // namespace mink
