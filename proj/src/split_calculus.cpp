#include "minkgeo/split.hpp"

#include <cmath>
#include <utility>

#include "minkgeo/quadrature.hpp"

namespace mink {

// ---------------------------------------------------------------------------
// Jet arithmetic
// ---------------------------------------------------------------------------

SplitJet2 exp(const SplitJet2& a) {
  const SplitComplex e = exp(a.f);
  return {e,
          e * a.fx,
          e * a.fy,
          e * (a.fxx + a.fx * a.fx),
          e * (a.fxy + a.fx * a.fy),
          e * (a.fyy + a.fy * a.fy)};
}

SplitJet2 inverse(const SplitJet2& a, double tol) {
  const SplitComplex i1 = a.f.inverse(tol);
  const SplitComplex i2 = i1 * i1;
  const SplitComplex i3 = i2 * i1;
  return {i1,
          -(i2 * a.fx),
          -(i2 * a.fy),
          2.0 * (i3 * (a.fx * a.fx)) - i2 * a.fxx,
          2.0 * (i3 * (a.fx * a.fy)) - i2 * a.fxy,
          2.0 * (i3 * (a.fy * a.fy)) - i2 * a.fyy};
}

SplitFunction SplitFunction::from_closed(SplitJetFn j) {
  SplitFunction f;
  f.jets = j;
  f.value = [j](SplitComplex w) { return j(w).f; };
  return f;
}

SplitFunction SplitFunction::from_pointwise(SplitValueFn v, double step) {
  SplitFunction f;
  f.value = v;
  f.jets = [v, step](SplitComplex w) {
    const double x = w.re, y = w.im;
    auto at = [&](double dx, double dy) { return v({x + dx, y + dy}); };
    const SplitComplex c = at(0, 0);
    const SplitComplex xp = at(step, 0), xm = at(-step, 0);
    const SplitComplex yp = at(0, step), ym = at(0, -step);
    const SplitComplex pp = at(step, step), pm = at(step, -step);
    const SplitComplex mp = at(-step, step), mm = at(-step, -step);
    SplitJet2 j;
    j.f = c;
    j.fx = (xp - xm) / (2.0 * step);
    j.fy = (yp - ym) / (2.0 * step);
    j.fxx = (xp - 2.0 * c + xm) / (step * step);
    j.fyy = (yp - 2.0 * c + ym) / (step * step);
    j.fxy = (pp - pm - mp + mm) / (4.0 * step * step);
    return j;
  };
  return f;
}

ScalarField ScalarField::from_pointwise(std::function<double(double, double)> v,
                                        double step) {
  ScalarField f;
  f.jets = [v, step](double x, double y) {
    auto at = [&](double dx, double dy) { return v(x + dx, y + dy); };
    const double c = at(0, 0);
    const double xp = at(step, 0), xm = at(-step, 0);
    const double yp = at(0, step), ym = at(0, -step);
    RealJet2 j;
    j.f = c;
    j.fx = (xp - xm) / (2.0 * step);
    j.fy = (yp - ym) / (2.0 * step);
    j.fxx = (xp - 2.0 * c + xm) / (step * step);
    j.fyy = (yp - 2.0 * c + ym) / (step * step);
    j.fxy = (at(step, step) - at(step, -step) - at(-step, step) + at(-step, -step)) /
            (4.0 * step * step);
    return j;
  };
  return f;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

DerivativeRecord differentiate(const SplitFunction& f, SplitComplex w, double tol) {
  if (!f.contains(w)) throw precondition_error("differentiate: point outside field domain");
  const SplitJet2 j = f.jets(w);
  const SplitComplex h{0.0, 1.0};

  DerivativeRecord r;
  r.dw = 0.5 * (j.fx + h * j.fy);
  r.dwbar = 0.5 * (j.fx - h * j.fy);
  r.cr_residual =
      std::max(std::abs(j.fx.re - j.fy.im), std::abs(j.fy.re - j.fx.im));
  r.dalembertian_phi = j.fxx.re - j.fyy.re;
  r.dalembertian_psi = j.fxx.im - j.fyy.im;
  // Euclidean size of dwbar, scale-relative: a lightlike residual still counts
  // as a Cauchy-Riemann violation, so the split modulus is not used here.
  const double scale = std::max(1.0, std::max(j.fx.euclidean_norm(), j.fy.euclidean_norm()));
  r.split_holomorphic = r.dwbar.euclidean_norm() <= tol * scale;
  return r;
}

SplitComplex box_via_wirtinger(const SplitJet2& j) {
  const SplitComplex h{0.0, 1.0};
  // g = d/dw f = (1/2)(f_x + h f_y); partials of g from the second jets of f.
  const SplitComplex gx = 0.5 * (j.fxx + h * j.fxy);
  const SplitComplex gy = 0.5 * (j.fxy + h * j.fyy);
  return 4.0 * (0.5 * (gx - h * gy));
}

// ---------------------------------------------------------------------------
// Line integrals
// ---------------------------------------------------------------------------

SplitComplex integrate_segment(const SplitValueFn& f, SplitComplex a, SplitComplex b) {
  const SplitComplex d = b - a;
  const double len = d.euclidean_norm();
  if (len == 0.0) return {};
  // One 32-point panel per unit of Euclidean length keeps long segments sharp
  // while staying deterministic.
  const int panels = std::max(1, static_cast<int>(std::ceil(len)));
  const GaussLegendre& gl = gauss_legendre_32();
  SplitComplex total{};
  for (int p = 0; p < panels; ++p) {
    const double t0 = double(p) / panels, t1 = double(p + 1) / panels;
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    SplitComplex acc{};
    for (int k = 0; k < gl.order; ++k) {
      const double t = mid + half * gl.nodes[k];
      acc += gl.weights[k] * f(a + t * d);
    }
    total += half * acc;
  }
  return total * d;
}

namespace {
void check_inside(const SplitFunction& f, const std::vector<SplitComplex>& pts) {
  for (const SplitComplex& p : pts)
    if (!f.contains(p)) throw precondition_error("integrate: path exits field domain");
}
}  // namespace

SplitComplex integrate_polyline(const SplitFunction& f,
                                const std::vector<SplitComplex>& pts) {
  if (pts.size() < 2) throw precondition_error("integrate: path needs at least 2 vertices");
  check_inside(f, pts);
  SplitComplex total{};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total += integrate_segment(f.value, pts[i], pts[i + 1]);
  return total;
}

SplitComplex integrate_loop(const SplitFunction& f, std::vector<SplitComplex> pts) {
  if (pts.size() < 2) throw precondition_error("integrate: loop needs at least 2 vertices");
  pts.push_back(pts.front());
  return integrate_polyline(f, pts);
}

SplitComplex integrate_L(const SplitFunction& f, SplitComplex w0, SplitComplex w1) {
  const SplitComplex corner{w1.re, w0.im};
  return integrate_polyline(f, {w0, corner, w1});
}

// ---------------------------------------------------------------------------
// Lorentz conjugates
// ---------------------------------------------------------------------------

ConjugateField lorentz_conjugate(const ScalarField& phi, Vector2d base,
                                 double harmonic_tol) {
  const RealJet2 at_base = phi.jets(base.x(), base.y());
  const double scale =
      std::max(1.0, std::max(std::abs(at_base.fxx), std::abs(at_base.fyy)));
  if (std::abs(at_base.fxx - at_base.fyy) > harmonic_tol * scale) {
    throw precondition_error(
        "lorentz_conjugate: field is not Lorentz-harmonic (box phi != 0)");
  }

  auto phi_jets = phi.jets;
  // g = phi_x + h phi_y is split-holomorphic exactly when box phi = 0; its
  // primitive has imaginary part psi with psi_y = phi_x and psi_x = phi_y.
  SplitValueFn g = [phi_jets](SplitComplex w) -> SplitComplex {
    const RealJet2 j = phi_jets(w.re, w.im);
    return {j.fx, j.fy};
  };

  SplitFunction g_field;
  g_field.value = g;
  g_field.domain = phi.domain;

  const SplitComplex w0{base.x(), base.y()};
  auto psi = [g_field, w0](double x, double y) {
    return integrate_L(g_field, w0, {x, y}).im;
  };

  // Completion f = phi + h psi; the jets of psi follow from the conjugacy
  // equations, so only its value needs quadrature.
  SplitFunction completion;
  completion.domain = phi.domain;
  completion.value = [phi_jets, psi](SplitComplex w) -> SplitComplex {
    return {phi_jets(w.re, w.im).f, psi(w.re, w.im)};
  };
  completion.jets = [phi_jets, psi](SplitComplex w) {
    const RealJet2 j = phi_jets(w.re, w.im);
    SplitJet2 out;
    out.f = {j.f, psi(w.re, w.im)};
    out.fx = {j.fx, j.fy};
    out.fy = {j.fy, j.fx};
    out.fxx = {j.fxx, j.fxy};
    out.fxy = {j.fxy, 0.5 * (j.fxx + j.fyy)};
    out.fyy = {j.fyy, j.fxy};
    return out;
  };

  ConjugateField out;
  out.psi = psi;
  out.completion = completion;
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

SplitFunction liouville_bounded_fixture() {
  // f = (1 + h) sigma(x + y) with the logistic sigma; bounded and
  // split-holomorphic everywhere, yet non-constant.
  return SplitFunction::from_closed([](SplitComplex w) {
    const double t = w.re + w.im;
    const double s = 1.0 / (1.0 + std::exp(-t));
    const double s1 = s * (1.0 - s);
    const double s2 = s1 * (1.0 - 2.0 * s);
    const SplitComplex one_h{1.0, 1.0};
    SplitJet2 j;
    j.f = one_h * s;
    j.fx = j.fy = one_h * s1;
    j.fxx = j.fxy = j.fyy = one_h * s2;
    return j;
  });
}

}  // namespace mink
