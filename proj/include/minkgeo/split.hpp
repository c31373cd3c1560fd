#pragma once

// Split-complex analysis on C' = { x + h y : h^2 = +1 }:
//   - order-2 jets of split-complex-valued fields over (x, y),
//   - Wirtinger operators d/dw = (1/2)(d/dx + h d/dy), d/dwbar = (1/2)(d/dx - h d/dy),
//   - the revised Cauchy-Riemann test (phi_x = psi_y and phi_y = psi_x),
//   - line integrals along piecewise-linear paths (Gauss-Legendre per segment),
//   - Lorentz-conjugate construction for Lorentz-harmonic scalar fields.

#include <functional>
#include <vector>

#include "minkgeo/binarion.hpp"
#include "minkgeo/types.hpp"

namespace mink {

// ---------------------------------------------------------------------------
// Order-2 jets: value and partial derivatives in (x, y) up to second order.
// Forward-mode Taylor arithmetic keeps closed-form jets exact.
// ---------------------------------------------------------------------------

struct SplitJet2 {
  SplitComplex f{}, fx{}, fy{}, fxx{}, fxy{}, fyy{};

  SplitJet2 operator+(const SplitJet2& o) const {
    return {f + o.f, fx + o.fx, fy + o.fy, fxx + o.fxx, fxy + o.fxy, fyy + o.fyy};
  }
  SplitJet2 operator-(const SplitJet2& o) const {
    return {f - o.f, fx - o.fx, fy - o.fy, fxx - o.fxx, fxy - o.fxy, fyy - o.fyy};
  }
  SplitJet2 operator*(const SplitJet2& o) const {
    return {f * o.f,
            fx * o.f + f * o.fx,
            fy * o.f + f * o.fy,
            fxx * o.f + 2.0 * (fx * o.fx) + f * o.fxx,
            fxy * o.f + fx * o.fy + fy * o.fx + f * o.fxy,
            fyy * o.f + 2.0 * (fy * o.fy) + f * o.fyy};
  }
  SplitJet2 operator*(const SplitComplex& c) const {
    return {f * c, fx * c, fy * c, fxx * c, fxy * c, fyy * c};
  }
  SplitJet2 operator*(double s) const {
    return {f * s, fx * s, fy * s, fxx * s, fxy * s, fyy * s};
  }
  SplitJet2 operator-() const { return {-f, -fx, -fy, -fxx, -fxy, -fyy}; }
  SplitJet2 conj() const {
    return {f.conj(), fx.conj(), fy.conj(), fxx.conj(), fxy.conj(), fyy.conj()};
  }
};

// Jet of the identity field w = x + h y.
inline SplitJet2 jet_variable(SplitComplex w) {
  return {w, {1.0, 0.0}, {0.0, 1.0}, {}, {}, {}};
}
// Jet of the conjugate field wbar = x - h y.
inline SplitJet2 jet_conj_variable(SplitComplex w) {
  return {w.conj(), {1.0, 0.0}, {0.0, -1.0}, {}, {}, {}};
}
inline SplitJet2 jet_constant(SplitComplex c) { return {c, {}, {}, {}, {}, {}}; }

// exp composed with a jet (chain rule through second order).
SplitJet2 exp(const SplitJet2& a);
// 1/f composed with a jet; throws zero_divisor_error where f is not invertible.
SplitJet2 inverse(const SplitJet2& a, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

using SplitValueFn = std::function<SplitComplex(SplitComplex)>;
using SplitJetFn = std::function<SplitJet2(SplitComplex)>;

// Split-complex-valued field over an open set of C' with order-2 jets.
struct SplitFunction {
  SplitValueFn value;          // always present
  SplitJetFn jets;             // exact for closed forms, FD for black boxes
  std::vector<Rect> domain{};  // empty = the whole plane

  bool contains(SplitComplex w) const {
    if (domain.empty()) return true;
    for (const Rect& r : domain)
      if (r.contains(w.re, w.im)) return true;
    return false;
  }
  SplitComplex operator()(SplitComplex w) const { return value(w); }

  // Closed-form field: jets supplied by Taylor arithmetic.
  static SplitFunction from_closed(SplitJetFn j);
  // Black-box field: jets by central differences with the given step.
  static SplitFunction from_pointwise(SplitValueFn v, double step = 1e-5);
};

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

struct DerivativeRecord {
  SplitComplex dw{};        // (1/2)(f_x + h f_y)
  SplitComplex dwbar{};     // (1/2)(f_x - h f_y)
  double cr_residual = 0.0; // max(|phi_x - psi_y|, |phi_y - psi_x|)
  double dalembertian_phi = 0.0;  // phi_xx - phi_yy
  double dalembertian_psi = 0.0;  // psi_xx - psi_yy
  bool split_holomorphic = false; // |dwbar| below scale-relative tol
};

// Wirtinger derivatives, Cauchy-Riemann residual and d'Alembertians of f at w.
// When split_holomorphic is true, f'(w) = dw.
DerivativeRecord differentiate(const SplitFunction& f, SplitComplex w, double tol = 1e-6);

// The operator composition 4 d/dwbar (d/dw f) evaluated from the jets of f:
// first d/dw f as a field (with its x/y partials from the second jets of f),
// then d/dwbar of that field. Agrees with the d'Alembertian (fxx - fyy)
// applied componentwise.
SplitComplex box_via_wirtinger(const SplitJet2& j);
// Direct d'Alembertian fxx - fyy as a split number (phi and psi components).
inline SplitComplex box_direct(const SplitJet2& j) { return j.fxx - j.fyy; }

// ---------------------------------------------------------------------------
// Line integrals: int_gamma f(w) dw along piecewise-linear paths.
// ---------------------------------------------------------------------------

SplitComplex integrate_segment(const SplitValueFn& f, SplitComplex a, SplitComplex b);
// Open polyline through the listed vertices (at least two).
SplitComplex integrate_polyline(const SplitFunction& f, const std::vector<SplitComplex>& pts);
// Closed loop: the polyline is closed back to its first vertex.
SplitComplex integrate_loop(const SplitFunction& f, std::vector<SplitComplex> pts);
// Axis-aligned L path from w0 to w1 via the corner (w1.re, w0.im).
SplitComplex integrate_L(const SplitFunction& f, SplitComplex w0, SplitComplex w1);

// ---------------------------------------------------------------------------
// Lorentz conjugates: psi with phi_x = psi_y and phi_y = psi_x.
// ---------------------------------------------------------------------------

struct RealJet2 {
  double f = 0.0, fx = 0.0, fy = 0.0, fxx = 0.0, fxy = 0.0, fyy = 0.0;
};

// Real scalar field over (x, y) with order-2 jets.
struct ScalarField {
  std::function<RealJet2(double, double)> jets;
  std::vector<Rect> domain{};

  double operator()(double x, double y) const { return jets(x, y).f; }
  static ScalarField from_pointwise(std::function<double(double, double)> v,
                                    double step = 1e-5);
};

struct ConjugateField {
  // psi(x, y), normalized to psi(base) = 0.
  std::function<double(double, double)> psi;
  // The completed split-holomorphic function f = phi + h psi with exact jets
  // derived from the jets of phi.
  SplitFunction completion;
};

// Builds the Lorentz conjugate of a Lorentz-harmonic phi (box phi ~ 0) as the
// imaginary part of a primitive of g = phi_x + h phi_y, integrated along an
// axis-aligned L path from the basepoint. Throws precondition_error when the
// d'Alembertian residual of phi at the basepoint exceeds harmonic_tol (the
// default absorbs the noise of finite-difference second jets at step 1e-5).
ConjugateField lorentz_conjugate(const ScalarField& phi, Vector2d base,
                                 double harmonic_tol = 1e-4);

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

// Bounded, non-constant, everywhere split-holomorphic field
// f(x + h y) = (1 + h) / (1 + e^{-x} e^{-y}); Euclidean modulus < sqrt(2).
SplitFunction liouville_bounded_fixture();

}  // namespace mink
