#pragma once

// Deterministic quadrature: fixed 32-point Gauss-Legendre panels and an
// adaptive Simpson fallback for integrals that need a target tolerance.

#include <functional>

namespace mink {

struct GaussLegendre {
  // nodes on [-1,1] and matching weights
  const double* nodes;
  const double* weights;
  int order;
};

// Shared 32-point rule (nodes computed once, thread-safe init).
const GaussLegendre& gauss_legendre_32();

// Integral of f over [a,b] with one n-point Gauss-Legendre panel.
double gl_integrate(const std::function<double(double)>& f, double a, double b);

// Integral of f over [a,b] split into `panels` equal Gauss-Legendre panels.
double gl_integrate_panels(const std::function<double(double)>& f, double a, double b,
                           int panels);

// Adaptive Simpson to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10);

}  // namespace mink
