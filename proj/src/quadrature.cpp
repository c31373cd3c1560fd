#include "minkgeo/quadrature.hpp"

#include <array>
#include <cmath>

namespace mink {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

struct GL32Data {
  std::array<double, 32> x{};
  std::array<double, 32> w{};
  GL32Data() {
    constexpr int n = 32;
    for (int k = 0; k < n; ++k) {
      double xk = std::cos(M_PI * (k + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        const auto [p, dp] = legendre(n, xk);
        const double dx = p / dp;
        xk -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const auto [p, dp] = legendre(n, xk);
      (void)p;
      x[k] = xk;
      w[k] = 2.0 / ((1.0 - xk * xk) * dp * dp);
    }
  }
};

const GL32Data& gl32_data() {
  static const GL32Data d;
  return d;
}

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double m,
                   double fm, double b, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

const GaussLegendre& gauss_legendre_32() {
  static const GaussLegendre rule{gl32_data().x.data(), gl32_data().w.data(), 32};
  return rule;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b) {
  const GaussLegendre& rule = gauss_legendre_32();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < rule.order; ++i)
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

double gl_integrate_panels(const std::function<double(double)>& f, double a, double b,
                           int panels) {
  double s = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double p0 = a + (b - a) * i / panels;
    const double p1 = a + (b - a) * (i + 1) / panels;
    s += gl_integrate(f, p0, p1);
  }
  return s;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(a, fa, fm, b, fb);
  return simpson_rec(f, a, fa, m, fm, b, fb, whole, tol, 50);
}

}  // namespace mink
