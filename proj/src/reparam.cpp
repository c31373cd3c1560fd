#include "minkgeo/reparam.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "minkgeo/quadrature.hpp"

namespace mink {

namespace {

struct WeightJet {
  double v;   // weight W(t)
  double vd;  // dW/dt
};

// Shared immutable inversion table; captured by the returned closures.
struct ReparamTable {
  CurveModel base;
  ReparamMode mode;
  std::vector<double> t_nodes, s_nodes;

  double weight(double t) const {
    const CurveJet j = base.eval(t);
    if (mode == ReparamMode::UnitSpeed) {
      const double q = inner3(base.ambient, j.d1, j.d1);
      const double e2 = j.d1.squaredNorm();
      if (std::abs(q) <= kCausalTol * std::max(e2, 1e-300))
        throw precondition_error("reparametrize: curve is lightlike at a sample");
      return std::sqrt(std::abs(q));
    }
    const double q1 = inner3(base.ambient, j.d1, j.d1);
    if (std::abs(q1) > 1e-9 * std::max(j.d1.squaredNorm(), 1e-300))
      throw precondition_error("reparametrize: arc-photon needs a lightlike curve");
    const double r = inner3(base.ambient, j.d2, j.d2);
    if (r <= 1e-18)
      throw precondition_error("reparametrize: arc-photon needs spacelike alpha''");
    return std::pow(r, 0.25);
  }

  WeightJet weight_jet(double t) const {
    const CurveJet j = base.eval(t);
    if (mode == ReparamMode::UnitSpeed) {
      const double q = inner3(base.ambient, j.d1, j.d1);
      const double sgn = q > 0 ? 1.0 : -1.0;
      const double v = std::sqrt(std::abs(q));
      const double qd = 2.0 * inner3(base.ambient, j.d1, j.d2);
      return {v, sgn * qd / (2.0 * v)};
    }
    const double r = inner3(base.ambient, j.d2, j.d2);
    const double v = std::pow(r, 0.25);
    const double rd = 2.0 * inner3(base.ambient, j.d2, j.d3);
    return {v, 0.25 * rd * std::pow(r, -0.75)};
  }

  // sigma(t) = lo + integral_lo^t W; table nodes plus a local panel.
  double sigma(double t) const {
    const auto it = std::upper_bound(t_nodes.begin(), t_nodes.end(), t);
    const size_t i = it == t_nodes.begin() ? 0 : (it - t_nodes.begin()) - 1;
    const double base_t = t_nodes[i], base_s = s_nodes[i];
    return base_s + gl_integrate([this](double x) { return weight(x); }, base_t, t);
  }

  double invert(double s) const {
    // bracket from the table, then safeguarded Newton
    auto it = std::lower_bound(s_nodes.begin(), s_nodes.end(), s);
    size_t hi_i = std::min<size_t>(it - s_nodes.begin(), s_nodes.size() - 1);
    size_t lo_i = hi_i == 0 ? 0 : hi_i - 1;
    double lo = t_nodes[lo_i], hi = t_nodes[hi_i];
    if (hi <= lo) hi = lo + 1e-12;
    const double slo = s_nodes[lo_i], shi = s_nodes[hi_i];
    double t = shi > slo ? lo + (hi - lo) * (s - slo) / (shi - slo) : lo;
    for (int iter = 0; iter < 100; ++iter) {
      const double err = sigma(t) - s;
      if (std::abs(err) <= 1e-13 * std::max(1.0, std::abs(s))) return t;
      if (err > 0) hi = t;
      else lo = t;
      const double step = err / weight(t);
      double next = t - step;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      t = next;
    }
    return t;
  }
};

}  // namespace

static std::shared_ptr<ReparamTable> build_table(const CurveModel& c, ReparamMode mode) {
  auto tab = std::make_shared<ReparamTable>();
  tab->base = c;
  tab->mode = mode;
  const int n = 1024;
  tab->t_nodes.resize(n + 1);
  tab->s_nodes.resize(n + 1);
  tab->t_nodes[0] = c.domain.lo;
  tab->s_nodes[0] = c.domain.lo;  // anchor sigma(lo) = lo
  for (int i = 1; i <= n; ++i) {
    const double t0 = c.domain.lo + c.domain.length() * (i - 1) / n;
    const double t1 = c.domain.lo + c.domain.length() * i / n;
    tab->t_nodes[i] = t1;
    tab->s_nodes[i] = tab->s_nodes[i - 1] +
                      gl_integrate([&](double x) { return tab->weight(x); }, t0, t1);
    if (tab->s_nodes[i] - tab->s_nodes[i - 1] <= 1e-14 * (t1 - t0))
      throw numerical_error("reparametrize: arclength numerically flat");
  }
  return tab;
}

CurveModel reparametrize(const CurveModel& c, ReparamMode mode) {
  auto tab = build_table(c, mode);
  CurveModel out;
  out.ambient = c.ambient;
  out.domain = {tab->s_nodes.front(), tab->s_nodes.back()};
  out.eval = [tab](double s) {
    const double t = tab->invert(s);
    const CurveJet j = tab->base.eval(t);
    const WeightJet w = tab->weight_jet(t);
    double vdd;
    if (tab->mode == ReparamMode::UnitSpeed) {
      const double q = inner3(tab->base.ambient, j.d1, j.d1);
      const double sgn = q > 0 ? 1.0 : -1.0;
      const double qdd = 2.0 * (inner3(tab->base.ambient, j.d2, j.d2) +
                                inner3(tab->base.ambient, j.d1, j.d3));
      vdd = (sgn * qdd - 2.0 * w.vd * w.vd) / (2.0 * w.v);
    } else {
      // d^2W/dt^2 would need alpha''''; differentiate the exact dW/dt instead.
      const double h = 1e-5;
      vdd = (tab->weight_jet(t + h).vd - tab->weight_jet(t - h).vd) / (2.0 * h);
    }
    const double v = w.v;
    const double tp = 1.0 / v;
    const double tpp = -w.vd / (v * v * v);
    const double tppp = -vdd / std::pow(v, 4) + 3.0 * w.vd * w.vd / std::pow(v, 5);
    CurveJet out_j;
    out_j.p = j.p;
    out_j.d1 = j.d1 * tp;
    out_j.d2 = j.d2 * (tp * tp) + j.d1 * tpp;
    out_j.d3 = j.d3 * (tp * tp * tp) + 3.0 * (tp * tpp) * j.d2 + tppp * j.d1;
    return out_j;
  };
  return out;
}

std::function<double(double)> reparam_sigma(const CurveModel& c, ReparamMode mode) {
  auto tab = build_table(c, mode);
  return [tab](double t) { return tab->sigma(t); };
}

}  // namespace mink
