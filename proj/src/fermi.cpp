#include "minkgeo/fermi.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "minkgeo/rk4.hpp"

namespace mink {

namespace {

using State = Eigen::Vector4d;  // (u, v, u', v')

State geodesic_rhs(const MetricPatch& p, const State& y) {
  const Christoffels ch = christoffel_symbols(p, y[0], y[1]);
  const Vector2d vel(y[2], y[3]);
  State dy;
  dy[0] = y[2];
  dy[1] = y[3];
  dy[2] = -vel.dot(ch.gamma1 * vel);
  dy[3] = -vel.dot(ch.gamma2 * vel);
  return dy;
}

State advance(const MetricPatch& p, State y, double h, int substeps) {
  auto rhs = [&p](double, const State& s) { return geodesic_rhs(p, s); };
  const double hs = h / substeps;
  for (int k = 0; k < substeps; ++k) y = rk4_step(rhs, 0.0, y, hs);
  return y;
}

// g-orthogonal direction to t at (u,v): J (g t) with J the quarter turn;
// antisymmetry of g J g makes <J g t, t>_g vanish identically.
Vector2d orthogonal_direction(const Matrix2d& g, const Vector2d& t) {
  const Vector2d gt = g * t;
  return Vector2d(-gt[1], gt[0]);
}

}  // namespace

FermiChart fermi_chart(const MetricPatch& p, const GeodesicState& base_start,
                       double half_width, Interval v_range,
                       const FermiOptions& opt) {
  if (opt.u_half_samples < 1 || opt.v_samples < 3)
    throw precondition_error("fermi chart needs u_half_samples >= 1 and v_samples >= 3");
  if (!(half_width > 0) || !(v_range.length() > 0))
    throw precondition_error("fermi chart needs positive strip extents");

  const int nu = 2 * opt.u_half_samples + 1;
  const int nv = opt.v_samples;
  const int i0 = opt.u_half_samples;  // base row
  const double du = half_width / opt.u_half_samples;
  const double dv = v_range.length() / (nv - 1);

  FermiChart ch;
  ch.u.resize(nu);
  for (int i = 0; i < nu; ++i) ch.u[i] = (i - i0) * du;
  ch.v.resize(nv);
  for (int j = 0; j < nv; ++j) ch.v[j] = v_range.lo + j * dv;

  // Normalize the base velocity and fix the causal sign of gamma.
  const double q0 =
      patch_quadrance(p, base_start.pos[0], base_start.pos[1], base_start.vel);
  if (std::abs(q0) <= kCausalTol * base_start.vel.squaredNorm())
    throw precondition_error("base geodesic is lightlike");
  ch.eps_gamma = q0 > 0 ? 1 : -1;
  ch.E_expected = (p.nu % 2 == 0 ? 1.0 : -1.0) * ch.eps_gamma;

  State base;
  base << base_start.pos[0], base_start.pos[1], base_start.vel[0] / std::sqrt(std::abs(q0)),
      base_start.vel[1] / std::sqrt(std::abs(q0));

  ch.E = ch.F = ch.G = MatrixXd::Zero(nu, nv);
  ch.point_u = ch.point_v = MatrixXd::Zero(nu, nv);
  MatrixXd vel_u = MatrixXd::Zero(nu, nv), vel_v = MatrixXd::Zero(nu, nv);

  for (int j = 0; j < nv; ++j) {
    const Vector2d pos(base[0], base[1]);
    const Vector2d tangent(base[2], base[3]);
    const Matrix2d g = p.components(pos[0], pos[1]);

    Vector2d w = orthogonal_direction(g, tangent);
    const double qw = w.dot(g * w);
    if (std::abs(qw) <= kCausalTol * w.squaredNorm())
      throw numerical_error("orthogonal direction degenerates on base geodesic");
    if ((qw > 0 ? 1.0 : -1.0) != ch.E_expected)
      throw numerical_error("orthogonal direction has unexpected causal type");
    w /= std::sqrt(std::abs(qw));

    // Walk the orthogonal geodesic both ways from u = 0.
    State y;
    y << pos[0], pos[1], w[0], w[1];
    auto store = [&](int i, const State& s) {
      ch.point_u(i, j) = s[0];
      ch.point_v(i, j) = s[1];
      vel_u(i, j) = s[2];
      vel_v(i, j) = s[3];
    };
    store(i0, y);
    State up = y, down = y;
    for (int k = 1; k <= opt.u_half_samples; ++k) {
      up = advance(p, up, du, opt.substeps);
      store(i0 + k, up);
      down = advance(p, down, -du, opt.substeps);
      store(i0 - k, down);
    }

    if (j + 1 < nv) base = advance(p, base, dv, opt.substeps);
  }

  // Assemble first-form coefficients: E from stored shooting velocities,
  // x_v by finite differences across columns (one-sided at the edges).
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      Vector2d xv;
      if (j == 0)
        xv = Vector2d(-3 * ch.point_u(i, 0) + 4 * ch.point_u(i, 1) - ch.point_u(i, 2),
                      -3 * ch.point_v(i, 0) + 4 * ch.point_v(i, 1) - ch.point_v(i, 2)) /
             (2 * dv);
      else if (j == nv - 1)
        xv = Vector2d(3 * ch.point_u(i, j) - 4 * ch.point_u(i, j - 1) + ch.point_u(i, j - 2),
                      3 * ch.point_v(i, j) - 4 * ch.point_v(i, j - 1) + ch.point_v(i, j - 2)) /
             (2 * dv);
      else
        xv = Vector2d(ch.point_u(i, j + 1) - ch.point_u(i, j - 1),
                      ch.point_v(i, j + 1) - ch.point_v(i, j - 1)) /
             (2 * dv);

      const Vector2d xu(vel_u(i, j), vel_v(i, j));
      const Matrix2d g = p.components(ch.point_u(i, j), ch.point_v(i, j));
      ch.E(i, j) = xu.dot(g * xu);
      ch.F(i, j) = xu.dot(g * xv);
      ch.G(i, j) = xv.dot(g * xv);

      Matrix2d jac;
      jac.col(0) = xu;
      jac.col(1) = xv;
      Eigen::JacobiSVD<Matrix2d> svd(jac);
      const double smin = svd.singularValues()(1);
      if (smin <= 0 || svd.singularValues()(0) / smin > opt.max_condition)
        throw numerical_error("fermi chart folds within the requested strip");

      ch.max_E_err = std::max(ch.max_E_err, std::abs(ch.E(i, j) - ch.E_expected));
      ch.max_F = std::max(ch.max_F, std::abs(ch.F(i, j)));
    }
  }
  for (int j = 0; j < nv; ++j)
    ch.max_Gu0 = std::max(
        ch.max_Gu0, std::abs(ch.G(i0 + 1, j) - ch.G(i0 - 1, j)) / (2 * du));

  return ch;
}

}  // namespace mink
