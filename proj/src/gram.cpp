#include "minkgeo/gram.hpp"

#include <Eigen/SVD>

namespace mink {

MatrixXd gram_matrix(const Signature& sig, const std::vector<VectorXd>& us,
                     const std::vector<VectorXd>& vs) {
  MatrixXd g(us.size(), vs.size());
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j)
      g(i, j) = inner(sig, us[i], vs[j]);
  return g;
}

bool invertible(const MatrixXd& m, double rel_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return false;
  return sv(sv.size() - 1) > rel_tol * smax;
}

std::vector<VectorXd> gram_schmidt_adapted(const Signature& sig,
                                           const std::vector<VectorXd>& vs,
                                           double tol) {
  std::vector<VectorXd> out;
  out.reserve(vs.size());
  for (const VectorXd& v : vs) {
    detail::require_dim(sig, v.size(), "gram_schmidt_adapted");
    VectorXd w = v;
    for (const VectorXd& u : out)
      w -= (inner(sig, v, u) / inner(sig, u, u)) * u;
    const double scale = std::max(v.squaredNorm(), 1.0);
    if (w.squaredNorm() <= 1e-20 * scale)
      throw dependent_input_error("gram_schmidt_adapted: dependent input vector");
    if (std::abs(inner(sig, w, w)) <= tol * w.squaredNorm())
      throw degenerate_chain_error(
          "gram_schmidt_adapted: intermediate span is degenerate (lightlike vector produced)");
    out.push_back(std::move(w));
  }
  return out;
}

SylvesterCount normalize_orthogonal(const Signature& sig, const std::vector<VectorXd>& vs) {
  SylvesterCount r;
  r.unit.reserve(vs.size());
  for (const VectorXd& v : vs) {
    const CausalRecord c = causal_character(sig, v);
    if (c.cls == CausalClass::Lightlike)
      throw precondition_error("normalize_orthogonal: lightlike vector has no unit multiple");
    r.unit.push_back(v / c.fake_norm);
    (c.cls == CausalClass::Spacelike ? r.spacelike : r.timelike) += 1;
  }
  return r;
}

}  // namespace mink
