#include "minkgeo/cross.hpp"

namespace mink {

VectorXd cross_product(const Signature& sig, const std::vector<VectorXd>& vs) {
  const int n = sig.n;
  if (static_cast<int>(vs.size()) != n - 1)
    throw precondition_error("cross_product: expected n-1 vectors");
  MatrixXd rows(n - 1, n);
  for (int i = 0; i < n - 1; ++i) {
    detail::require_dim(sig, vs[i].size(), "cross_product");
    rows.row(i) = vs[i].transpose();
  }
  VectorXd out(n);
  MatrixXd minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i) {
    // Delete column i, take the cofactor with the (1, i+1) checkerboard sign,
    // and weight by the metric sign of e_i.
    minor.leftCols(i) = rows.leftCols(i);
    minor.rightCols(n - 1 - i) = rows.rightCols(n - 1 - i);
    const double cof = ((i % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
    out[i] = sig.weight(i) * cof;
  }
  return out;
}

}  // namespace mink
