#include "minkgeo/subspace.hpp"

#include <Eigen/Eigenvalues>

namespace mink {

SubspaceReport subspace_analysis(const SubspaceBasis& s, double tol) {
  const Signature sig = s.sig;
  const int n = sig.n;
  const int k = static_cast<int>(s.vectors.size());
  if (k == 0 || k > n) throw precondition_error("subspace_analysis: need 1..n basis vectors");

  MatrixXd basis(n, k);
  for (int j = 0; j < k; ++j) {
    detail::require_dim(sig, s.vectors[j].size(), "subspace_analysis");
    basis.col(j) = s.vectors[j];
  }
  if (Eigen::FullPivLU<MatrixXd>(basis).rank() < k)
    throw dependent_input_error("subspace_analysis: basis vectors are dependent");

  SubspaceReport r;
  r.gram = gram_matrix(sig, s.vectors, s.vectors);

  // Eigenvalues of the (symmetric) restricted Gram matrix decide definiteness.
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (r.gram + r.gram.transpose()));
  const VectorXd ev = es.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  int pos = 0, neg = 0, zero = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= tol * scale) ++zero;
    else if (ev[i] > 0) ++pos;
    else ++neg;
  }
  r.non_degenerate = (zero == 0);
  r.direct_sum = r.non_degenerate;
  if (zero > 0) r.causal_type = SubspaceClass::Lightlike;
  else if (neg == 0) r.causal_type = SubspaceClass::Spacelike;
  else if (pos == 0) r.causal_type = SubspaceClass::Timelike;
  else r.causal_type = (sig.nu == 1) ? SubspaceClass::Timelike : SubspaceClass::Unclassified;

  // S_perp = kernel of the map x -> (<s_i, x>)_i, i.e. of (metric-weighted
  // basis)^T. dim S + dim S_perp = n always holds because the metric weighting
  // is invertible.
  MatrixXd weighted = basis;
  for (int i = 0; i < n; ++i) weighted.row(i) *= sig.weight(i);
  Eigen::FullPivLU<MatrixXd> lu(weighted.transpose());
  lu.setThreshold(1e-10);
  const MatrixXd ker = lu.kernel();
  r.complement.reserve(ker.cols());
  // FullPivLU::kernel returns a single zero column for full-rank maps with
  // trivial kernel; filter that case (k == n).
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    if (ker.col(j).squaredNorm() > 0) r.complement.push_back(ker.col(j));
  return r;
}

}  // namespace mink
