#pragma once

// Gram matrices, the adapted Gram-Schmidt process for indefinite metrics, and
// signature (Sylvester) counting.

#include <vector>

#include "minkgeo/inner.hpp"

namespace mink {

// Matrix of pairwise products (<u_i, v_j>).
MatrixXd gram_matrix(const Signature& sig, const std::vector<VectorXd>& us,
                     const std::vector<VectorXd>& vs);

inline MatrixXd gram_matrix(const Signature& sig, const std::vector<VectorXd>& us) {
  return gram_matrix(sig, us, us);
}

// Invertibility with a scale-relative tolerance (smallest singular value
// compared against the largest). Invertible Gram matrix => independent input.
bool invertible(const MatrixXd& m, double rel_tol = 1e-10);

// Adapted Gram-Schmidt: u~_{k+1} = u_{k+1} - sum_i <u_{k+1},u~_i>/<u~_i,u~_i> u~_i.
// Requires every intermediate span to be non-degenerate; a produced vector that
// is lightlike (within tolerance) aborts with degenerate_chain_error, a
// produced (near-)zero vector aborts with dependent_input_error.
std::vector<VectorXd> gram_schmidt_adapted(const Signature& sig,
                                           const std::vector<VectorXd>& vs,
                                           double tol = kCausalTol);

// Normalizes a pairwise-orthogonal set to unit fake norm and counts indicators.
struct SylvesterCount {
  int spacelike = 0;
  int timelike = 0;
  std::vector<VectorXd> unit;  // normalized vectors
};
SylvesterCount normalize_orthogonal(const Signature& sig, const std::vector<VectorXd>& vs);

}  // namespace mink
