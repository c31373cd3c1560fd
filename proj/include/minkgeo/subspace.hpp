#pragma once

// Subspaces of R^n_nu: causal type of the induced form, orthogonal
// complements, and the direct-sum / non-degeneracy bookkeeping.

#include <vector>

#include "minkgeo/gram.hpp"

namespace mink {

enum class SubspaceClass { Spacelike, Timelike, Lightlike, Unclassified };

inline const char* to_string(SubspaceClass c) {
  switch (c) {
    case SubspaceClass::Spacelike: return "spacelike";
    case SubspaceClass::Timelike: return "timelike";
    case SubspaceClass::Lightlike: return "lightlike";
    case SubspaceClass::Unclassified: return "unclassified";
  }
  return "?";
}

struct SubspaceBasis {
  std::vector<VectorXd> vectors;
  Signature sig;
};

struct SubspaceReport {
  SubspaceClass causal_type;
  bool non_degenerate;      // restricted form invertible
  bool direct_sum;          // S + S_perp = R^n (iff non-degenerate)
  std::vector<VectorXd> complement;  // basis of S_perp (size n - dim S)
  MatrixXd gram;            // restricted Gram matrix of the input basis
};

// Classification rule for the induced bilinear form:
//   positive definite            -> spacelike
//   degenerate                   -> lightlike
//   negative definite            -> timelike
//   indefinite, non-degenerate   -> timelike when nu == 1, else unclassified
//     (for index > 1 the mixed case has no single agreed reading).
SubspaceReport subspace_analysis(const SubspaceBasis& s, double tol = kCausalTol);

}  // namespace mink
