#pragma once

// Membership and classification of pseudo-orthogonal transforms O_nu(n), the
// four components, conjugacy classes for the identity component in dimensions
// 2 and 3 (index 1), and the Margulis invariant of hyperbolic members.

#include <optional>

#include "minkgeo/inner.hpp"

namespace mink {

enum class Component { PlusUp, PlusDown, MinusUp, MinusDown };
enum class Conjugacy { Hyperbolic, Elliptic, Parabolic };

inline const char* to_string(Component c) {
  switch (c) {
    case Component::PlusUp: return "plus_up";
    case Component::PlusDown: return "plus_down";
    case Component::MinusUp: return "minus_up";
    case Component::MinusDown: return "minus_down";
  }
  return "?";
}

inline const char* to_string(Conjugacy c) {
  switch (c) {
    case Conjugacy::Hyperbolic: return "hyperbolic";
    case Conjugacy::Elliptic: return "elliptic";
    case Conjugacy::Parabolic: return "parabolic";
  }
  return "?";
}

struct PseudoOrthReport {
  bool is_member = false;
  double membership_residual = 0.0;
  double det_total = 0.0;
  double det_spatial = 0.0;   // det of the leading (n-nu) x (n-nu) block
  double det_temporal = 0.0;  // det of the trailing nu x nu block (1 if nu=0)
  std::optional<Component> component;   // present only for members
  std::optional<Conjugacy> conjugacy;   // n=3, nu=1, identity component only
  std::optional<double> angle;          // boost/rotation angle when defined
  std::optional<Vector3d> axis;         // unit (or lightlike) eigenvector used
  std::string note;                     // sign conventions applied
};

// Membership test Lambda^T Id_{n-nu,nu} Lambda = Id_{n-nu,nu} plus component
// and (for n=2 and n=3, index 1, identity component) conjugacy data.
// For n=2 the reported angle phi uses the convention Lambda_21 = sinh(phi).
PseudoOrthReport classify_transform(const MatrixXd& L, const Signature& sig,
                                    double tol = 1e-9);

// --- closed-form 3x3 spectral helpers (kept solver-free on purpose) --------

struct Nullspace3 {
  Vector3d v = Vector3d::Zero();  // representative when dim == 1
  int dim = 0;                    // 0 (trivial), 1, 2, or 3
};

// Kernel of a 3x3 matrix via pairwise row cross products (2x2 minors).
Nullspace3 nullspace3(const Matrix3d& m, double rel_tol = 1e-8);

// Eigenvalues of a member of O_1^{+up}(3): 1 is always an eigenvalue; the
// remaining pair solves t^2 - (tr-1) t + 1 = 0.
struct BoostEigen {
  double lambda = 1.0;      // dominant eigenvalue (>= 1)
  bool real_pair = false;   // true when the non-unit pair is real
};
BoostEigen restricted_eigenvalues(const Matrix3d& L);

// Margulis invariant alpha_F = <w, v1>_L of the screw motion F(x) = Lx + w,
// where v1 is the unit spacelike eigenvector of eigenvalue 1, oriented so that
// (v_lambda, v1, v_{1/lambda}) is a positive basis with both lightlike
// eigenvectors future-directed. Requires L hyperbolic in O_1^{+up}(3).
double margulis_invariant(const Matrix3d& L, const Vector3d& w);

// The oriented eigenbasis used by the Margulis invariant (exposed for tests).
struct HyperbolicFrame {
  Vector3d v_lambda, v1, v_inv_lambda;
  double lambda;
};
HyperbolicFrame hyperbolic_frame(const Matrix3d& L);

}  // namespace mink
