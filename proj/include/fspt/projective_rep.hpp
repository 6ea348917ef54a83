#pragma once

#include <vector>

#include "fspt/cocycle.hpp"
#include "fspt/linalg.hpp"

namespace fspt {

// An operator m * K^flag, where K is entrywise conjugation in the standard basis.
struct SymOp {
  Mat matrix;
  int flag = 0;
};

// (a)(b) in the (matrix, flag) calculus: (A conj^{fa}(B), fa + fb)
SymOp compose(const SymOp& a, const SymOp& b);
// A x A^{-1}: a conj^{flag}(x) a^*, assuming a unitary
Mat adjoint_action(const SymOp& a, const Mat& x);

struct ProjectiveRep {
  FiniteGroup group;
  Z2Hom twist;
  std::vector<SymOp> ops;

  Eigen::Index dim() const { return ops.empty() ? 0 : ops.front().matrix.rows(); }
};

// Errors: DimensionMismatch, NotUnitary(g), FlagMismatch(g).
ProjectiveRep validate_rep(const FiniteGroup& g, const Z2Hom& p, std::vector<SymOp> ops,
                           double tol = 1e-9);

// Cocycle with rep(g) rep(h) = u(g,h) rep(gh), snapped to exact roots of unity.
// rep(e) is replaced by I. When the raw values are not roots of small order
// the matrices are first rescaled by det^{-1/dim}, which changes the answer
// only by a coboundary.
// Errors: NotProjectiveRep(g,h), NotRootOfUnity.
TwistedCocycle cocycle_of_rep(const ProjectiveRep& rep, double tol = 1e-8);

}  // namespace fspt
