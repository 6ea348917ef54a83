#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fspt/algebra.hpp"
#include "fspt/cocycle.hpp"
#include "fspt/projective_rep.hpp"

namespace fspt {

// Finite-dimensional graded algebra with a G-action by (anti-)unitaries.
// form is "R0", "R1" (structured, k_dim = dim K) or "generators".
struct GradedSystem {
  FiniteGroup group;
  Z2Hom p;
  OperatorAlgebra algebra;
  Mat gamma;
  ProjectiveRep action;
  std::string form = "generators";
  int k_dim = 0;
  std::vector<Mat> generators;  // as supplied, for the "generators" form
};

// B(K) (x) M2 with Gamma = I (x) sigma_z.
GradedSystem make_r0(int k_dim, const ProjectiveRep& action);
// B(K) (x) span{I, sigma_x} with Gamma = I (x) sigma_z.
GradedSystem make_r1(int k_dim, const ProjectiveRep& action);
GradedSystem make_system(const std::vector<Mat>& generators, const Mat& gamma,
                         const ProjectiveRep& action);

// V0_g (x) sigma_x^{q(g)}: an R0 action realizing (0, q, [u_V0]).
ProjectiveRep r0_action(const ProjectiveRep& v0, const Z2Hom& q);
// V0_g (x) C^{p(g)} sigma_y^{q(g)}: an R1 action realizing (1, q, [u_V0]).
ProjectiveRep r1_action(const ProjectiveRep& v0, const Z2Hom& q);

// Errors: NotGradingUnitary, NotGraded, NotBalanced, CentralityViolation,
// DimensionMismatch, ActionNotAutomorphism(g), ActionBreaksGrading(g).
void validate_system(const GradedSystem& sys, double tol = 1e-8);

// x -> T x T^*, Gamma -> T Gamma T^*, V_g -> T V_g T^{-1}.
GradedSystem conjugate_system(const GradedSystem& sys, const Mat& t);
// V_g -> lambda(g) V_g, lambda(e) = 1.
GradedSystem rephase_system(const GradedSystem& sys, const std::vector<cplx>& lambda);

struct Classification {
  int kappa = 0;
  Mat marker;  // odd central b (kappa 1) or the even-center grading (kappa 0)
};
// Errors: CentralityViolation, NotBalanced, MarkerNotFound, plus validation errors.
Classification classify(const GradedSystem& sys, double tol = 1e-8);

struct SPTIndex {
  int kappa = 0;
  Z2Hom q;
  TwistedCocycle cls;
};

// Reads q off the marker and the class from the projective action that the
// symmetry induces on the simple factor (A for kappa 0, its even part for
// kappa 1). Errors: GradingActionIndeterminate(g), NotAFactor, plus classify errors.
SPTIndex compute_index(const GradedSystem& sys, double tol = 1e-8);
// Shortcut valid for multiplicity-free standard forms: cocycle of V times
// epsilon(q, p) when kappa = 1.
SPTIndex compute_index_standard_form(const GradedSystem& sys, double tol = 1e-8);

// Errors: GroupMismatch, GradingActionIndeterminate(g), plus validation errors.
GradedSystem stack_systems(const GradedSystem& s1, const GradedSystem& s2);

// (k1+k2, q1+q2+k1k2 p, [u1 u2 eps_p(k1,q1,k2,q2)]). Errors: GroupMismatch.
SPTIndex stack_index(const SPTIndex& i1, const SPTIndex& i2);
bool index_equal(const SPTIndex& i1, const SPTIndex& i2,
                 std::optional<std::int64_t> modulus = std::nullopt);
SPTIndex trivial_index(const FiniteGroup& g, const Z2Hom& p);

// [kappa; eps, xi] for G = Z2 with p = id; xi is +1 or -1.
struct Z8Element {
  int kappa = 0;
  int eps = 0;
  int xi = 1;
  bool operator==(const Z8Element&) const = default;
};
// Errors: NotTimeReversalShape.
Z8Element z8_encode(const SPTIndex& i);
SPTIndex z8_decode(const Z8Element& e);
Z8Element z8_compose(const Z8Element& a, const Z8Element& b);
std::string to_string(const Z8Element& e);

}  // namespace fspt
