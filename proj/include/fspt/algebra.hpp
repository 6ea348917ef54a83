#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fspt/linalg.hpp"

namespace fspt {

inline constexpr Eigen::Index kMaxAmbient = 64;

// Errors: NotGradingUnitary.
void validate_grading(const Mat& gamma, double tol = 1e-10);

struct GradedOperator {
  Mat matrix;
  std::optional<int> degree;
};

// a Gamma1^{deg b} (x) b. Errors: DegreeUntagged.
GradedOperator graded_tensor(const GradedOperator& a, const Mat& gamma1, const GradedOperator& b);

// Unital *-algebra stored as a trace-orthonormal basis. q holds the
// flattened basis as columns. generators, when nonempty, generate the
// algebra and are what commutant() iterates over.
struct OperatorAlgebra {
  Eigen::Index n = 0;
  Mat q;
  std::vector<Mat> generators;

  Eigen::Index dim() const { return q.cols(); }
  Mat element(Eigen::Index i) const { return unvec(q.col(i), n); }
  std::vector<Mat> basis() const;
  std::vector<Mat> generating_set() const;
  Mat project(const Mat& x) const;
  // |x - P(x)| <= tol * max(1, |x|) in Frobenius norm
  bool contains(const Mat& x, double tol = 1e-8) const;
};

// Orthonormalizes a spanning set without closing it; the caller vouches
// that the span is an algebra.
OperatorAlgebra algebra_from_span(Eigen::Index n, const std::vector<Mat>& spanning,
                                  std::vector<Mat> generators = {});

// Smallest unital *-algebra containing gens. Errors: DimensionTooLarge.
OperatorAlgebra algebra_closure(const std::vector<Mat>& gens);

// sum_s C_s^* C_s with C_s x = s x - x s, acting on vec(x).
// The commutant is its nullspace.
Mat commutant_gram(const std::vector<Mat>& gens);
Mat commutant_gram_serial(const std::vector<Mat>& gens);

OperatorAlgebra commutant(const OperatorAlgebra& a);
// A cap A'
OperatorAlgebra center(const OperatorAlgebra& a);
// Intersection of the spans of two orthonormal column sets.
Mat intersect_spans(const Mat& qa, const Mat& qb, double tol = 1e-9);
// Same span with the same orthonormality convention, up to tol.
bool same_span(const Mat& qa, const Mat& qb, double tol = 1e-8);

struct GradedParts {
  Mat even;  // orthonormal columns
  Mat odd;
};
// Errors: NotGraded when Ad_Gamma does not preserve A.
GradedParts graded_parts(const OperatorAlgebra& a, const Mat& gamma, double tol = 1e-8);
OperatorAlgebra even_subalgebra(const OperatorAlgebra& a, const Mat& gamma);

struct GradedCenter {
  Mat even_center;
  Mat odd_center;
  std::optional<Mat> odd_unitary;
};
// Errors: NotGraded, CentralityViolation, MarkerNotFound.
GradedCenter graded_center_split(const OperatorAlgebra& a, const Mat& gamma);
// Same, for a caller that already ran graded_parts (skips the NotGraded check).
GradedCenter graded_center_split_unchecked(const OperatorAlgebra& a, const Mat& gamma);

// An odd self-adjoint unitary in A, via sign(h) for random odd self-adjoint h.
std::optional<Mat> find_odd_unitary(const OperatorAlgebra& a, const Mat& gamma,
                                    std::mt19937_64& rng, int attempts = 4);
std::optional<Mat> find_odd_unitary(const GradedParts& parts, Eigen::Index n, std::mt19937_64& rng,
                                    int attempts = 4);

// Graded tensor product A1 (^x) A2 inside B(H1 (x) H2), built from products of
// homogeneous basis elements (already orthonormal, no closure needed).
OperatorAlgebra graded_tensor_algebra(const OperatorAlgebra& a1, const Mat& gamma1,
                                      const OperatorAlgebra& a2, const Mat& gamma2);

}  // namespace fspt
