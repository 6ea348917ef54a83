#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace fspt {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat kron(const Mat& a, const Mat& b);
Mat conj_if(const Mat& m, int flag);
Mat identity(Eigen::Index n);
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

// Hilbert-Schmidt inner product Tr(a* b)
cplx hs_inner(const Mat& a, const Mat& b);
// column-major flattening; vec(a)^* vec(b) = Tr(a* b)
Vec vec(const Mat& a);
Mat unvec(const Vec& v, Eigen::Index n);

bool is_unitary(const Mat& u, double tol = 1e-9);
bool is_scalar(const Mat& x, double tol, cplx* value = nullptr);

// Haar-ish random unitary from the QR of a Gaussian matrix.
Mat random_unitary(Eigen::Index n, std::mt19937_64& rng);
Mat random_matrix(Eigen::Index n, std::mt19937_64& rng);
Mat random_hermitian(Eigen::Index n, std::mt19937_64& rng);

// x^{-1/2} for a positive definite Hermitian x
Mat inverse_sqrt_psd(const Mat& x);

// Orthonormal basis of a subspace of C^N, grown by Gram-Schmidt with one
// reorthogonalization pass.
class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index dim) : dim_(dim) {}

  // Adds v when its component outside the span exceeds rel_tol * max(|v|, ref_norm).
  // Pass ref_norm when v is a difference or product that may be pure rounding.
  bool add(const Vec& v, double rel_tol = 1e-9, double ref_norm = 0);
  Vec residual(const Vec& v) const;
  Eigen::Index size() const { return static_cast<Eigen::Index>(cols_.size()); }
  const Vec& operator[](std::size_t i) const { return cols_[i]; }
  Mat matrix() const;

 private:
  Eigen::Index dim_;
  std::vector<Vec> cols_;
};

// Eigenvectors of a Hermitian matrix with eigenvalue <= rel_tol * scale, where
// scale is the largest |eigenvalue| but at least min_scale (so that a matrix
// made of rounding noise is treated as zero).
Mat hermitian_nullspace(const Mat& h, double rel_tol, double min_scale = 0);

}  // namespace fspt
