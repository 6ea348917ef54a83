#include "fspt/linalg.hpp"

#include <algorithm>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace fspt {

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Mat conj_if(const Mat& m, int flag) { return flag ? Mat(m.conjugate()) : m; }

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

cplx hs_inner(const Mat& a, const Mat& b) { return (a.conjugate().cwiseProduct(b)).sum(); }

Vec vec(const Mat& a) { return Eigen::Map<const Vec>(a.data(), a.size()); }

Mat unvec(const Vec& v, Eigen::Index n) { return Eigen::Map<const Mat>(v.data(), n, n); }

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).norm() <= tol * std::sqrt(u.rows());
}

bool is_scalar(const Mat& x, double tol, cplx* value) {
  const cplx c = x.trace() / static_cast<double>(x.rows());
  if (value) *value = c;
  return (x - c * Mat::Identity(x.rows(), x.cols())).norm() <= tol * std::sqrt(x.rows());
}

Mat random_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cplx(nd(rng), nd(rng));
  return m;
}

Mat random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  Mat m = random_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

Mat random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(n, rng));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  // fix the phases so the distribution does not depend on QR conventions
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Mat inverse_sqrt_psd(const Mat& x) {
  Eigen::SelfAdjointEigenSolver<Mat> es(x);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() <= 0) throw std::domain_error("inverse_sqrt_psd: matrix is not positive definite");
  return es.eigenvectors() * ev.cwiseInverse().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

Vec SpanBuilder::residual(const Vec& v) const {
  Vec r = v;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& c : cols_) r -= c * c.dot(r);
  return r;
}

bool SpanBuilder::add(const Vec& v, double rel_tol, double ref_norm) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  const double nv = std::max(v.norm(), ref_norm);
  if (nv == 0) return false;
  Vec r = residual(v);
  const double nr = r.norm();
  if (nr <= rel_tol * nv) return false;
  cols_.push_back(r / nr);
  return true;
}

Mat SpanBuilder::matrix() const {
  Mat m(dim_, size());
  for (Eigen::Index j = 0; j < size(); ++j) m.col(j) = cols_[j];
  return m;
}

Mat hermitian_nullspace(const Mat& h, double rel_tol, double min_scale) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max({ev.cwiseAbs().maxCoeff(), min_scale, 1e-300});
  Eigen::Index k = 0;
  while (k < ev.size() && ev(k) <= rel_tol * scale) ++k;
  return es.eigenvectors().leftCols(k);
}

}  // namespace fspt
