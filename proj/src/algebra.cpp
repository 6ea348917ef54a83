#include "fspt/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "fspt/error.hpp"

namespace fspt {
namespace {

Mat columns(Eigen::Index rows, const std::vector<Vec>& cols) {
  Mat m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

void check_size(Eigen::Index n) {
  if (n > kMaxAmbient)
    throw Error("DimensionTooLarge", "ambient dimension " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxAmbient));
}

}  // namespace

void validate_grading(const Mat& gamma, double tol) {
  const Eigen::Index n = gamma.rows();
  if (gamma.cols() != n) throw Error("NotGradingUnitary", "not square");
  const double s = std::sqrt(static_cast<double>(n));
  if ((gamma - gamma.adjoint()).norm() > tol * s) throw Error("NotGradingUnitary", "not self-adjoint");
  if ((gamma * gamma - identity(n)).norm() > tol * s) throw Error("NotGradingUnitary", "square is not I");
}

GradedOperator graded_tensor(const GradedOperator& a, const Mat& gamma1, const GradedOperator& b) {
  if (!b.degree) throw Error("DegreeUntagged", "right factor needs a degree");
  GradedOperator r;
  r.matrix = kron(*b.degree ? Mat(a.matrix * gamma1) : a.matrix, b.matrix);
  if (a.degree) r.degree = (*a.degree + *b.degree) % 2;
  return r;
}

std::vector<Mat> OperatorAlgebra::basis() const {
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (Eigen::Index i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

std::vector<Mat> OperatorAlgebra::generating_set() const {
  return generators.empty() ? basis() : generators;
}

Mat OperatorAlgebra::project(const Mat& x) const {
  return unvec(q * (q.adjoint() * vec(x)), n);
}

bool OperatorAlgebra::contains(const Mat& x, double tol) const {
  return (x - project(x)).norm() <= tol * std::max(1.0, x.norm());
}

OperatorAlgebra algebra_from_span(Eigen::Index n, const std::vector<Mat>& spanning,
                                  std::vector<Mat> generators) {
  check_size(n);
  SpanBuilder sb(n * n);
  for (const auto& m : spanning) sb.add(vec(m));
  OperatorAlgebra a;
  a.n = n;
  a.q = sb.matrix();
  a.generators = std::move(generators);
  return a;
}

OperatorAlgebra algebra_closure(const std::vector<Mat>& gens_in) {
  if (gens_in.empty()) throw std::invalid_argument("algebra_closure: no generators");
  const Eigen::Index n = gens_in.front().rows();
  check_size(n);
  std::vector<Mat> gens;
  for (const auto& g : gens_in) {
    if (g.rows() != n || g.cols() != n) throw Error("DimensionMismatch", "generators differ in shape");
    gens.push_back(g);
    gens.push_back(g.adjoint());
  }

  SpanBuilder sb(n * n);
  sb.add(vec(identity(n)));
  for (const auto& g : gens) sb.add(vec(g));
  // every word is a generator times a shorter word, so left multiplication
  // of newly found directions by generators reaches the whole algebra
  Eigen::Index done = 0;
  while (done < sb.size()) {
    const Eigen::Index stop = sb.size();
    for (Eigen::Index i = done; i < stop; ++i) {
      const Mat x = unvec(sb[static_cast<std::size_t>(i)], n);
      for (const auto& g : gens) sb.add(vec(g * x), 1e-9, g.norm() * x.norm());
    }
    done = stop;
  }
  OperatorAlgebra a;
  a.n = n;
  a.q = sb.matrix();
  a.generators = gens;
  return a;
}

namespace {

// C_s^* C_s = I(x)s^*s - s^T(x)s^* - conj(s)(x)s + (conj(s) s^T)(x)I
void add_gram_term(Mat& h, const Mat& s) {
  const Eigen::Index n = s.rows();
  const Mat id = identity(n);
  const Mat st = s.transpose();
  const Mat sc = s.conjugate();
  h += kron(id, s.adjoint() * s) - kron(st, s.adjoint()) - kron(sc, s) + kron(sc * st, id);
}

}  // namespace

Mat commutant_gram_serial(const std::vector<Mat>& gens) {
  const Eigen::Index n = gens.front().rows();
  Mat h = Mat::Zero(n * n, n * n);
  for (const auto& s : gens) add_gram_term(h, s);
  return h;
}

Mat commutant_gram(const std::vector<Mat>& gens) {
  const Eigen::Index n = gens.front().rows();
  const long count = static_cast<long>(gens.size());
  Mat h = Mat::Zero(n * n, n * n);
#pragma omp parallel
  {
    Mat local = Mat::Zero(n * n, n * n);
#pragma omp for schedule(static) nowait
    for (long i = 0; i < count; ++i) add_gram_term(local, gens[static_cast<std::size_t>(i)]);
#pragma omp critical
    h += local;
  }
  return h;
}

OperatorAlgebra commutant(const OperatorAlgebra& a) {
  check_size(a.n);
  const std::vector<Mat> gens = a.generating_set();
  double floor = 0;
  for (const auto& s : gens) floor += s.squaredNorm();
  const Mat null = hermitian_nullspace(commutant_gram(gens), 1e-10, floor / double(a.n));
  OperatorAlgebra c;
  c.n = a.n;
  c.q = null;
  // the Gram matrix squares singular values, so verify on the commutators
  for (Eigen::Index i = 0; i < c.dim(); ++i) {
    const Mat x = c.element(i);
    for (const auto& s : gens)
      if ((s * x - x * s).norm() > 1e-8 * std::max(1.0, s.norm()))
        throw Error("NumericalFailure", "commutant candidate fails the commutator check");
  }
  return c;
}

Mat intersect_spans(const Mat& qa, const Mat& qb, double tol) {
  if (qa.cols() == 0 || qb.cols() == 0) return Mat(qa.rows(), 0);
  const Mat m = qa.adjoint() * qb;
  const Mat r = Mat::Identity(qb.cols(), qb.cols()) - m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Mat> es(r);
  Eigen::Index k = 0;
  while (k < r.rows() && es.eigenvalues()(k) <= tol) ++k;
  return qb * es.eigenvectors().leftCols(k);
}

bool same_span(const Mat& qa, const Mat& qb, double tol) {
  if (qa.cols() != qb.cols()) return false;
  const Mat pa = qa * (qa.adjoint() * qb);
  const Mat pb = qb * (qb.adjoint() * qa);
  return (pa - qb).norm() <= tol * std::sqrt(qb.cols() + 1.0) &&
         (pb - qa).norm() <= tol * std::sqrt(qa.cols() + 1.0);
}

OperatorAlgebra center(const OperatorAlgebra& a) {
  // Two generic elements generate A, so Z(A) is the part of A commuting with
  // them. Solve in A's coordinates, then confirm against every generator.
  const Eigen::Index k = a.dim();
  const std::vector<Mat> basis = a.basis();
  std::mt19937_64 rng(0xce7e);
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat gram = Mat::Zero(k, k);
  double floor = 0;
  for (int t = 0; t < 2; ++t) {
    Mat s = Mat::Zero(a.n, a.n);
    for (const auto& b : basis) s += cplx(nd(rng), nd(rng)) * b;
    Mat cs(a.n * a.n, k);
    for (Eigen::Index i = 0; i < k; ++i) cs.col(i) = vec(s * basis[i] - basis[i] * s);
    gram += cs.adjoint() * cs;
    floor += s.squaredNorm();
  }
  OperatorAlgebra z;
  z.n = a.n;
  z.q = a.q * hermitian_nullspace(gram, 1e-10, floor / double(a.n));
  bool ok = true;
  for (Eigen::Index i = 0; i < z.dim() && ok; ++i) {
    const Mat x = z.element(i);
    for (const auto& g : a.generating_set())
      if ((g * x - x * g).norm() > 1e-8 * std::max(1.0, g.norm())) {
        ok = false;
        break;
      }
  }
  if (ok) return z;
  z.q = intersect_spans(a.q, commutant(a).q);
  return z;
}

GradedParts graded_parts(const OperatorAlgebra& a, const Mat& gamma, double tol) {
  validate_grading(gamma);
  const Eigen::Index k = a.dim();
  Mat x(a.n * a.n, k);
  for (Eigen::Index i = 0; i < k; ++i) x.col(i) = vec(gamma * a.element(i) * gamma);
  // Ad_Gamma in the orthonormal basis; a unitary involution when A is graded
  const Mat m = a.q.adjoint() * x;
  const Mat out = x - a.q * m;
  for (Eigen::Index i = 0; i < k; ++i)
    if (out.col(i).norm() > tol)
      throw Error("NotGraded", "Ad_Gamma moves basis element " + std::to_string(i) + " out of the algebra");
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0);
  Eigen::Index n_odd = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(std::abs(ev) - 1.0) > 1e-6)
      throw Error("NotGraded", "Ad_Gamma has eigenvalue " + std::to_string(ev) + " on the algebra");
    if (ev < 0) ++n_odd;
  }
  // eigenvalues ascend: the -1 block comes first
  return GradedParts{a.q * es.eigenvectors().rightCols(k - n_odd), a.q * es.eigenvectors().leftCols(n_odd)};
}

OperatorAlgebra even_subalgebra(const OperatorAlgebra& a, const Mat& gamma) {
  OperatorAlgebra e;
  e.n = a.n;
  e.q = graded_parts(a, gamma).even;
  return e;
}

GradedCenter graded_center_split(const OperatorAlgebra& a, const Mat& gamma) {
  graded_parts(a, gamma);  // NotGraded check
  return graded_center_split_unchecked(a, gamma);
}

GradedCenter graded_center_split_unchecked(const OperatorAlgebra& a, const Mat& gamma) {
  const OperatorAlgebra z = center(a);
  SpanBuilder even(a.n * a.n), odd(a.n * a.n);
  for (Eigen::Index i = 0; i < z.dim(); ++i) {
    const Mat x = z.element(i);
    const Mat gx = gamma * x * gamma;
    even.add(vec((x + gx) / 2.0), 1e-9, x.norm());
    odd.add(vec((x - gx) / 2.0), 1e-9, x.norm());
  }
  GradedCenter out{even.matrix(), odd.matrix(), std::nullopt};
  if (out.even_center.cols() > 1)
    throw Error("CentralityViolation",
                "even center has dimension " + std::to_string(out.even_center.cols()));
  if (out.odd_center.cols() > 1)
    throw Error("CentralityViolation",
                "odd center has dimension " + std::to_string(out.odd_center.cols()));
  if (out.odd_center.cols() == 1) {
    const Mat x = unvec(out.odd_center.col(0), a.n);
    const Mat h1 = x + x.adjoint();
    const Mat h2 = cplx(0, 1) * (x - x.adjoint());
    const Mat& h = h1.norm() >= h2.norm() ? h1 : h2;
    const double s = std::sqrt(static_cast<double>(a.n));
    const Mat b = h * (s / h.norm());
    if ((b * b - identity(a.n)).norm() > 1e-8 * s)
      throw Error("MarkerNotFound", "odd central element does not square to a multiple of I");
    out.odd_unitary = b;
  }
  return out;
}

std::optional<Mat> find_odd_unitary(const OperatorAlgebra& a, const Mat& gamma,
                                    std::mt19937_64& rng, int attempts) {
  return find_odd_unitary(graded_parts(a, gamma), a.n, rng, attempts);
}

std::optional<Mat> find_odd_unitary(const GradedParts& parts, Eigen::Index n, std::mt19937_64& rng,
                                    int attempts) {
  if (parts.odd.cols() == 0) return std::nullopt;
  std::vector<Mat> herm;
  for (Eigen::Index i = 0; i < parts.odd.cols(); ++i) {
    const Mat o = unvec(parts.odd.col(i), n);
    herm.push_back(o + o.adjoint());
    herm.push_back(cplx(0, 1) * (o - o.adjoint()));
  }
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int t = 0; t < attempts; ++t) {
    Mat h = Mat::Zero(n, n);
    for (const auto& x : herm) h += nd(rng) * x;
    h = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    if (top == 0 || ev.cwiseAbs().minCoeff() <= 1e-8 * top) continue;
    Eigen::VectorXd sg = ev.unaryExpr([](double v) { return v > 0 ? 1.0 : -1.0; });
    // sign(h) = h |h|^{-1} is a function of h, hence in A, odd and self-adjoint
    return Mat(es.eigenvectors() * sg.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint());
  }
  return std::nullopt;
}

OperatorAlgebra graded_tensor_algebra(const OperatorAlgebra& a1, const Mat& gamma1,
                                      const OperatorAlgebra& a2, const Mat& gamma2) {
  const GradedParts p1 = graded_parts(a1, gamma1);
  const GradedParts p2 = graded_parts(a2, gamma2);
  const Eigen::Index n = a1.n * a2.n;
  check_size(n);

  std::vector<GradedOperator> h1, h2;
  for (Eigen::Index i = 0; i < p1.even.cols(); ++i) h1.push_back({unvec(p1.even.col(i), a1.n), 0});
  for (Eigen::Index i = 0; i < p1.odd.cols(); ++i) h1.push_back({unvec(p1.odd.col(i), a1.n), 1});
  for (Eigen::Index i = 0; i < p2.even.cols(); ++i) h2.push_back({unvec(p2.even.col(i), a2.n), 0});
  for (Eigen::Index i = 0; i < p2.odd.cols(); ++i) h2.push_back({unvec(p2.odd.col(i), a2.n), 1});

  std::vector<Vec> cols;
  cols.reserve(h1.size() * h2.size());
  for (const auto& x : h1)
    for (const auto& y : h2) cols.push_back(vec(graded_tensor(x, gamma1, y).matrix));

  const GradedOperator one1{identity(a1.n), 0}, one2{identity(a2.n), 0};
  std::vector<Mat> gens;
  for (const auto& x : h1) gens.push_back(graded_tensor(x, gamma1, one2).matrix);
  for (const auto& y : h2) gens.push_back(graded_tensor(one1, gamma1, y).matrix);

  OperatorAlgebra a;
  a.n = n;
  a.q = columns(n * n, cols);
  a.generators = std::move(gens);
  return a;
}

}  // namespace fspt
