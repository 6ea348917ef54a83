#include "fspt/fmps.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "fspt/error.hpp"
#include "fspt/fock.hpp"

namespace fspt {
namespace {

std::string el(int g) { return "element " + std::to_string(g); }

Mat hat(const Mat& v, int odd_power) {
  return kron(v, odd_power % 2 ? pauli_z() : identity(2));
}

}  // namespace

Mat transfer_matrix(const std::vector<Mat>& v) {
  const Eigen::Index m = v.front().rows();
  Mat t = Mat::Zero(m * m, m * m);
  for (const auto& a : v) t += kron(a.conjugate(), a);
  return t;
}

std::vector<Mat> normalize_kraus(const std::vector<Mat>& v) {
  const Eigen::Index m = v.front().rows();
  Mat s = Mat::Zero(m, m);
  for (const auto& a : v) s += a * a.adjoint();
  const Mat r = inverse_sqrt_psd((s + s.adjoint()) / 2.0);
  std::vector<Mat> out;
  for (const auto& a : v) out.push_back(r * a);
  return out;
}

Mat transfer_fixed_point(const std::vector<Mat>& v, double tol) {
  const Eigen::Index m = v.front().rows();
  // dual map x -> sum v^* x v
  Mat dual = Mat::Zero(m * m, m * m);
  for (const auto& a : v) dual += kron(a.transpose(), a.adjoint());
  Eigen::ComplexEigenSolver<Mat> es(dual);
  Eigen::Index count = 0, at = -1;
  for (Eigen::Index i = 0; i < dual.rows(); ++i)
    if (std::abs(es.eigenvalues()(i)) > 1.0 - 1e-7) {
      ++count;
      at = i;
    }
  if (count != 1)
    throw Error("DegenerateFixedPoint",
                std::to_string(count) + " eigenvalues on the unit circle; the channel is not primitive");
  if (std::abs(es.eigenvalues()(at) - 1.0) > 1e-7)
    throw Error("DegenerateFixedPoint", "peripheral eigenvalue differs from 1");
  Mat d = unvec(es.eigenvectors().col(at), m);
  const cplx tr = d.trace();
  if (std::abs(tr) < 1e-12) throw Error("NotPositive", "fixed point has zero trace");
  d /= tr;
  d = (d + d.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> ds(d);
  if (ds.eigenvalues().minCoeff() < -tol) throw Error("NotPositive", "fixed point is not positive");
  return d;
}

FermionicMPS validate_mps(FermionicMPS mps, double tol) {
  const Eigen::Index m = mps.m;
  const std::size_t count = std::size_t(1) << mps.d;
  if (mps.d < 1 || mps.m < 1) throw Error("DimensionMismatch", "d and m must be positive");
  if (mps.v.size() != count) throw Error("DimensionMismatch", "need 2^d matrices v_mu");
  for (const auto& a : mps.v)
    if (a.rows() != m || a.cols() != m) throw Error("DimensionMismatch", "v_mu must be m x m");
  if (mps.D.rows() != m || mps.D.cols() != m) throw Error("DimensionMismatch", "D must be m x m");

  const double sm = std::sqrt(static_cast<double>(m));
  if ((mps.D - mps.D.adjoint()).norm() > tol * sm) throw Error("NotPositive", "D is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Mat> es(mps.D);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo < -tol) throw Error("NotPositive", "D has a negative eigenvalue");
  if (std::abs(mps.D.trace() - 1.0) > tol) throw Error("NotPositive", "trace of D is not 1");
  if (lo <= 1e-12 * hi) throw Error("NotFaithful", "D is singular");

  Mat s = Mat::Zero(m, m), f = Mat::Zero(m, m);
  for (const auto& a : mps.v) {
    s += a * a.adjoint();
    f += a.adjoint() * mps.D * a;
  }
  if ((s - identity(m)).norm() > tol * sm)
    throw Error("NotNormalized", "sum v v^* != I; rescale v_mu -> S^{-1/2} v_mu with S = sum v v^*");
  if ((f - mps.D).norm() > tol) throw Error("NotFixedPoint", "sum v^* D v != D");
  // uniqueness and primitivity
  transfer_fixed_point(mps.v, tol);

  if (mps.kind == MpsKind::Even) {
    if (mps.theta.rows() != m || mps.theta.cols() != m)
      throw Error("DimensionMismatch", "Theta must be m x m");
    validate_grading(mps.theta, 1e-10);
    std::optional<int> sigma0;
    for (std::size_t mu = 0; mu < count; ++mu) {
      const Mat& a = mps.v[mu];
      if (a.norm() <= tol) continue;
      const Mat b = mps.theta * a * mps.theta;
      int s0;
      if ((b - a).norm() <= tol * a.norm())
        s0 = parity(mu);
      else if ((b + a).norm() <= tol * a.norm())
        s0 = 1 - parity(mu);
      else
        throw Error("GradingMismatch", "v_" + std::to_string(mu) + " is not homogeneous under Theta");
      if (sigma0 && *sigma0 != s0)
        throw Error("GradingMismatch", "no single sigma0 fits all v_mu");
      sigma0 = s0;
    }
    mps.sigma0 = sigma0.value_or(0);
    if ((mps.theta * mps.D * mps.theta - mps.D).norm() > tol)
      throw Error("GradingMismatch", "Ad_Theta(D) != D");
  } else if (mps.sigma0 != 0 && mps.sigma0 != 1) {
    throw Error("DimensionMismatch", "sigma0 must be 0 or 1");
  }
  return mps;
}

Mat transfer_apply(const FermionicMPS& mps, const Mat& x) {
  if (mps.kind == MpsKind::Even) {
    if (x.rows() != mps.m || x.cols() != mps.m) throw Error("DimensionMismatch", "x must be m x m");
    Mat out = Mat::Zero(mps.m, mps.m);
    for (const auto& a : mps.v) out += a * x * a.adjoint();
    return out;
  }
  if (x.rows() != 2 * mps.m || x.cols() != 2 * mps.m)
    throw Error("DimensionMismatch", "odd kind acts on 2m x 2m matrices");
  Mat out = Mat::Zero(2 * mps.m, 2 * mps.m);
  for (std::size_t mu = 0; mu < mps.v.size(); ++mu) {
    const Mat a = hat(mps.v[mu], mps.sigma0 + parity(mu));
    out += a * x * a.adjoint();
  }
  return out;
}

int jw_sign(const SiteWord& w) {
  int later_odd = 0, e = 0;
  for (std::size_t y = w.size(); y-- > 0;) {
    e += parity(w[y].second) * later_odd;
    later_odd += parity(w[y].first) ^ parity(w[y].second);
  }
  return e % 2 ? -1 : 1;
}

namespace {

// Koszul sign exponent of the word; the trace part is handled separately.
int word_sign_exponent(const FermionicMPS& mps, const SiteWord& w) {
  const int offset = mps.kind == MpsKind::Odd ? mps.sigma0 : 0;
  int e = 0, acc = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) e += (parity(w[k].first) + parity(w[k].second)) * acc;
    acc += offset + parity(w[k].second);
  }
  return e;
}

int total_parity(const SiteWord& w) {
  int t = 0;
  for (const auto& [mu, nu] : w) t += parity(mu) + parity(nu);
  return t % 2;
}

}  // namespace

cplx expectation(const FermionicMPS& mps, const SiteWord& w) {
  if (mps.kind == MpsKind::Odd && total_parity(w)) return 0.0;
  Mat prod = identity(mps.m);
  for (const auto& pr : w) prod = prod * mps.v[pr.first];
  for (std::size_t x = w.size(); x-- > 0;) prod = prod * mps.v[w[x].second].adjoint();
  const cplx val = (mps.D * prod).trace();
  return word_sign_exponent(mps, w) % 2 ? -val : val;
}

Mat global_parity(int d, int n_sites) {
  const Eigen::Index dim = Eigen::Index(1) << (d * n_sites);
  Mat p = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) p(i, i) = parity(static_cast<std::uint64_t>(i)) ? -1.0 : 1.0;
  return p;
}

namespace {

void check_rho_size(const FermionicMPS& mps, int l) {
  if (l < 0) throw Error("IndexOutOfRange", "l must be nonnegative");
  if (mps.d * (l + 1) > 14) throw Error("SizeTooLarge", "d(l+1) must be at most 14");
}

// site x holds bits [d(L-1-x), d(L-x)) of a chain index; site 0 is most significant
SiteWord decode_word(std::uint64_t mu_idx, std::uint64_t nu_idx, int d, int sites) {
  SiteWord w(static_cast<std::size_t>(sites));
  const std::uint64_t mask = (std::uint64_t(1) << d) - 1;
  for (int x = 0; x < sites; ++x) {
    const int shift = d * (sites - 1 - x);
    w[static_cast<std::size_t>(x)] = {mu_idx >> shift & mask, nu_idx >> shift & mask};
  }
  return w;
}

}  // namespace

Mat density_matrix(const FermionicMPS& mps, int l) {
  check_rho_size(mps, l);
  const int sites = l + 1;
  const int d = mps.d;
  const Eigen::Index dim = Eigen::Index(1) << (d * sites);
  const std::uint64_t mask = (std::uint64_t(1) << d) - 1;

  // Tr(D v_mu0..v_mul v_nul^*..v_nu0^*) = sum_ab (D L_mu)_ab (R_nu)_ba
  std::vector<Mat> left(static_cast<std::size_t>(dim)), right(static_cast<std::size_t>(dim));
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < dim; ++i) {
    Mat a = mps.D, b = identity(mps.m);
    for (int x = 0; x < sites; ++x) {
      const auto mu = static_cast<std::uint64_t>(i) >> (d * (sites - 1 - x)) & mask;
      a = a * mps.v[mu];
      b = mps.v[mu].adjoint() * b;
    }
    left[static_cast<std::size_t>(i)] = a;
    right[static_cast<std::size_t>(i)] = b.transpose();  // so the trace is a plain dot product
  }

  Mat rho = Mat::Zero(dim, dim);
#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const SiteWord w = decode_word(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j), d, sites);
      if (mps.kind == MpsKind::Odd && total_parity(w)) continue;
      cplx val = left[static_cast<std::size_t>(i)].cwiseProduct(right[static_cast<std::size_t>(j)]).sum();
      if (word_sign_exponent(mps, w) % 2) val = -val;
      // jw(B)^dagger has its single entry at (nu, mu)
      rho(j, i) = static_cast<double>(jw_sign(w)) * val;
    }
  }
  return rho;
}

Mat density_matrix_reference(const FermionicMPS& mps, int l) {
  check_rho_size(mps, l);
  const int sites = l + 1;
  if (mps.d * sites > 6) throw Error("SizeTooLarge", "reference assembly is limited to d(l+1) <= 6");
  const Eigen::Index dim = Eigen::Index(1) << (mps.d * sites);
  Mat rho = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      const SiteWord w = decode_word(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j), mps.d, sites);
      const cplx val = expectation(mps, w);
      if (val == 0.0) continue;
      Mat jw = identity(dim);
      for (int x = 0; x < sites; ++x)
        jw = jw * jw_embed(w[static_cast<std::size_t>(x)].first, w[static_cast<std::size_t>(x)].second, x, sites, mps.d);
      rho += val * jw.adjoint();
    }
  return rho;
}

Mat partial_trace_last(const Mat& rho, int d, int n_sites) {
  const Eigen::Index s = Eigen::Index(1) << d;
  const Eigen::Index rest = Eigen::Index(1) << (d * (n_sites - 1));
  Mat out = Mat::Zero(rest, rest);
  for (Eigen::Index a = 0; a < rest; ++a)
    for (Eigen::Index b = 0; b < rest; ++b)
      for (Eigen::Index c = 0; c < s; ++c) out(a, b) += rho(a * s + c, b * s + c);
  return out;
}

Mat partial_trace_first(const Mat& rho, int d, int n_sites) {
  const Eigen::Index s = Eigen::Index(1) << d;
  const Eigen::Index rest = Eigen::Index(1) << (d * (n_sites - 1));
  Mat out = Mat::Zero(rest, rest);
  for (Eigen::Index c = 0; c < s; ++c) out += rho.block(c * rest, c * rest, rest, rest);
  return out;
}

namespace {

void check_symmetry_shape(const FermionicMPS& mps, const OnSiteSymmetry& sym) {
  if (sym.u.dim() != mps.d) throw Error("DimensionMismatch", "U must act on C^d");
  if (sym.w.dim() != mps.m) throw Error("DimensionMismatch", "W must act on C^m");
  if (!(sym.u.group == sym.group) || !(sym.w.group == sym.group) || !(sym.u.twist == sym.p) ||
      !(sym.w.twist == sym.p))
    throw Error("GroupMismatch", "U, W and the symmetry disagree on the group or twist");
}

}  // namespace

SymmetryFit measure_symmetry(const FermionicMPS& mps, const OnSiteSymmetry& sym,
                             const std::optional<Z2Hom>& q) {
  check_symmetry_shape(mps, sym);
  SymmetryFit fit;
  fit.q = q;
  double scale = 0;
  for (const auto& a : mps.v) scale += a.squaredNorm();
  scale = std::sqrt(scale);
  const bool odd = mps.kind == MpsKind::Odd;
  for (int g = 0; g < sym.group.n; ++g) {
    const Mat f = second_quantize(sym.u.ops[g].matrix, sym.u.ops[g].flag).matrix;
    std::vector<Mat> lhs, rhs;
    for (std::size_t nu = 0; nu < mps.v.size(); ++nu) {
      Mat x = Mat::Zero(mps.m, mps.m);
      for (std::size_t mu = 0; mu < mps.v.size(); ++mu)
        x += f(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(nu)) * mps.v[mu];
      if (odd && q && (*q)(g) && parity(nu)) x = -x;
      lhs.push_back(x);
      rhs.push_back(adjoint_action(sym.w.ops[g], mps.v[nu]));
    }
    cplx num = 0;
    double den = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      num += hs_inner(rhs[i], lhs[i]);
      den += rhs[i].squaredNorm();
    }
    const cplx c = den > 0 ? num / den : cplx(0);
    double res = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) res += (lhs[i] - c * rhs[i]).squaredNorm();
    fit.c.push_back(c);
    fit.residual.push_back(std::sqrt(res) / scale);
  }
  return fit;
}

SymmetryFit check_symmetry(const FermionicMPS& mps, const OnSiteSymmetry& sym, double tol) {
  auto passes = [&](const SymmetryFit& fit) {
    for (double r : fit.residual)
      if (r > tol) return false;
    return true;
  };
  if (mps.kind == MpsKind::Even) {
    SymmetryFit fit = measure_symmetry(mps, sym);
    for (int g = 0; g < sym.group.n; ++g)
      if (fit.residual[g] > tol)
        throw Error("SymmetryViolated", el(g) + ", residual " + std::to_string(fit.residual[g]));
    return fit;
  }
  if (sym.q) {
    SymmetryFit fit = measure_symmetry(mps, sym, sym.q);
    for (int g = 0; g < sym.group.n; ++g)
      if (fit.residual[g] > tol)
        throw Error("SymmetryViolated", el(g) + ", residual " + std::to_string(fit.residual[g]));
    return fit;
  }
  for (const auto& q : all_z2_homs(sym.group)) {
    SymmetryFit fit = measure_symmetry(mps, sym, q);
    if (passes(fit)) return fit;
  }
  throw Error("NoConsistentQ", "no homomorphism q makes the relation hold");
}

SPTIndex fmps_index(const FermionicMPS& mps, const OnSiteSymmetry& sym, double tol) {
  const SymmetryFit fit = check_symmetry(mps, sym, tol);
  SPTIndex idx;
  if (mps.kind == MpsKind::Even) {
    idx.kappa = 0;
    std::vector<int> q(sym.group.n);
    for (int g = 0; g < sym.group.n; ++g) {
      const Mat y = adjoint_action(sym.w.ops[g], mps.theta);
      const double s = tol * std::max(1.0, mps.theta.norm());
      if ((y - mps.theta).norm() <= s)
        q[g] = 0;
      else if ((y + mps.theta).norm() <= s)
        q[g] = 1;
      else
        throw Error("GradingActionIndeterminate", el(g));
    }
    idx.q = validate_hom_z2(sym.group, std::move(q));
  } else {
    idx.kappa = 1;
    idx.q = *fit.q;
  }
  idx.cls = cocycle_of_rep(sym.w);
  return idx;
}

}  // namespace fspt
