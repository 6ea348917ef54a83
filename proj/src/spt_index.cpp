#include "fspt/spt_index.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <random>
#include <string>

#include "fspt/error.hpp"

namespace fspt {
namespace {

std::string el(int g) { return "element " + std::to_string(g); }

Mat matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  Mat e = Mat::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

Mat pow_op(const Mat& m, int e) { return e ? m : identity(m.rows()); }

void require_same_group(const FiniteGroup& g1, const Z2Hom& p1, const FiniteGroup& g2,
                        const Z2Hom& p2) {
  if (!(g1 == g2)) throw Error("GroupMismatch", "systems carry different groups");
  if (!(p1 == p2)) throw Error("GroupMismatch", "systems carry different twists");
}

// Ad_V(x) = s x with s = +-1
std::optional<int> sign_relation(const Mat& y, const Mat& x, double tol) {
  const double scale = tol * std::max(1.0, x.norm());
  if ((y - x).norm() <= scale) return 0;
  if ((y + x).norm() <= scale) return 1;
  return std::nullopt;
}

Z2Hom read_q(const GradedSystem& sys, const Mat& marker, double tol) {
  std::vector<int> q(sys.group.n);
  for (int g = 0; g < sys.group.n; ++g) {
    auto s = sign_relation(adjoint_action(sys.action.ops[g], marker), marker, tol);
    if (!s) throw Error("GradingActionIndeterminate", el(g));
    q[g] = *s;
  }
  return validate_hom_z2(sys.group, std::move(q));
}

GradedSystem finish(GradedSystem sys) {
  validate_system(sys);
  return sys;
}

}  // namespace

GradedSystem make_r0(int k_dim, const ProjectiveRep& action) {
  GradedSystem s;
  s.group = action.group;
  s.p = action.twist;
  const Eigen::Index k = k_dim;
  std::vector<Mat> span;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b) span.push_back(kron(matrix_unit(k, i, j), matrix_unit(2, a, b)));
  s.algebra = algebra_from_span(2 * k, span);
  s.gamma = kron(identity(k), pauli_z());
  s.action = action;
  s.form = "R0";
  s.k_dim = k_dim;
  if (action.dim() != 2 * k) throw Error("DimensionMismatch", "R0 action must act on K (x) C^2");
  return finish(std::move(s));
}

GradedSystem make_r1(int k_dim, const ProjectiveRep& action) {
  GradedSystem s;
  s.group = action.group;
  s.p = action.twist;
  const Eigen::Index k = k_dim;
  std::vector<Mat> span;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      span.push_back(kron(matrix_unit(k, i, j), identity(2)));
      span.push_back(kron(matrix_unit(k, i, j), pauli_x()));
    }
  s.algebra = algebra_from_span(2 * k, span);
  s.gamma = kron(identity(k), pauli_z());
  s.action = action;
  s.form = "R1";
  s.k_dim = k_dim;
  if (action.dim() != 2 * k) throw Error("DimensionMismatch", "R1 action must act on K (x) C^2");
  return finish(std::move(s));
}

GradedSystem make_system(const std::vector<Mat>& generators, const Mat& gamma,
                         const ProjectiveRep& action) {
  GradedSystem s;
  s.group = action.group;
  s.p = action.twist;
  s.algebra = algebra_closure(generators);
  s.gamma = gamma;
  s.action = action;
  s.form = "generators";
  s.generators = generators;
  if (action.dim() != s.algebra.n || gamma.rows() != s.algebra.n)
    throw Error("DimensionMismatch", "action, grading and algebra live on different spaces");
  return finish(std::move(s));
}

ProjectiveRep r0_action(const ProjectiveRep& v0, const Z2Hom& q) {
  std::vector<SymOp> ops;
  for (int g = 0; g < v0.group.n; ++g)
    ops.push_back({kron(v0.ops[g].matrix, pow_op(pauli_x(), q(g))), v0.ops[g].flag});
  return validate_rep(v0.group, v0.twist, std::move(ops));
}

ProjectiveRep r1_action(const ProjectiveRep& v0, const Z2Hom& q) {
  std::vector<SymOp> ops;
  for (int g = 0; g < v0.group.n; ++g) {
    const int f = v0.ops[g].flag;
    // C^f sigma_y^q = conj^f(sigma_y^q) C^f
    ops.push_back({kron(v0.ops[g].matrix, conj_if(pow_op(pauli_y(), q(g)), f)), f});
  }
  return validate_rep(v0.group, v0.twist, std::move(ops));
}

namespace {

struct Checked {
  GradedParts parts;
  GradedCenter split;
};

// validate_system, keeping the pieces classify needs
Checked check_system(const GradedSystem& sys, double tol) {
  const OperatorAlgebra& a = sys.algebra;
  if (sys.gamma.rows() != a.n || sys.action.dim() != a.n)
    throw Error("DimensionMismatch", "action, grading and algebra live on different spaces");
  validate_grading(sys.gamma);
  if (!(sys.action.group == sys.group) || !(sys.action.twist == sys.p))
    throw Error("GroupMismatch", "action carries a different group or twist");
  if (!a.contains(identity(a.n), tol)) throw Error("NotUnital", "algebra does not contain I");

  Checked out{graded_parts(a, sys.gamma), {}};
  std::mt19937_64 rng(0x5eed);
  if (!find_odd_unitary(out.parts, a.n, rng)) throw Error("NotBalanced", "no odd self-adjoint unitary");
  out.split = graded_center_split_unchecked(a, sys.gamma);

  // automorphisms agreeing on generators agree everywhere
  const std::vector<Mat> gens = a.generating_set();
  for (int g = 0; g < sys.group.n; ++g) {
    const SymOp& v = sys.action.ops[g];
    for (const auto& x : gens) {
      const Mat y = adjoint_action(v, x);
      if (!a.contains(y, tol)) throw Error("ActionNotAutomorphism", el(g));
      const Mat lhs = adjoint_action(v, sys.gamma * x * sys.gamma);
      const Mat rhs = sys.gamma * y * sys.gamma;
      if ((lhs - rhs).norm() > tol * std::max(1.0, x.norm())) throw Error("ActionBreaksGrading", el(g));
    }
  }
  return out;
}

Classification classify_checked(const GradedSystem& sys, const Checked& ck) {
  if (ck.split.odd_unitary) return Classification{1, *ck.split.odd_unitary};

  OperatorAlgebra even;
  even.n = sys.algebra.n;
  even.q = ck.parts.even;
  const OperatorAlgebra z = center(even);
  if (z.dim() != 2)
    throw Error("MarkerNotFound", "center of the even part has dimension " + std::to_string(z.dim()));
  const Eigen::Index n = sys.algebra.n;
  const Mat id = identity(n);
  Mat best;
  double best_norm = -1;
  for (Eigen::Index i = 0; i < 2; ++i) {
    const Mat x = z.element(i);
    const Mat y = x - id * (x.trace() / static_cast<double>(n));
    for (const Mat& h : {Mat(y + y.adjoint()), Mat(cplx(0, 1) * (y - y.adjoint()))})
      if (h.norm() > best_norm) {
        best_norm = h.norm();
        best = h;
      }
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(best);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (hi - lo <= 1e-12) throw Error("MarkerNotFound", "even center has no nontrivial projection");
  const Mat marker = (2.0 * best - (hi + lo) * id) / (hi - lo);
  if ((marker * marker - id).norm() > 1e-8 * std::sqrt(static_cast<double>(n)))
    throw Error("MarkerNotFound", "even-center element is not a grading");
  return Classification{0, marker};
}

}  // namespace

void validate_system(const GradedSystem& sys, double tol) { check_system(sys, tol); }

GradedSystem conjugate_system(const GradedSystem& sys, const Mat& t) {
  GradedSystem out = sys;
  std::vector<Mat> span;
  for (const auto& x : sys.algebra.basis()) span.push_back(t * x * t.adjoint());
  std::vector<Mat> gens;
  for (const auto& x : sys.algebra.generators) gens.push_back(t * x * t.adjoint());
  out.algebra = algebra_from_span(sys.algebra.n, span, std::move(gens));
  out.gamma = t * sys.gamma * t.adjoint();
  for (auto& op : out.action.ops) op.matrix = t * op.matrix * conj_if(t.adjoint(), op.flag);
  for (auto& x : out.generators) x = t * x * t.adjoint();
  out.form = "generators";
  if (out.generators.empty()) out.generators = out.algebra.generating_set();
  return out;
}

GradedSystem rephase_system(const GradedSystem& sys, const std::vector<cplx>& lambda) {
  GradedSystem out = sys;
  for (int g = 0; g < sys.group.n; ++g) out.action.ops[g].matrix *= lambda[g];
  return out;
}

Classification classify(const GradedSystem& sys, double tol) {
  return classify_checked(sys, check_system(sys, tol));
}

namespace {

// Projective action induced on a simple factor F = M_k (x) I_r of B(C^n).
// A vector xi in the range of a minimal projection of F spans, under F, a
// copy of C^k; compressing to it identifies F with M_k. The automorphism
// Ad_{V_g} transported to M_k is then implemented by w_g with
// w_g e_1 = eta and w_g e_i = phi(E_{i1}) eta, eta spanning phi(E_{11}).
ProjectiveRep reduced_action(const OperatorAlgebra& f, const GradedSystem& sys, double tol) {
  const Eigen::Index n = f.n;
  const Eigen::Index k2 = f.dim();
  const auto k = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(k2))));
  if (k * k != k2 || n % k != 0)
    throw Error("NotAFactor", "algebra of dimension " + std::to_string(k2) + " is not simple");
  const Eigen::Index r = n / k;
  const std::vector<Mat> basis = f.basis();

  std::mt19937_64 rng(0xfac7);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::optional<Vec> xi;
  for (int attempt = 0; attempt < 8 && !xi; ++attempt) {
    Mat h = Mat::Zero(n, n);
    for (const auto& b : basis) h += nd(rng) * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double gap_tol = 1e-7 * std::max(1.0, ev(n - 1) - ev(0));
    Eigen::Index cluster = 1;
    while (cluster < n && ev(cluster) - ev(0) <= gap_tol) ++cluster;
    if (cluster == r) xi = es.eigenvectors().col(0);
  }
  if (!xi) throw Error("NotAFactor", "could not isolate a minimal projection");

  SpanBuilder sb(n);
  for (const auto& b : basis) sb.add(b * *xi, 1e-7, b.norm() / std::sqrt(double(n)));
  if (sb.size() != k) throw Error("NotAFactor", "minimal projection has the wrong rank");
  const Mat j = sb.matrix();  // n x k isometry

  // iota(x) = J^* x J is linear and bijective F -> M_k
  Mat coeff(k2, k2);
  for (Eigen::Index c = 0; c < k2; ++c) coeff.col(c) = vec(j.adjoint() * basis[c] * j);
  const Eigen::PartialPivLU<Mat> lu(coeff);
  auto lift = [&](const Mat& m) {
    const Vec c = lu.solve(vec(m));
    Mat x = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < k2; ++i) x += c(i) * basis[i];
    return x;
  };
  std::vector<Mat> lifted_col;  // lifts of E_{i1}
  for (Eigen::Index i = 0; i < k; ++i) lifted_col.push_back(lift(matrix_unit(k, i, 0)));

  std::vector<SymOp> ops;
  for (int g = 0; g < sys.group.n; ++g) {
    const SymOp& v = sys.action.ops[g];
    auto phi = [&](const Mat& lifted) { return Mat(j.adjoint() * adjoint_action(v, lifted) * j); };
    const Mat p11 = phi(lifted_col[0]);
    Eigen::Index best = 0;
    p11.colwise().norm().maxCoeff(&best);
    const Vec eta = p11.col(best).normalized();
    Mat w(k, k);
    for (Eigen::Index i = 0; i < k; ++i) w.col(i) = phi(lifted_col[i]) * eta;
    if (!is_unitary(w, 1e-7))
      throw Error("NumericalFailure", "reduced implementer is not unitary at " + el(g));
    ops.push_back({w, v.flag});
  }
  (void)tol;
  return validate_rep(sys.group, sys.p, std::move(ops), 1e-7);
}

}  // namespace

SPTIndex compute_index(const GradedSystem& sys, double tol) {
  const Checked ck = check_system(sys, tol);
  const Classification c = classify_checked(sys, ck);
  SPTIndex idx;
  idx.kappa = c.kappa;
  idx.q = read_q(sys, c.marker, tol);
  OperatorAlgebra f = sys.algebra;
  if (c.kappa == 1) {
    f.q = ck.parts.even;
    f.generators.clear();
  }
  idx.cls = cocycle_of_rep(reduced_action(f, sys, tol));
  return idx;
}

SPTIndex compute_index_standard_form(const GradedSystem& sys, double tol) {
  const Classification c = classify(sys, tol);
  SPTIndex idx;
  idx.kappa = c.kappa;
  idx.q = read_q(sys, c.marker, tol);
  idx.cls = cocycle_of_rep(sys.action);
  if (c.kappa == 1) idx.cls = cocycle_product(idx.cls, epsilon(sys.group, idx.q, sys.p, sys.p));
  return idx;
}

GradedSystem stack_systems(const GradedSystem& s1, const GradedSystem& s2) {
  require_same_group(s1.group, s1.p, s2.group, s2.p);
  GradedSystem s;
  s.group = s1.group;
  s.p = s1.p;
  s.algebra = graded_tensor_algebra(s1.algebra, s1.gamma, s2.algebra, s2.gamma);
  s.gamma = kron(s1.gamma, s2.gamma);
  std::vector<SymOp> ops;
  for (int g = 0; g < s.group.n; ++g) {
    const SymOp& v1 = s1.action.ops[g];
    const SymOp& v2 = s2.action.ops[g];
    auto nu = sign_relation(adjoint_action(v1, s1.gamma), s1.gamma, 1e-8);
    if (!nu) throw Error("GradingActionIndeterminate", "Ad_V does not map Gamma to +-Gamma at " + el(g));
    // V2 Gamma2^nu = v2 conj^f(Gamma2)^nu K^f
    const Mat right = v2.matrix * pow_op(conj_if(s2.gamma, v2.flag), *nu);
    ops.push_back({kron(v1.matrix, right), v1.flag});
  }
  s.action = validate_rep(s.group, s.p, std::move(ops), 1e-8);
  s.form = "generators";
  s.generators = s.algebra.generators;
  validate_system(s);
  return s;
}

SPTIndex stack_index(const SPTIndex& i1, const SPTIndex& i2) {
  require_same_group(i1.cls.group, i1.cls.twist, i2.cls.group, i2.cls.twist);
  const FiniteGroup& g = i1.cls.group;
  const Z2Hom& p = i1.cls.twist;
  SPTIndex out;
  out.kappa = (i1.kappa + i2.kappa) % 2;
  out.q = hom_sum(hom_sum(i1.q, i2.q), (i1.kappa && i2.kappa) ? p : trivial_hom(g));
  out.cls = cocycle_product(cocycle_product(i1.cls, i2.cls),
                            epsilon_p(g, i1.kappa, i1.q, i2.kappa, i2.q, p));
  return out;
}

bool index_equal(const SPTIndex& i1, const SPTIndex& i2, std::optional<std::int64_t> modulus) {
  if (i1.kappa != i2.kappa || !(i1.q == i2.q)) return false;
  return cohomologous(i1.cls, i2.cls, modulus).equivalent;
}

SPTIndex trivial_index(const FiniteGroup& g, const Z2Hom& p) {
  return SPTIndex{0, trivial_hom(g), trivial_cocycle(g, p)};
}

Z8Element z8_encode(const SPTIndex& i) {
  const FiniteGroup& g = i.cls.group;
  if (g.n != 2) throw Error("NotTimeReversalShape", "group must have order 2");
  const int t = 1 - g.identity;
  if (i.cls.twist(t) != 1) throw Error("NotTimeReversalShape", "twist must be the identity map");
  const Phase u = i.cls(t, t);
  if (!(u == Phase()) && !(u == minus_one()))
    throw Error("NotTimeReversalShape", "u(1,1) must be +1 or -1");
  return Z8Element{i.kappa, i.q(t), u == Phase() ? 1 : -1};
}

SPTIndex z8_decode(const Z8Element& e) {
  const FiniteGroup g = cyclic_group(2);
  const Z2Hom p = validate_hom_z2(g, {0, 1});
  PhaseTable t(2, std::vector<Phase>(2));
  if (e.xi < 0) t[1][1] = minus_one();
  return SPTIndex{e.kappa, validate_hom_z2(g, {0, e.eps}), validate_cocycle(g, p, std::move(t))};
}

Z8Element z8_compose(const Z8Element& a, const Z8Element& b) {
  auto sgn = [](int e) { return e % 2 ? -1 : 1; };
  const int x = a.xi * b.xi;
  if (a.kappa == 0 && b.kappa == 0) return {0, (a.eps + b.eps) % 2, sgn(a.eps * b.eps) * x};
  if (a.kappa == 0 && b.kappa == 1) return {1, (a.eps + b.eps) % 2, sgn(a.eps + a.eps * b.eps) * x};
  if (a.kappa == 1 && b.kappa == 0) return {1, (a.eps + b.eps) % 2, sgn(b.eps + a.eps * b.eps) * x};
  return {0, (a.eps + b.eps + 1) % 2, sgn(a.eps * b.eps) * x};
}

std::string to_string(const Z8Element& e) {
  return "[" + std::to_string(e.kappa) + ";" + std::to_string(e.eps) + "," + (e.xi > 0 ? "+" : "-") + "]";
}

}  // namespace fspt
