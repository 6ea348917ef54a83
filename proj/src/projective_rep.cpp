#include "fspt/projective_rep.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fspt/error.hpp"

namespace fspt {

SymOp compose(const SymOp& a, const SymOp& b) {
  return SymOp{a.matrix * conj_if(b.matrix, a.flag), (a.flag + b.flag) % 2};
}

Mat adjoint_action(const SymOp& a, const Mat& x) {
  return a.matrix * conj_if(x, a.flag) * a.matrix.adjoint();
}

ProjectiveRep validate_rep(const FiniteGroup& g, const Z2Hom& p, std::vector<SymOp> ops,
                           double tol) {
  if (static_cast<int>(ops.size()) != g.n)
    throw Error("DimensionMismatch", "representation needs one operator per group element");
  const Eigen::Index n = ops.front().matrix.rows();
  for (int x = 0; x < g.n; ++x) {
    const auto& op = ops[x];
    if (op.matrix.rows() != n || op.matrix.cols() != n)
      throw Error("DimensionMismatch", "operator " + std::to_string(x) + " has the wrong shape");
    if (!is_unitary(op.matrix, tol)) throw Error("NotUnitary", "operator " + std::to_string(x));
    if (op.flag != p(x))
      throw Error("FlagMismatch", "operator " + std::to_string(x) + " flag differs from the twist");
  }
  return ProjectiveRep{g, p, std::move(ops)};
}

namespace {

// raw u(g,h) from matrices with w(e) = I
std::vector<std::vector<cplx>> raw_cocycle(const FiniteGroup& g, const std::vector<SymOp>& w,
                                           double tol) {
  std::vector<std::vector<cplx>> raw(g.n, std::vector<cplx>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      const Mat x = compose(w[a], w[b]).matrix * w[g.mul(a, b)].matrix.adjoint();
      cplx c;
      if (!is_scalar(x, tol, &c))
        throw Error("NotProjectiveRep",
                    "at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      raw[a][b] = c / std::abs(c);
    }
  return raw;
}

std::optional<PhaseTable> snap_all(const std::vector<std::vector<cplx>>& raw, std::int64_t order) {
  PhaseTable t(raw.size(), std::vector<Phase>(raw.size()));
  for (std::size_t a = 0; a < raw.size(); ++a)
    for (std::size_t b = 0; b < raw.size(); ++b) {
      auto ph = snap_phase(raw[a][b], order, 1e-6);
      if (!ph) return std::nullopt;
      t[a][b] = *ph;
    }
  return t;
}

}  // namespace

TwistedCocycle cocycle_of_rep(const ProjectiveRep& rep, double tol) {
  const FiniteGroup& g = rep.group;
  const Eigen::Index dim = rep.dim();
  std::vector<SymOp> w = rep.ops;
  {
    cplx c;
    if (!is_scalar(w[g.identity].matrix, tol, &c))
      throw Error("NotProjectiveRep", "rep(e) is not a scalar");
    w[g.identity].matrix = identity(dim);
  }
  const std::int64_t order = std::lcm<std::int64_t>(2 * g.n, dim);

  if (auto t = snap_all(raw_cocycle(g, w, tol), order))
    return validate_cocycle(g, rep.twist, std::move(*t));

  // det(w_g conj(w_h)) = det(w_gh) = 1 forces u^dim = 1
  for (int x = 0; x < g.n; ++x) {
    if (x == g.identity) continue;
    const cplx det = w[x].matrix.determinant();
    w[x].matrix /= std::pow(det, 1.0 / static_cast<double>(dim));
  }
  if (auto t = snap_all(raw_cocycle(g, w, tol), order))
    return validate_cocycle(g, rep.twist, std::move(*t));
  throw Error("NotRootOfUnity", "cocycle values did not snap to roots of unity of order " +
                                    std::to_string(order));
}

}  // namespace fspt
