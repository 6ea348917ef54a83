#include "fixtures.hpp"

#include <cmath>

namespace fx {

FiniteGroup z1() { return cyclic_group(1); }
FiniteGroup z2() { return cyclic_group(2); }
FiniteGroup klein() { return direct_product(z2(), z2()); }
Z2Hom id_z2() { return validate_hom_z2(z2(), {0, 1}); }

SymOp op(const Mat& m, int flag) { return SymOp{m, flag}; }

Mat mat1(cplx z) {
  Mat m(1, 1);
  m(0, 0) = z;
  return m;
}

ProjectiveRep trivial_rep(const FiniteGroup& g, const Z2Hom& p, int dim) {
  std::vector<SymOp> ops;
  for (int x = 0; x < g.n; ++x) ops.push_back(op(identity(dim), p(x)));
  return validate_rep(g, p, ops);
}

ProjectiveRep pauli_rep() {
  const FiniteGroup g = klein();
  return validate_rep(g, trivial_hom(g),
                      {op(identity(2)), op(pauli_x()), op(pauli_z()), op(pauli_x() * pauli_z())});
}

ProjectiveRep kramers_rep() {
  return validate_rep(z2(), id_z2(), {op(identity(2), 0), op(pauli_y(), 1)});
}

std::vector<GroupCase> grid_groups() {
  return {{z2(), trivial_hom(z2()), "Z2"},
          {z2(), id_z2(), "Z2T"},
          {klein(), trivial_hom(klein()), "Z2xZ2"}};
}

std::vector<ProjectiveRep> v0_catalog(const FiniteGroup& g, const Z2Hom& p) {
  std::vector<ProjectiveRep> out{trivial_rep(g, p, 1)};
  if (g.n == 2 && !p.is_trivial()) out.push_back(kramers_rep());
  if (g.n == 4) out.push_back(pauli_rep());
  return out;
}

static std::string hom_label(const Z2Hom& q) {
  std::string s;
  for (int v : q.values) s += char('0' + v);
  return s;
}

std::vector<Cell> structured_cells(const FiniteGroup& g, const Z2Hom& p) {
  std::vector<Cell> out;
  const auto catalog = v0_catalog(g, p);
  for (int kappa = 0; kappa < 2; ++kappa)
    for (const auto& q : all_z2_homs(g))
      for (std::size_t c = 0; c < catalog.size(); ++c) {
        const auto& v0 = catalog[c];
        const int k = static_cast<int>(v0.dim());
        Cell cell{kappa == 0 ? make_r0(k, r0_action(v0, q)) : make_r1(k, r1_action(v0, q)),
                  SPTIndex{kappa, q, cocycle_of_rep(v0)}, v0,
                  (kappa ? "R1" : "R0") + std::string("/q") + hom_label(q) + "/v" +
                      std::to_string(c)};
        out.push_back(std::move(cell));
      }
  return out;
}

std::vector<Mat> random_graded_kraus(int d, const Mat& theta, int sigma0, std::mt19937_64& rng) {
  std::vector<Mat> v;
  for (std::uint64_t mu = 0; mu < (1u << d); ++mu) {
    const Mat x = random_matrix(theta.rows(), rng);
    const double s = ((parity(mu) + sigma0) % 2) ? -1.0 : 1.0;
    v.push_back((x + s * theta * x * theta.adjoint()) / 2.0);
  }
  return v;
}

FermionicMPS finish_even(std::vector<Mat> v, const Mat& theta, int d) {
  FermionicMPS mps;
  mps.kind = MpsKind::Even;
  mps.d = d;
  mps.m = static_cast<int>(theta.rows());
  mps.v = normalize_kraus(v);
  mps.theta = theta;
  mps.D = transfer_fixed_point(mps.v);
  return validate_mps(mps);
}

FermionicMPS majorana(int sigma0) {
  FermionicMPS mps;
  mps.kind = MpsKind::Odd;
  mps.d = 1;
  mps.m = 1;
  mps.v = {mat1(1 / std::sqrt(2.0)), mat1(1 / std::sqrt(2.0))};
  mps.D = mat1(1);
  mps.sigma0 = sigma0;
  return validate_mps(mps);
}

FermionicMPS even_d1(int sigma0, double t1, double t2) {
  Mat diag = Mat::Zero(2, 2), off = Mat::Zero(2, 2);
  diag(0, 0) = std::cos(t1);
  diag(1, 1) = std::cos(t2);
  off(0, 1) = std::sin(t1);
  off(1, 0) = std::sin(t2);
  std::vector<Mat> v = sigma0 ? std::vector<Mat>{off, diag} : std::vector<Mat>{diag, off};
  return finish_even(v, pauli_z(), 1);
}

FermionicMPS even_d2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return finish_even(random_graded_kraus(2, pauli_z(), 0, rng), pauli_z(), 2);
}

FermionicMPS product_state() {
  return finish_even({mat1(1), mat1(0)}, mat1(1), 1);
}

std::vector<Mat> twirl(const std::vector<Mat>& v, const OnSiteSymmetry& sym) {
  std::vector<Mat> out(v.size(), Mat::Zero(v[0].rows(), v[0].cols()));
  for (int g = 0; g < sym.group.n; ++g) {
    const Mat f = second_quantize(sym.u.ops[g].matrix, sym.u.ops[g].flag).matrix;
    const SymOp& w = sym.w.ops[g];
    for (std::size_t nu = 0; nu < v.size(); ++nu) {
      Mat lhs = Mat::Zero(v[0].rows(), v[0].cols());
      for (std::size_t mu = 0; mu < v.size(); ++mu)
        lhs += f(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(nu)) * v[mu];
      out[nu] += conj_if(w.matrix.adjoint() * lhs * w.matrix, w.flag) / double(sym.group.n);
    }
  }
  return out;
}

static OnSiteSymmetry make_sym(const FiniteGroup& g, const Z2Hom& p, std::vector<SymOp> u,
                               std::vector<SymOp> w) {
  OnSiteSymmetry s{g, p, validate_rep(g, p, std::move(u)), validate_rep(g, p, std::move(w)),
                   std::nullopt};
  return s;
}

std::vector<Covariant> covariant_fixtures() {
  std::vector<Covariant> out;
  const FiniteGroup g2 = z2();
  const Z2Hom p0 = trivial_hom(g2);

  {
    auto sym = make_sym(g2, p0, {op(mat1(1)), op(mat1(-1))}, {op(identity(2)), op(pauli_z())});
    out.push_back({"parity/even_d1", even_d1(0), sym, SPTIndex{0, p0, trivial_cocycle(g2, p0)}});
    out.push_back(
        {"parity/even_d1_s1", even_d1(1), sym, SPTIndex{0, p0, trivial_cocycle(g2, p0)}});
  }
  {
    auto sym = make_sym(g2, p0, {op(mat1(1)), op(mat1(-1))}, {op(mat1(1)), op(mat1(1))});
    out.push_back({"parity/product", product_state(), sym, SPTIndex{0, p0, trivial_cocycle(g2, p0)}});
  }
  {
    auto sym = make_sym(g2, p0, {op(identity(2)), op(pauli_x())}, {op(identity(2)), op(pauli_x())});
    std::mt19937_64 rng(22);
    auto v = twirl(random_graded_kraus(2, pauli_z(), 0, rng), sym);
    out.push_back({"swap/even_d2", finish_even(v, pauli_z(), 2), sym,
                   SPTIndex{0, id_z2(), trivial_cocycle(g2, p0)}});
  }
  {
    // (0,1) is fermion parity, so its bond operator has to be Theta itself;
    // (1,0) swaps the two modes
    const FiniteGroup k = klein();
    const Z2Hom pk = trivial_hom(k);
    const Mat sx = pauli_x(), sz = pauli_z();
    auto sym = make_sym(k, pk, {op(identity(2)), op(-identity(2)), op(sx), op(-sx)},
                        {op(identity(2)), op(sz), op(sx), op(sx * sz)});
    std::mt19937_64 rng(12);
    auto v = twirl(random_graded_kraus(2, sz, 0, rng), sym);
    out.push_back({"pauli/even_d2", finish_even(v, sz, 2), sym,
                   SPTIndex{0, validate_hom_z2(k, {0, 0, 1, 1}), cocycle_of_rep(sym.w)}});
  }
  {
    const Z2Hom p1 = id_z2();
    auto sym = make_sym(g2, p1, {op(identity(2), 0), op(identity(2), 1)},
                        {op(identity(2), 0), op(pauli_y(), 1)});
    std::mt19937_64 rng(22);
    auto v = twirl(random_graded_kraus(2, pauli_z(), 0, rng), sym);
    out.push_back({"time_reversal/even_d2", finish_even(v, pauli_z(), 2), sym,
                   SPTIndex{0, p1, cocycle_of_rep(kramers_rep())}});
  }
  {
    auto sym = make_sym(g2, p0, {op(mat1(1)), op(mat1(-1))}, {op(mat1(1)), op(mat1(1))});
    out.push_back({"parity/majorana", majorana(0), sym,
                   SPTIndex{1, id_z2(), trivial_cocycle(g2, p0)}});
  }
  {
    const FiniteGroup g = z1();
    const Z2Hom p = trivial_hom(g);
    auto sym = make_sym(g, p, {op(mat1(1))}, {op(mat1(1))});
    out.push_back({"trivial/majorana", majorana(1), sym, SPTIndex{1, p, trivial_cocycle(g, p)}});
  }
  return out;
}

std::vector<FermionicMPS> primitive_fixtures() {
  std::vector<FermionicMPS> out{majorana(0), majorana(1), even_d1(0), even_d1(1), even_d2()};
  for (const auto& c : covariant_fixtures())
    if (c.mps.m > 1) out.push_back(c.mps);
  return out;
}

}  // namespace fx
