#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fspt/algebra.hpp"
#include "fspt/cocycle.hpp"
#include "fspt/fmps.hpp"
#include "fspt/fock.hpp"
#include "fspt/group.hpp"
#include "fspt/linalg.hpp"
#include "fspt/projective_rep.hpp"
#include "fspt/spt_index.hpp"

namespace fx {

using namespace fspt;

FiniteGroup z1();
FiniteGroup z2();
FiniteGroup klein();  // element 2a+b is (a,b)
Z2Hom id_z2();

// (I_dim, p(g)) for every g
ProjectiveRep trivial_rep(const FiniteGroup& g, const Z2Hom& p, int dim);
// I, sigma_x, sigma_z, sigma_x sigma_z on (0,0), (0,1), (1,0), (1,1)
ProjectiveRep pauli_rep();
// Z2 time reversal acting as sigma_y K on C^2 (squares to -1)
ProjectiveRep kramers_rep();

struct GroupCase {
  FiniteGroup g;
  Z2Hom p;
  std::string name;
};
// Z2 untwisted, Z2 time reversal, Z2xZ2 untwisted
std::vector<GroupCase> grid_groups();

// One V0 per cohomology class of (G,p), K-dim <= 2.
std::vector<ProjectiveRep> v0_catalog(const FiniteGroup& g, const Z2Hom& p);

struct Cell {
  GradedSystem sys;
  SPTIndex expected;
  ProjectiveRep v0;
  std::string label;
};
// R0/R1 systems for every kappa, q and V0 in the catalog.
std::vector<Cell> structured_cells(const FiniteGroup& g, const Z2Hom& p);

// Random homogeneous Kraus set: v_mu commutes or anticommutes with theta
// according to |mu| + sigma0.
std::vector<Mat> random_graded_kraus(int d, const Mat& theta, int sigma0, std::mt19937_64& rng);
// Normalizes, attaches the fixed point and validates.
FermionicMPS finish_even(std::vector<Mat> v, const Mat& theta, int d);

FermionicMPS majorana(int sigma0 = 0);
// d=1, m=2. sigma0 = 0: v_0 diagonal, v_1 off-diagonal; sigma0 = 1 swaps the roles.
FermionicMPS even_d1(int sigma0 = 0, double t1 = 0.3, double t2 = 1.3);
FermionicMPS even_d2(std::uint64_t seed = 22);
FermionicMPS product_state();

// Average of v under the symmetry with c_g = 1 (abelian G, real Fock matrices).
std::vector<Mat> twirl(const std::vector<Mat>& v, const OnSiteSymmetry& sym);

struct Covariant {
  std::string label;
  FermionicMPS mps;
  OnSiteSymmetry sym;
  SPTIndex expected;
};
std::vector<Covariant> covariant_fixtures();

std::vector<FermionicMPS> primitive_fixtures();

SymOp op(const Mat& m, int flag = 0);
Mat mat1(fspt::cplx z);

}  // namespace fx
