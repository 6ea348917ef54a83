#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fspt/projective_rep.hpp"
#include "fspt/spt_index.hpp"

namespace fspt {

enum class MpsKind { Even, Odd };

// v is indexed by the occupation bitmask mu (2^d entries of size m x m).
// Even kind carries theta and the sigma0 it induces; odd kind carries sigma0.
struct FermionicMPS {
  MpsKind kind = MpsKind::Even;
  int d = 1;
  int m = 1;
  std::vector<Mat> v;
  Mat D;
  Mat theta;
  int sigma0 = 0;
};

// Checks every invariant and fills sigma0 for the even kind.
// Errors: DimensionMismatch, NotPositive, NotNormalized (message carries the
// S^{-1/2} rescaling hint), NotFixedPoint, NotGradingUnitary, GradingMismatch,
// DegenerateFixedPoint.
FermionicMPS validate_mps(FermionicMPS mps, double tol = 1e-8);

// sum_mu v_mu x v_mu^*. For the odd kind x lives on C^m (x) C^2 and the
// hatted matrices v_mu (x) sigma_z^{sigma0+|mu|} are used.
// Errors: DimensionMismatch.
Mat transfer_apply(const FermionicMPS& mps, const Mat& x);
// Matrix of x -> sum v x v^* on vec(x).
Mat transfer_matrix(const std::vector<Mat>& v);
// Unique trace-one positive D with sum v^* D v = D.
// Errors: DegenerateFixedPoint, NotPositive.
Mat transfer_fixed_point(const std::vector<Mat>& v, double tol = 1e-8);
// S^{-1/2} v_mu with S = sum v v^*.
std::vector<Mat> normalize_kraus(const std::vector<Mat>& v);

// (mu_x, nu_x) for x = 0..l
using SiteWord = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

cplx expectation(const FermionicMPS& mps, const SiteWord& w);
// Sign relating the word to its Jordan-Wigner matrix: jw(B) is this sign
// times the plain Kronecker product of the units.
int jw_sign(const SiteWord& w);

// rho with Tr(rho jw(B)) = expectation(B) for all words on l+1 sites.
// Errors: SizeTooLarge (d(l+1) > 14).
Mat density_matrix(const FermionicMPS& mps, int l);
// Same quantity assembled serially from explicit jw_embed products; only
// practical for d(l+1) <= 6.
Mat density_matrix_reference(const FermionicMPS& mps, int l);
// Trace out the last site of a chain with n_sites sites.
Mat partial_trace_last(const Mat& rho, int d, int n_sites);
Mat partial_trace_first(const Mat& rho, int d, int n_sites);
Mat global_parity(int d, int n_sites);

struct OnSiteSymmetry {
  FiniteGroup group;
  Z2Hom p;
  ProjectiveRep u;  // d x d one-particle operators
  ProjectiveRep w;  // m x m bond operators
  std::optional<Z2Hom> q;
};

struct SymmetryFit {
  std::vector<cplx> c;
  std::vector<double> residual;  // relative to sqrt(sum |v_nu|^2)
  std::optional<Z2Hom> q;        // odd kind only
};

// Least-squares c_g and residuals without judging them (for a given q on
// the odd kind; q is ignored for the even kind).
SymmetryFit measure_symmetry(const FermionicMPS& mps, const OnSiteSymmetry& sym,
                             const std::optional<Z2Hom>& q = std::nullopt);
// Errors: SymmetryViolated(g, residual), NoConsistentQ, DimensionMismatch.
SymmetryFit check_symmetry(const FermionicMPS& mps, const OnSiteSymmetry& sym, double tol = 1e-8);

// Errors: GradingActionIndeterminate(g), plus check_symmetry errors.
SPTIndex fmps_index(const FermionicMPS& mps, const OnSiteSymmetry& sym, double tol = 1e-8);

}  // namespace fspt
