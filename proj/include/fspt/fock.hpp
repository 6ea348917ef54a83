#pragma once

#include <cstdint>

#include "fspt/projective_rep.hpp"

namespace fspt {

// Fock basis vectors psi_mu are indexed by the occupation bitmask of mu,
// mode 1 being bit 0. |mu| is the parity of the occupation number.
inline int parity(std::uint64_t mask) { return __builtin_popcountll(mask) & 1; }

// Diagonal (-1)^{|mu|} on the 2^d dimensional Fock space.
Mat fock_parity(int d);

// Matrix of the second quantization of U: entry (mu,nu) is the minor
// det U[mu,nu] when #mu = #nu. The flag passes through unchanged.
// Errors: NotUnitary.
SymOp second_quantize(const Mat& u, int flag = 0, double tol = 1e-9);

// P^{(x)x} (x) e_{mu nu} (x) I^{(x)(L-1-x)}, the string present only for odd
// units. Site 0 is the leftmost Kronecker factor.
// Errors: IndexOutOfRange, SizeTooLarge (dL > 14).
Mat jw_embed(std::uint64_t mu, std::uint64_t nu, int site, int length, int d);

}  // namespace fspt
