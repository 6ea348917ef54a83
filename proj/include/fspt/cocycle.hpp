#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fspt/group.hpp"
#include "fspt/phase.hpp"

namespace fspt {

using PhaseTable = std::vector<std::vector<Phase>>;

// p-twisted U(1) 2-cocycle: elements with p(g)=1 act on U(1) by conjugation.
struct TwistedCocycle {
  FiniteGroup group;
  Z2Hom twist;
  PhaseTable values;

  const Phase& operator()(int g, int h) const { return values[g][h]; }
};

// Errors: NotNormalized(g), CocycleIdentityFails(f,g,h), DimensionMismatch.
TwistedCocycle validate_cocycle(const FiniteGroup& g, const Z2Hom& p, PhaseTable values);
TwistedCocycle trivial_cocycle(const FiniteGroup& g, const Z2Hom& p);

// (-1)^{q1(g) q2(h)}, a cocycle for every twist p.
TwistedCocycle epsilon(const FiniteGroup& g, const Z2Hom& q1, const Z2Hom& q2, const Z2Hom& p);
// (-1)^{q1(g)q2(h) + (k1-k2)(k1 q2(g) + k2 q1(g)) p(h)}
TwistedCocycle epsilon_p(const FiniteGroup& g, int k1, const Z2Hom& q1, int k2, const Z2Hom& q2,
                         const Z2Hom& p);

// Errors: MismatchedGroup.
TwistedCocycle cocycle_product(const TwistedCocycle& u1, const TwistedCocycle& u2);

// Twisted coboundary (g,h) -> b(g) conj^{p(g)}(b(h)) / b(gh); b(e) must be 1.
TwistedCocycle coboundary(const FiniteGroup& g, const Z2Hom& p, const std::vector<Phase>& b);

struct CocycleWitness {
  std::vector<Phase> b;
};

struct CohomologyResult {
  bool equivalent = false;
  std::int64_t modulus = 0;
  // smallest modulus at which a negative answer is a proof (see default_modulus)
  std::int64_t certified_modulus = 0;
  std::optional<CocycleWitness> witness;
};

// lcm(N * |G|, 2|G|) where N is the lcm of the orders of all values in u1, u2.
// If u2/u1 is a coboundary at all, a witness already exists among the
// N|G|-th roots of unity, so a false answer at this modulus is certified.
std::int64_t default_modulus(const TwistedCocycle& u1, const TwistedCocycle& u2);

// Decides u2 = u1 * coboundary(b) with b valued in the M-th roots of unity.
// Errors: MismatchedGroup, NotRootOfUnity(g,h) when a value is not an M-th root.
CohomologyResult cohomologous(const TwistedCocycle& u1, const TwistedCocycle& u2,
                              std::optional<std::int64_t> modulus = std::nullopt);

}  // namespace fspt
