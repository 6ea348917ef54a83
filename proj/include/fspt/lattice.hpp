#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fspt {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Solves A x = d (mod m). A is diagonalized over Z by unimodular row and
// column operations (Smith-style, without the divisibility chain), which
// reduces the system to independent scalar congruences.
// Returns one solution with entries in [0, m), or nullopt.
std::optional<std::vector<std::int64_t>> solve_congruences(const IntMatrix& a,
                                                           const std::vector<std::int64_t>& d,
                                                           std::int64_t m);

}  // namespace fspt
