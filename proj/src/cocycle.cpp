#include "fspt/cocycle.hpp"

#include <numeric>
#include <string>

#include "fspt/error.hpp"
#include "fspt/lattice.hpp"

namespace fspt {
namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void require_same(const TwistedCocycle& u1, const TwistedCocycle& u2) {
  if (!(u1.group == u2.group)) throw Error("MismatchedGroup", "cocycles live on different groups");
  if (!(u1.twist == u2.twist)) throw Error("MismatchedGroup", "cocycles have different twists");
}

Phase sign(int e) { return e % 2 ? minus_one() : Phase(); }

}  // namespace

TwistedCocycle validate_cocycle(const FiniteGroup& g, const Z2Hom& p, PhaseTable values) {
  const int n = g.n;
  if (static_cast<int>(p.values.size()) != n)
    throw Error("DimensionMismatch", "twist does not match the group");
  if (static_cast<int>(values.size()) != n)
    throw Error("DimensionMismatch", "phase table has wrong row count");
  for (const auto& row : values)
    if (static_cast<int>(row.size()) != n) throw Error("DimensionMismatch", "phase table is not n x n");

  const int e = g.identity;
  for (int x = 0; x < n; ++x)
    if (!values[e][x].is_one() || !values[x][e].is_one())
      throw Error("NotNormalized", "at element " + std::to_string(x));

  for (int f = 0; f < n; ++f)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Phase lhs = values[a][b].conj_if(p(f)) * values[f][g.mul(a, b)];
        const Phase rhs = values[f][a] * values[g.mul(f, a)][b];
        if (!(lhs == rhs))
          throw Error("CocycleIdentityFails", "at (" + std::to_string(f) + "," + std::to_string(a) +
                                                  "," + std::to_string(b) + ")");
      }
  return TwistedCocycle{g, p, std::move(values)};
}

TwistedCocycle trivial_cocycle(const FiniteGroup& g, const Z2Hom& p) {
  return validate_cocycle(g, p, PhaseTable(g.n, std::vector<Phase>(g.n)));
}

TwistedCocycle epsilon(const FiniteGroup& g, const Z2Hom& q1, const Z2Hom& q2, const Z2Hom& p) {
  PhaseTable t(g.n, std::vector<Phase>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) t[a][b] = sign(q1(a) * q2(b));
  return validate_cocycle(g, p, std::move(t));
}

TwistedCocycle epsilon_p(const FiniteGroup& g, int k1, const Z2Hom& q1, int k2, const Z2Hom& q2,
                         const Z2Hom& p) {
  // only the parity of k1 - k2 matters
  const int dk = (k1 + k2) % 2;
  PhaseTable t(g.n, std::vector<Phase>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      t[a][b] = sign(q1(a) * q2(b) + dk * (k1 * q2(a) + k2 * q1(a)) * p(b));
  return validate_cocycle(g, p, std::move(t));
}

TwistedCocycle cocycle_product(const TwistedCocycle& u1, const TwistedCocycle& u2) {
  require_same(u1, u2);
  PhaseTable t = u1.values;
  for (int a = 0; a < u1.group.n; ++a)
    for (int b = 0; b < u1.group.n; ++b) t[a][b] = u1(a, b) * u2(a, b);
  return validate_cocycle(u1.group, u1.twist, std::move(t));
}

TwistedCocycle coboundary(const FiniteGroup& g, const Z2Hom& p, const std::vector<Phase>& b) {
  if (static_cast<int>(b.size()) != g.n) throw Error("DimensionMismatch", "cochain size");
  if (!b[g.identity].is_one()) throw Error("NotNormalized", "cochain must satisfy b(e) = 1");
  PhaseTable t(g.n, std::vector<Phase>(g.n));
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) t[x][y] = b[x] * b[y].conj_if(p(x)) / b[g.mul(x, y)];
  return validate_cocycle(g, p, std::move(t));
}

std::int64_t default_modulus(const TwistedCocycle& u1, const TwistedCocycle& u2) {
  std::int64_t order = 1;
  for (const auto* u : {&u1, &u2})
    for (const auto& row : u->values)
      for (const auto& ph : row) order = std::lcm(order, ph.n());
  const std::int64_t n = u1.group.n;
  return std::lcm(order * n, 2 * n);
}

CohomologyResult cohomologous(const TwistedCocycle& u1, const TwistedCocycle& u2,
                              std::optional<std::int64_t> modulus) {
  require_same(u1, u2);
  const FiniteGroup& g = u1.group;
  const int n = g.n;
  const int e = g.identity;
  const std::int64_t m = modulus.value_or(default_modulus(u1, u2));
  if (m <= 0) throw Error("InvalidModulus", "modulus must be positive");

  CohomologyResult res;
  res.modulus = m;
  res.certified_modulus = default_modulus(u1, u2);

  // unknowns x_g for g != e, where b(g) = exp(2 pi i x_g / m)
  std::vector<int> col(n, -1);
  int ncols = 0;
  for (int x = 0; x < n; ++x)
    if (x != e) col[x] = ncols++;

  IntMatrix a;
  std::vector<std::int64_t> rhs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto k1 = u1(x, y).exponent_mod(m);
      auto k2 = u2(x, y).exponent_mod(m);
      if (!k1 || !k2)
        throw Error("NotRootOfUnity", "value at " + pair_str(x, y) + " is not a " +
                                          std::to_string(m) + "-th root of unity");
      std::vector<std::int64_t> row(ncols, 0);
      if (col[x] >= 0) row[col[x]] += 1;
      if (col[y] >= 0) row[col[y]] += u1.twist(x) ? -1 : 1;
      if (col[g.mul(x, y)] >= 0) row[col[g.mul(x, y)]] -= 1;
      a.push_back(std::move(row));
      rhs.push_back(((*k2 - *k1) % m + m) % m);
    }

  std::vector<Phase> b(n);
  if (ncols == 0) {
    for (auto r : rhs)
      if (r != 0) return res;
  } else {
    auto sol = solve_congruences(a, rhs, m);
    if (!sol) return res;
    for (int x = 0; x < n; ++x)
      if (col[x] >= 0) b[x] = Phase((*sol)[col[x]], m);
  }
  res.equivalent = true;
  res.witness = CocycleWitness{std::move(b)};
  return res;
}

}  // namespace fspt
