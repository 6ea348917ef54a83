#include "fspt/group.hpp"

#include <string>

#include "fspt/error.hpp"

namespace fspt {
namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup validate_group(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("MalformedTable", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error("MalformedTable", "table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("MalformedTable", "entry " + std::to_string(x) + " out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("NotAssociative", "fails at " + triple(a, b, c));

  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[a][x] == x && table[x][a] == x;
    if (ok) e = a;
  }
  if (e < 0) throw Error("NoIdentity", "no two-sided identity");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error("NoInverse", "element " + std::to_string(a));
  }
  FiniteGroup g;
  g.n = n;
  g.table = std::move(table);
  g.identity = e;
  g.inverse = std::move(inverse);
  return g;
}

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate_group(std::move(t));
}

// (a, b) is encoded as a * |B| + b, so cyclic_group(2) x cyclic_group(2)
// lists (0,0),(0,1),(1,0),(1,1).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.n * b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.n, y / b.n) * b.n + b.mul(x % b.n, y % b.n);
  return validate_group(std::move(t));
}

// r^i s^j encoded as i + n*j, with s r s = r^{-1}
FiniteGroup dihedral_group(int n) {
  const int N = 2 * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const int i1 = x % n, j1 = x / n, i2 = y % n, j2 = y / n;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
      const int i = ((i1 + (j1 ? -i2 : i2)) % n + n) % n;
      t[x][y] = i + n * ((j1 + j2) % 2);
    }
  return validate_group(std::move(t));
}

// Q8 = {+-1, +-i, +-j, +-k}; index = 2*unit + sign, unit in {1,i,j,k}
FiniteGroup quaternion_group() {
  // unit products: mult[u][v] = (sign, unit)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + neg[u][v]) % 2;
      t[x][y] = 2 * unit[u][v] + s;
    }
  return validate_group(std::move(t));
}

std::vector<FiniteGroup> small_groups() {
  const FiniteGroup z2 = cyclic_group(2);
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 8; ++n) out.push_back(cyclic_group(n));
  out.push_back(direct_product(z2, z2));
  out.push_back(dihedral_group(3));
  out.push_back(direct_product(cyclic_group(4), z2));
  out.push_back(direct_product(direct_product(z2, z2), z2));
  out.push_back(dihedral_group(4));
  out.push_back(quaternion_group());
  return out;
}

bool Z2Hom::is_trivial() const {
  for (int v : values)
    if (v) return false;
  return true;
}

Z2Hom validate_hom_z2(const FiniteGroup& g, std::vector<int> values) {
  if (static_cast<int>(values.size()) != g.n)
    throw Error("DimensionMismatch", "homomorphism has " + std::to_string(values.size()) +
                                         " values for a group of order " + std::to_string(g.n));
  for (int v : values)
    if (v != 0 && v != 1) throw Error("NotHomomorphism", "values must be 0 or 1");
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (values[g.mul(a, b)] != (values[a] + values[b]) % 2)
        throw Error("NotHomomorphism",
                    "fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return Z2Hom{std::move(values)};
}

Z2Hom trivial_hom(const FiniteGroup& g) { return Z2Hom{std::vector<int>(g.n, 0)}; }

Z2Hom hom_sum(const Z2Hom& a, const Z2Hom& b) {
  Z2Hom r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = (a.values[i] + b.values[i]) % 2;
  return r;
}

std::vector<Z2Hom> all_z2_homs(const FiniteGroup& g) {
  std::vector<Z2Hom> out;
  const int n = g.n;
  for (long mask = 0; mask < (1L << n); ++mask) {
    if (mask & (1L << g.identity)) continue;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = v[g.mul(a, b)] == (v[a] + v[b]) % 2;
    if (ok) out.push_back(Z2Hom{std::move(v)});
  }
  return out;
}

}  // namespace fspt
