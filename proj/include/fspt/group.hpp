#pragma once

#include <vector>

namespace fspt {

// Finite group given by its Cayley table; elements are 0..n-1.
struct FiniteGroup {
  int n = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int order() const { return n; }
  bool operator==(const FiniteGroup& o) const { return table == o.table; }
};

// Errors: NotAssociative, NoIdentity, NoInverse, MalformedTable.
FiniteGroup validate_group(std::vector<std::vector<int>> table);

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();
// Every group of order <= 8 up to isomorphism.
std::vector<FiniteGroup> small_groups();

// Homomorphism G -> Z2.
struct Z2Hom {
  std::vector<int> values;

  int operator()(int g) const { return values[g]; }
  bool is_trivial() const;
  bool operator==(const Z2Hom&) const = default;
};

// Errors: NotHomomorphism(g,h), DimensionMismatch.
Z2Hom validate_hom_z2(const FiniteGroup& g, std::vector<int> values);
Z2Hom trivial_hom(const FiniteGroup& g);
Z2Hom hom_sum(const Z2Hom& a, const Z2Hom& b);
// Brute force over {0,1}^n; fine for the small groups in scope.
std::vector<Z2Hom> all_z2_homs(const FiniteGroup& g);

}  // namespace fspt
