#pragma once

// Finite groups and monoids given by multiplication tables. Element 0 is the
// identity.

#include <cstddef>
#include <string>
#include <vector>

namespace gl2 {

struct FiniteMonoid {
  std::string name;
  std::size_t order = 0;
  std::vector<int> table;  // table[a * order + b] = a * b
  std::vector<std::string> element_names;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + static_cast<std::size_t>(b)]; }
  bool is_commutative() const;
  /// Associativity and two-sided identity 0.
  bool is_valid() const;
};

struct FiniteGroup : FiniteMonoid {
  int inverse(int a) const;
  bool is_abelian() const { return is_commutative(); }
  /// Monoid laws plus inverses.
  bool is_valid_group() const;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Closure of a set of permutations of {0..degree-1}, identity first.
FiniteGroup permutation_group(std::string name, const std::vector<std::vector<int>>& generators);
FiniteGroup symmetric3();
FiniteGroup dihedral4();
FiniteGroup quaternion8();
/// One representative of every isomorphism class of groups of order <= 8.
std::vector<FiniteGroup> groups_up_to_order8();
/// Named constructor: "Z<n>", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "S3", "D4", "Q8".
FiniteGroup group_by_name(const std::string& name);

/// {0, 1} under multiplication (index 0 is the unit 1, index 1 is 0).
FiniteMonoid boolean_monoid();

}  // namespace gl2
