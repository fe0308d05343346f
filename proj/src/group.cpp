#include "gl2/group.hpp"

#include <algorithm>
#include <map>

#include "gl2/error.hpp"

namespace gl2 {

bool FiniteMonoid::is_commutative() const {
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(int(a), int(b)) != mul(int(b), int(a))) return false;
  return true;
}

bool FiniteMonoid::is_valid() const {
  if (order == 0 || table.size() != order * order) return false;
  for (int v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= order) return false;
  for (std::size_t a = 0; a < order; ++a)
    if (mul(0, int(a)) != int(a) || mul(int(a), 0) != int(a)) return false;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (mul(mul(int(a), int(b)), int(c)) != mul(int(a), mul(int(b), int(c)))) return false;
  return true;
}

int FiniteGroup::inverse(int a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (mul(a, int(b)) == 0) return int(b);
  throw InvalidInput(name + ": element " + std::to_string(a) + " has no inverse");
}

bool FiniteGroup::is_valid_group() const {
  if (!is_valid()) return false;
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order && !found; ++b) found = mul(int(a), int(b)) == 0 && mul(int(b), int(a)) == 0;
    if (!found) return false;
  }
  return true;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  FiniteGroup g;
  g.name = "Z" + std::to_string(n);
  g.order = n;
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    g.element_names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = int((a + b) % n);
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.table.resize(g.order * g.order);
  auto idx = [&](std::size_t x, std::size_t y) { return x * b.order + y; };
  for (std::size_t x = 0; x < a.order; ++x)
    for (std::size_t y = 0; y < b.order; ++y) g.element_names.push_back("(" + a.element_names[x] + "," + b.element_names[y] + ")");
  for (std::size_t x1 = 0; x1 < a.order; ++x1)
    for (std::size_t y1 = 0; y1 < b.order; ++y1)
      for (std::size_t x2 = 0; x2 < a.order; ++x2)
        for (std::size_t y2 = 0; y2 < b.order; ++y2)
          g.table[idx(x1, y1) * g.order + idx(x2, y2)] =
              int(idx(std::size_t(a.mul(int(x1), int(x2))), std::size_t(b.mul(int(y1), int(y2)))));
  return g;
}

FiniteGroup permutation_group(std::string name, const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw InvalidInput("permutation_group: no generators");
  const std::size_t degree = generators.front().size();
  std::vector<int> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = int(i);
  // (p * q)(i) = p(q(i))
  auto product = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[std::size_t(q[i])];
    return r;
  };
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& gen : generators) {
      auto next = product(gen, elements[k]);
      if (index.emplace(next, int(elements.size())).second) elements.push_back(next);
    }
  FiniteGroup g;
  g.name = std::move(name);
  g.order = elements.size();
  g.table.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a) {
    std::string n;
    for (int v : elements[a]) n += std::to_string(v);
    g.element_names.push_back(n);
    for (std::size_t b = 0; b < g.order; ++b) g.table[a * g.order + b] = index.at(product(elements[a], elements[b]));
  }
  return g;
}

FiniteGroup symmetric3() { return permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup dihedral4() { return permutation_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}); }

FiniteGroup quaternion8() {
  // Elements s*u with s in {+1,-1}, u in {1,i,j,k}; index = 4*(s<0) + u.
  static const int unit_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_table[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  FiniteGroup g;
  g.name = "Q8";
  g.order = 8;
  g.table.resize(64);
  for (int a = 0; a < 8; ++a) {
    g.element_names.push_back(std::string(a >= 4 ? "-" : "") + names[a % 4]);
    for (int b = 0; b < 8; ++b) {
      int sign = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) * sign_table[a % 4][b % 4];
      g.table[std::size_t(a * 8 + b)] = (sign < 0 ? 4 : 0) + unit_table[a % 4][b % 4];
    }
  }
  return g;
}

std::vector<FiniteGroup> groups_up_to_order8() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(cyclic_group(n));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  out.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
  out.push_back(symmetric3());
  out.push_back(dihedral4());
  out.push_back(quaternion8());
  return out;
}

FiniteGroup group_by_name(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  if (name == "Z2xZ2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "Z2xZ4") return direct_product(cyclic_group(2), cyclic_group(4));
  if (name == "Z2xZ2xZ2") return direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  if (name.size() > 1 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 64) return cyclic_group(n);
  }
  throw InvalidInput("unknown group \"" + name + "\"");
}

FiniteMonoid boolean_monoid() {
  FiniteMonoid m;
  m.name = "({0,1},*)";
  m.order = 2;
  m.element_names = {"1", "0"};
  m.table = {0, 1, 1, 1};
  return m;
}

}  // namespace gl2
