#pragma once

// Finite 2-categories presented by explicit tables. Objects, arrows and
// 2-cells are indices; undefined composites are -1.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/error.hpp"
#include "gl2/group.hpp"
#include "gl2/groupoid.hpp"

namespace gl2 {

struct Fin2Cat {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> arrow_src, arrow_tgt;
  std::vector<std::string> cells;
  std::vector<int> cell_from, cell_to;
  std::vector<int> unit_arrow;  // object -> arrow
  std::vector<int> unit_cell;   // arrow -> cell
  std::vector<int> arrow_comp;  // [g * A + f] = g o f
  std::vector<int> cell_hcomp;  // [s * C + r] = s o r
  std::vector<int> cell_vcomp;  // [s * C + r] = s . r

  std::size_t num_objects() const { return objects.size(); }
  std::size_t num_arrows() const { return arrows.size(); }
  std::size_t num_cells() const { return cells.size(); }

  int compose(int g, int f) const { return arrow_comp[std::size_t(g) * num_arrows() + std::size_t(f)]; }
  int hcompose(int s, int r) const { return cell_hcomp[std::size_t(s) * num_cells() + std::size_t(r)]; }
  int vcompose(int s, int r) const { return cell_vcomp[std::size_t(s) * num_cells() + std::size_t(r)]; }
  /// Horizontal composite with unit cells on the arrow side.
  int whisker_left(int g, int r) const { return hcompose(unit_cell[std::size_t(g)], r); }
  int whisker_right(int s, int f) const { return hcompose(s, unit_cell[std::size_t(f)]); }

  /// Arrows x -> y, in index order.
  std::vector<int> hom(int x, int y) const;
  /// Cells a => b, in index order.
  std::vector<int> cells_between(int a, int b) const;
  /// Some two-sided vertical inverse of c.
  std::optional<int> find_inverse(int c) const;

  int object_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  int cell_index(const std::string& name) const;

  friend bool operator==(const Fin2Cat&, const Fin2Cat&) = default;
};

/// Every violated axiom instance; empty iff `c` is a 2-category.
Report verify_2category(const Fin2Cat& c);

struct Fin2Groupoid {
  Fin2Cat cat;
  std::vector<int> inverse_cell;  // -1 where no inverse exists

  /// Fills inverse_cell by search.
  static Fin2Groupoid from_category(Fin2Cat c);
};

/// A quasi-inverse g of f with cells id => g f and id => f g.
struct QuasiInverseWitness {
  int arrow = -1;
  int inverse = -1;
  int eta = -1;  // unit of src => g o f
  int eps = -1;  // unit of tgt => f o g
};
std::optional<QuasiInverseWitness> find_quasi_inverse(const Fin2Cat& c, int f);

struct GroupoidReport {
  Report violations;
  std::vector<QuasiInverseWitness> witnesses;
  bool ok() const { return violations.empty(); }
};
/// 2-category axioms, inverse-cell laws, and a quasi-inverse for every arrow.
GroupoidReport verify_2groupoid(const Fin2Groupoid& g);

/// The groupoid viewed as a 2-category whose only cells are units.
Fin2Cat from_groupoid(const FinGroupoid& g);
/// One object, one arrow, cells = elements, both compositions the group law.
/// Throws NotAbelian for a nonabelian group.
Fin2Groupoid delooping(const FiniteGroup& k);
/// The same tables without the abelian check (for interchange tests).
Fin2Cat delooping_table(const FiniteMonoid& m);
/// Strict 2-groupoid of the crossed module N -> G for a normal subgroup N:
/// one object, arrows G, cells (n, g) : g => n g.
Fin2Groupoid crossed_module_2groupoid(const FiniteGroup& g, const std::vector<int>& normal_subgroup);
/// Arrows = monoid elements, exactly one cell between any two arrows.
Fin2Groupoid chaotic_2groupoid(const FiniteMonoid& m);

/// Data showing that precomposition R_f : C(y, z) -> C(x, z) with f : x -> y
/// is an equivalence of hom-categories, with quasi-inverse R_g.
struct RightMultWitness {
  int f = -1, g = -1, z = -1;
  int eta = -1, eps = -1;
  std::vector<int> hom_yz, hom_xz;          // object sets of the hom-categories
  std::vector<int> rf_arrows, rg_arrows;    // indexed parallel to hom_yz / hom_xz
  std::vector<int> rf_cells, rg_cells;      // indexed by cell, -1 outside the hom
  std::vector<int> unit_components;         // b in hom_xz: b => b o g o f
  std::vector<int> counit_components;       // a in hom_yz: a => a o f o g
};
/// Throws Error when the enumerated verification of the witness fails.
RightMultWitness right_mult_equivalence(const Fin2Groupoid& g, int f, int z);

/// The 2-category as a handle for the generic nerve code.
class TableHandle {
 public:
  using Object = int;
  using Arrow = int;
  using Cell = int;

  explicit TableHandle(const Fin2Cat& c);

  const Fin2Cat& cat() const { return *c_; }
  Object source(Arrow a) const { return c_->arrow_src[std::size_t(a)]; }
  Object target(Arrow a) const { return c_->arrow_tgt[std::size_t(a)]; }
  Arrow from(Cell c) const { return c_->cell_from[std::size_t(c)]; }
  Arrow to(Cell c) const { return c_->cell_to[std::size_t(c)]; }
  Arrow unit(Object x) const { return c_->unit_arrow[std::size_t(x)]; }
  Cell unit_cell(Arrow a) const { return c_->unit_cell[std::size_t(a)]; }
  Arrow compose(Arrow g, Arrow f) const { return checked(c_->compose(g, f), "arrow composite"); }
  Cell hcompose(Cell s, Cell r) const { return checked(c_->hcompose(s, r), "horizontal composite"); }
  Cell vcompose(Cell s, Cell r) const { return checked(c_->vcompose(s, r), "vertical composite"); }
  std::optional<Cell> inverse(Cell c) const;

  /// Search for beta : y -> z with a cell gamma => beta o alpha.
  std::optional<std::pair<Arrow, Cell>> fill_outer_first(Arrow alpha, Arrow gamma) const;
  /// Search for alpha : x -> y with a cell gamma => beta o alpha.
  std::optional<std::pair<Arrow, Cell>> fill_outer_last(Arrow gamma, Arrow beta) const;
  /// Some cell c : A => B with c o f == theta.
  std::optional<Cell> factor_right(Arrow A, Arrow B, Arrow f, Cell theta) const;
  /// Some cell c : A => B with g o c == theta.
  std::optional<Cell> factor_left(Arrow g, Arrow A, Arrow B, Cell theta) const;

  std::vector<Object> objects() const;
  std::vector<Arrow> arrows_between(Object x, Object y) const { return c_->hom(x, y); }
  std::vector<Cell> cells_between(Arrow a, Arrow b) const { return c_->cells_between(a, b); }

 private:
  static int checked(int v, const char* what);
  const Fin2Cat* c_;
  std::vector<int> inverse_;
};

}  // namespace gl2
