#pragma once

// The general linear 2-groupoid of a graded bundle V = V1 + V0 over a finite
// base: objects are differentials on fibers, arrows are quasi-isomorphisms,
// 2-cells are chain homotopies. Horizontal composition is composition of
// maps, vertical composition adds homotopies.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/chain.hpp"

namespace gl2 {

struct GLObject {
  std::string point;
  Fiber2 fiber;

  friend bool operator==(const GLObject&, const GLObject&) = default;
};

/// Finite base with the graded dimensions (dim1, dim0) of every fiber.
class GradedBundle {
 public:
  GradedBundle() = default;
  GradedBundle(std::vector<std::string> points, std::vector<std::pair<std::size_t, std::size_t>> dims);

  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t index_of(const std::string& point) const;
  bool contains(const std::string& point) const;
  std::pair<std::size_t, std::size_t> dims(std::size_t i) const { return dims_.at(i); }
  std::pair<std::size_t, std::size_t> dims(const std::string& point) const { return dims_.at(index_of(point)); }

  /// The object of GL(V) at `point` with differential d; dimensions are checked.
  GLObject object(const std::string& point, Matrix d) const;

  friend bool operator==(const GradedBundle&, const GradedBundle&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<std::pair<std::size_t, std::size_t>> dims_;
};

struct GLArrow {
  GLObject src;
  GLObject dst;
  Matrix a1;
  Matrix a0;

  /// Checked constructor: throws InvalidInput for a non chain map and
  /// NotQuasiIso when the chain map is not a quasi-isomorphism.
  static GLArrow make(GLObject src, GLObject dst, Matrix a1, Matrix a0);
  static GLArrow identity(const GLObject& x);

  ChainMap2 chain_map() const { return ChainMap2{src.fiber, dst.fiber, a1, a0}; }
  /// Invertible in both degrees (the strict sub-2-groupoid).
  bool is_strict() const;

  friend bool operator==(const GLArrow&, const GLArrow&) = default;
};

/// A chain homotopy R : from => to between parallel arrows.
struct GL2Cell {
  GLArrow from;
  GLArrow to;
  Matrix R;

  static GL2Cell make(GLArrow from, GLArrow to, Matrix R);
  static GL2Cell unit(const GLArrow& a);

  Homotopy2 homotopy() const { return Homotopy2{from.chain_map(), to.chain_map(), R}; }

  friend bool operator==(const GL2Cell&, const GL2Cell&) = default;
};

/// Empty when the arrow data is a valid quasi-isomorphism; otherwise the reason.
std::optional<std::string> arrow_defect(const GLArrow& a);
std::optional<std::string> cell_defect(const GL2Cell& c);

GLArrow compose(const GLArrow& g, const GLArrow& f);
GL2Cell vcompose(const GL2Cell& s, const GL2Cell& r);
GL2Cell invert(const GL2Cell& r);
GL2Cell whisker_left(const GLArrow& g, const GL2Cell& r);
GL2Cell whisker_right(const GL2Cell& r, const GLArrow& f);
/// s between arrows y -> z after r between arrows x -> y.
GL2Cell hcompose(const GL2Cell& s, const GL2Cell& r);

/// A homotopy inverse g of f with eta : id_src => g f and eps : id_dst => f g.
struct QuasiInverse {
  GLArrow inverse;
  GL2Cell eta;
  GL2Cell eps;
};
QuasiInverse quasi_inverse(const GLArrow& f);

struct HornFill {
  GLArrow arrow;
  GL2Cell cell;
};
/// Given alpha : x -> y and gamma : x -> z, returns beta : y -> z and gamma => beta alpha.
HornFill fill_horn20(const GLArrow& alpha, const GLArrow& gamma);
/// Given gamma : x -> z and beta : y -> z, returns alpha : x -> y and gamma => beta alpha.
HornFill fill_horn22(const GLArrow& gamma, const GLArrow& beta);

/// Some 2-cell a => b, if the arrows are homotopic.
std::optional<GL2Cell> homotopic(const GLArrow& a, const GLArrow& b);
/// The unique cell c : A => B with c f = theta (precomposition is fully faithful).
std::optional<GL2Cell> factor_right(const GLArrow& A, const GLArrow& B, const GLArrow& f, const GL2Cell& theta);
/// The unique cell c : A => B with g c = theta.
std::optional<GL2Cell> factor_left(const GLArrow& g, const GLArrow& A, const GLArrow& B, const GL2Cell& theta);

/// GL(V) as a 2-category handle for the generic nerve machinery.
struct GLHandle {
  using Object = GLObject;
  using Arrow = GLArrow;
  using Cell = GL2Cell;

  const Object& source(const Arrow& a) const { return a.src; }
  const Object& target(const Arrow& a) const { return a.dst; }
  const Arrow& from(const Cell& c) const { return c.from; }
  const Arrow& to(const Cell& c) const { return c.to; }
  Arrow unit(const Object& x) const { return GLArrow::identity(x); }
  Cell unit_cell(const Arrow& a) const { return GL2Cell::unit(a); }
  Arrow compose(const Arrow& g, const Arrow& f) const { return gl2::compose(g, f); }
  Cell hcompose(const Cell& s, const Cell& r) const { return gl2::hcompose(s, r); }
  Cell vcompose(const Cell& s, const Cell& r) const { return gl2::vcompose(s, r); }
  std::optional<Cell> inverse(const Cell& c) const { return invert(c); }

  std::optional<std::pair<Arrow, Cell>> fill_outer_first(const Arrow& alpha, const Arrow& gamma) const {
    auto f = fill_horn20(alpha, gamma);
    return std::pair{std::move(f.arrow), std::move(f.cell)};
  }
  std::optional<std::pair<Arrow, Cell>> fill_outer_last(const Arrow& gamma, const Arrow& beta) const {
    auto f = fill_horn22(gamma, beta);
    return std::pair{std::move(f.arrow), std::move(f.cell)};
  }
  std::optional<Cell> factor_right(const Arrow& A, const Arrow& B, const Arrow& f, const Cell& theta) const {
    return gl2::factor_right(A, B, f, theta);
  }
  std::optional<Cell> factor_left(const Arrow& g, const Arrow& A, const Arrow& B, const Cell& theta) const {
    return gl2::factor_left(g, A, B, theta);
  }
  // Labels carry their own equations; nerve validation consults these.
  std::optional<std::string> arrow_defect(const Arrow& a) const { return gl2::arrow_defect(a); }
  std::optional<std::string> cell_defect(const Cell& c) const { return gl2::cell_defect(c); }
};

}  // namespace gl2
