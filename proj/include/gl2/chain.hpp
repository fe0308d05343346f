#pragma once

// Two-term chain complexes V1 -> V0, chain maps and chain homotopies.

#include <cstddef>
#include <optional>
#include <utility>

#include "gl2/error.hpp"
#include "gl2/linalg.hpp"

namespace gl2 {

/// A differential d : V1 -> V0 stored as a dim0 x dim1 matrix.
struct Fiber2 {
  std::size_t dim1 = 0;
  std::size_t dim0 = 0;
  Matrix d;

  Fiber2() = default;
  Fiber2(std::size_t dim1, std::size_t dim0, Matrix d);
  explicit Fiber2(Matrix d) : Fiber2(d.cols(), d.rows(), d) {}

  /// Euler characteristic dim0 - dim1.
  long euler() const { return static_cast<long>(dim0) - static_cast<long>(dim1); }

  friend bool operator==(const Fiber2&, const Fiber2&) = default;
};

/// (a1, a0) with a0 * src.d == dst.d * a1.
struct ChainMap2 {
  Fiber2 src;
  Fiber2 dst;
  Matrix a1;
  Matrix a0;

  /// Throws InvalidInput on a shape mismatch or when the square does not commute.
  static ChainMap2 make(Fiber2 src, Fiber2 dst, Matrix a1, Matrix a0);
  static ChainMap2 identity(const Fiber2& f);
  static ChainMap2 zero(const Fiber2& src, const Fiber2& dst);

  friend bool operator==(const ChainMap2&, const ChainMap2&) = default;
};

/// R : from => to with R * src.d == from.a1 - to.a1 and dst.d * R == from.a0 - to.a0.
struct Homotopy2 {
  ChainMap2 from;
  ChainMap2 to;
  Matrix R;

  static Homotopy2 make(ChainMap2 from, ChainMap2 to, Matrix R);

  friend bool operator==(const Homotopy2&, const Homotopy2&) = default;
};

struct HomologyDims {
  std::size_t h1 = 0;  // dim ker d
  std::size_t h0 = 0;  // dim coker d

  friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
};

// Shape and equation checks that do not throw.
bool shape_ok(const Fiber2& src, const Fiber2& dst, const Matrix& a1, const Matrix& a0);
bool is_chain_map(const Fiber2& src, const Fiber2& dst, const Matrix& a1, const Matrix& a0);
bool is_homotopy(const ChainMap2& from, const ChainMap2& to, const Matrix& R);

HomologyDims homology(const Fiber2& f);

/// ker(src.d) and ker(a1) intersect trivially.
bool kernel_condition(const ChainMap2& m);
/// im(dst.d) + im(a0) spans V0 of the target.
bool image_condition(const ChainMap2& m);
/// Kernel condition, image condition and equal Euler characteristic.
bool is_quasi_iso(const ChainMap2& m);

struct Cone {
  Matrix d2;  // (a1 ; src.d) : V1x -> V1y + V0x
  Matrix d1;  // (dst.d | -a0) : V1y + V0x -> V0y
};
Cone cone(const ChainMap2& m);
/// d2 injective, d1 surjective and ker d1 == im d2.
bool is_cone_exact(const ChainMap2& m);

/// Basis of ker(d) as columns; see kernel_basis.
Matrix homology1_basis(const Fiber2& f);
/// Standard basis vectors completing im(d), chosen greedily in index order.
Matrix homology0_basis(const Fiber2& f);

struct InducedMaps {
  Matrix h1;  // h1(dst) x h1(src)
  Matrix h0;  // h0(dst) x h0(src)
};
InducedMaps induced_homology_maps(const ChainMap2& m);

/// Some R making a homotopy from => to, if one exists (a linear system).
std::optional<Matrix> solve_homotopy(const ChainMap2& from, const ChainMap2& to);

}  // namespace gl2
