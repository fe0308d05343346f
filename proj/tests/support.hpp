#pragma once

// Shared fixtures for the unit and acceptance tests.

#include "gl2/gl.hpp"
#include "gl2/linalg.hpp"
#include "gl2/nerve.hpp"

namespace support {

/// A nonzero cycle Z : V0(src) -> V1(dst) with Z d_src = 0 and d_dst Z = 0, or
/// an empty optional when homology vanishes on either side. Adding Z to a
/// cell keeps its endpoints and changes every equation it enters.
inline std::optional<gl2::Matrix> central_shift(const gl2::GLObject& src, const gl2::GLObject& dst) {
  gl2::Matrix k1 = gl2::kernel_basis(dst.fiber.d);
  gl2::Matrix c0 = gl2::kernel_basis(src.fiber.d.transpose());
  if (k1.cols() == 0 || c0.cols() == 0) return std::nullopt;
  return k1.column(0) * c0.column(0).transpose();
}

inline gl2::GL2Cell shifted(const gl2::GL2Cell& c, const gl2::Matrix& z) {
  return gl2::GL2Cell::make(c.from, c.to, c.R + z);
}

/// Perturbs triangle `key` of a GL simplex by a central shift; returns false
/// when the endpoints carry no homology.
inline bool perturb_triangle(gl2::Simplex<gl2::GLHandle>& s, const gl2::TriangleKey& key) {
  auto& c = s.triangles.at(key);
  auto z = central_shift(c.from.src, c.from.dst);
  if (!z) return false;
  c = shifted(c, *z);
  return true;
}

}  // namespace support
