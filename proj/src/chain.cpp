#include "gl2/chain.hpp"

#include <string>

namespace gl2 {

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Fiber2::Fiber2(std::size_t dim1_, std::size_t dim0_, Matrix d_) : dim1(dim1_), dim0(dim0_), d(std::move(d_)) {
  if (d.rows() != dim0 || d.cols() != dim1)
    throw InvalidInput("differential is " + dims(d) + ", expected " + std::to_string(dim0) + "x" +
                       std::to_string(dim1));
}

bool shape_ok(const Fiber2& src, const Fiber2& dst, const Matrix& a1, const Matrix& a0) {
  return a1.rows() == dst.dim1 && a1.cols() == src.dim1 && a0.rows() == dst.dim0 && a0.cols() == src.dim0;
}

bool is_chain_map(const Fiber2& src, const Fiber2& dst, const Matrix& a1, const Matrix& a0) {
  return shape_ok(src, dst, a1, a0) && a0 * src.d == dst.d * a1;
}

ChainMap2 ChainMap2::make(Fiber2 src, Fiber2 dst, Matrix a1, Matrix a0) {
  if (!shape_ok(src, dst, a1, a0))
    throw InvalidInput("chain map components " + dims(a1) + ", " + dims(a0) + " do not fit the fibers");
  if (!(a0 * src.d == dst.d * a1)) throw InvalidInput("chain condition a0*d = d'*a1 fails");
  return ChainMap2{std::move(src), std::move(dst), std::move(a1), std::move(a0)};
}

ChainMap2 ChainMap2::identity(const Fiber2& f) {
  return ChainMap2{f, f, Matrix::identity(f.dim1), Matrix::identity(f.dim0)};
}

ChainMap2 ChainMap2::zero(const Fiber2& src, const Fiber2& dst) {
  return ChainMap2{src, dst, Matrix(dst.dim1, src.dim1), Matrix(dst.dim0, src.dim0)};
}

bool is_homotopy(const ChainMap2& from, const ChainMap2& to, const Matrix& R) {
  if (!(from.src == to.src) || !(from.dst == to.dst)) return false;
  if (R.rows() != from.dst.dim1 || R.cols() != from.src.dim0) return false;
  return R * from.src.d == from.a1 - to.a1 && from.dst.d * R == from.a0 - to.a0;
}

Homotopy2 Homotopy2::make(ChainMap2 from, ChainMap2 to, Matrix R) {
  if (!(from.src == to.src) || !(from.dst == to.dst)) throw InvalidInput("homotopy between non-parallel chain maps");
  if (!is_homotopy(from, to, R)) throw InvalidInput("homotopy equations R*d = a1 - a1', d'*R = a0 - a0' fail");
  return Homotopy2{std::move(from), std::move(to), std::move(R)};
}

HomologyDims homology(const Fiber2& f) {
  const std::size_t r = rank(f.d);
  return {f.dim1 - r, f.dim0 - r};
}

bool kernel_condition(const ChainMap2& m) {
  return rank(vstack(m.src.d, m.a1)) == m.src.dim1;
}

bool image_condition(const ChainMap2& m) {
  return rank(hstack(m.dst.d, m.a0)) == m.dst.dim0;
}

bool is_quasi_iso(const ChainMap2& m) {
  return kernel_condition(m) && image_condition(m) && m.src.euler() == m.dst.euler();
}

Cone cone(const ChainMap2& m) {
  return {vstack(m.a1, m.src.d), hstack(m.dst.d, -m.a0)};
}

bool is_cone_exact(const ChainMap2& m) {
  const Cone c = cone(m);
  const std::size_t r2 = rank(c.d2), r1 = rank(c.d1);
  const std::size_t middle = m.dst.dim1 + m.src.dim0;
  return r2 == m.src.dim1 && r1 == m.dst.dim0 && middle - r1 == r2;
}

Matrix homology1_basis(const Fiber2& f) { return kernel_basis(f.d); }

Matrix homology0_basis(const Fiber2& f) {
  Matrix span = f.d;
  std::size_t r = rank(span);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < f.dim0 && r < f.dim0; ++i) {
    Matrix e(f.dim0, 1);
    e(i, 0) = 1;
    Matrix candidate = hstack(span, e);
    const std::size_t rc = rank(candidate);
    if (rc > r) {
      span = std::move(candidate);
      r = rc;
      chosen.push_back(i);
    }
  }
  Matrix basis(f.dim0, chosen.size());
  for (std::size_t j = 0; j < chosen.size(); ++j) basis(chosen[j], j) = 1;
  return basis;
}

InducedMaps induced_homology_maps(const ChainMap2& m) {
  const Matrix kx = homology1_basis(m.src), ky = homology1_basis(m.dst);
  // a1 maps cycles to cycles; ky has independent columns so coordinates are unique.
  auto h1 = solve(ky, m.a1 * kx);
  if (!h1) throw InvalidInput("induced_homology_maps: a1 does not preserve cycles");

  const Matrix ex = homology0_basis(m.src), ey = homology0_basis(m.dst);
  // a0*e = d'*u + ey*c; the c part is well defined modulo im(d').
  const Matrix image = m.a0 * ex;
  auto uc = solve(hstack(m.dst.d, ey), image);
  if (!uc) throw InvalidInput("induced_homology_maps: cokernel basis does not span");
  Matrix h0 = uc->block(m.dst.dim1, ey.cols(), 0, ex.cols());
  return {std::move(*h1), std::move(h0)};
}

std::optional<Matrix> solve_homotopy(const ChainMap2& from, const ChainMap2& to) {
  const std::size_t rows = from.dst.dim1, cols = from.src.dim0;
  // vec(R d) = (d^T kron I) vec R, vec(d' R) = (I kron d') vec R.
  const Matrix lhs = vstack(kron(from.src.d.transpose(), Matrix::identity(rows)),
                            kron(Matrix::identity(cols), from.dst.d));
  const Matrix rhs = vstack(vec(from.a1 - to.a1), vec(from.a0 - to.a0));
  auto x = solve(lhs, rhs);
  if (!x) return std::nullopt;
  return unvec(*x, rows, cols);
}

}  // namespace gl2
