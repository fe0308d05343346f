#include "gl2/gl.hpp"

#include <algorithm>

namespace gl2 {

GradedBundle::GradedBundle(std::vector<std::string> points, std::vector<std::pair<std::size_t, std::size_t>> dims)
    : points_(std::move(points)), dims_(std::move(dims)) {
  if (points_.size() != dims_.size()) throw InvalidInput("bundle: one dimension pair per point is required");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j]) throw InvalidInput("bundle: duplicate point \"" + points_[i] + "\"");
}

std::size_t GradedBundle::index_of(const std::string& point) const {
  auto it = std::find(points_.begin(), points_.end(), point);
  if (it == points_.end()) throw InvalidInput("bundle has no point \"" + point + "\"");
  return static_cast<std::size_t>(it - points_.begin());
}

bool GradedBundle::contains(const std::string& point) const {
  return std::find(points_.begin(), points_.end(), point) != points_.end();
}

GLObject GradedBundle::object(const std::string& point, Matrix d) const {
  auto [d1, d0] = dims(point);
  return GLObject{point, Fiber2(d1, d0, std::move(d))};
}

std::optional<std::string> arrow_defect(const GLArrow& a) {
  if (!shape_ok(a.src.fiber, a.dst.fiber, a.a1, a.a0)) return "arrow components do not fit the fibers";
  if (!(a.a0 * a.src.fiber.d == a.dst.fiber.d * a.a1)) return "chain condition a0*d = d'*a1 fails";
  const ChainMap2 m = a.chain_map();
  if (!kernel_condition(m)) return "kernel condition ker d + ker a1 = 0 fails";
  if (!image_condition(m)) return "image condition im d' + im a0 = V0 fails";
  if (m.src.euler() != m.dst.euler()) return "Euler characteristics differ";
  return std::nullopt;
}

std::optional<std::string> cell_defect(const GL2Cell& c) {
  if (!(c.from.src == c.to.src) || !(c.from.dst == c.to.dst)) return "2-cell between non-parallel arrows";
  if (!is_homotopy(c.from.chain_map(), c.to.chain_map(), c.R)) return "homotopy equations fail";
  return std::nullopt;
}

GLArrow GLArrow::make(GLObject src, GLObject dst, Matrix a1, Matrix a0) {
  GLArrow a{std::move(src), std::move(dst), std::move(a1), std::move(a0)};
  if (auto why = arrow_defect(a)) {
    if (is_chain_map(a.src.fiber, a.dst.fiber, a.a1, a.a0)) throw NotQuasiIso("not a quasi-isomorphism " + a.src.point + " -> " + a.dst.point + ": " + *why);
    throw InvalidInput(*why);
  }
  return a;
}

GLArrow GLArrow::identity(const GLObject& x) {
  return GLArrow{x, x, Matrix::identity(x.fiber.dim1), Matrix::identity(x.fiber.dim0)};
}

bool GLArrow::is_strict() const { return is_invertible(a1) && is_invertible(a0); }

GL2Cell GL2Cell::make(GLArrow from, GLArrow to, Matrix R) {
  GL2Cell c{std::move(from), std::move(to), std::move(R)};
  if (auto why = cell_defect(c)) throw InvalidInput(*why);
  return c;
}

GL2Cell GL2Cell::unit(const GLArrow& a) { return GL2Cell{a, a, Matrix(a.dst.fiber.dim1, a.src.fiber.dim0)}; }

GLArrow compose(const GLArrow& g, const GLArrow& f) {
  if (!(f.dst == g.src)) throw InvalidInput("compose: target of f (" + f.dst.point + ") is not the source of g (" +
                                            g.src.point + ")");
  return GLArrow{f.src, g.dst, g.a1 * f.a1, g.a0 * f.a0};
}

GL2Cell vcompose(const GL2Cell& s, const GL2Cell& r) {
  if (!(r.to == s.from)) throw InvalidInput("vcompose: target of r is not the source of s");
  return GL2Cell{r.from, s.to, s.R + r.R};
}

GL2Cell invert(const GL2Cell& r) { return GL2Cell{r.to, r.from, -r.R}; }

GL2Cell whisker_left(const GLArrow& g, const GL2Cell& r) {
  if (!(r.from.dst == g.src)) throw InvalidInput("whisker_left: endpoints do not compose");
  return GL2Cell{compose(g, r.from), compose(g, r.to), g.a1 * r.R};
}

GL2Cell whisker_right(const GL2Cell& r, const GLArrow& f) {
  if (!(f.dst == r.from.src)) throw InvalidInput("whisker_right: endpoints do not compose");
  return GL2Cell{compose(r.from, f), compose(r.to, f), r.R * f.a0};
}

GL2Cell hcompose(const GL2Cell& s, const GL2Cell& r) {
  if (!(r.from.dst == s.from.src)) throw InvalidInput("hcompose: endpoints do not compose");
  return GL2Cell{compose(s.from, r.from), compose(s.to, r.to), s.from.a1 * r.R + s.R * r.to.a0};
}

namespace {

// Splitting of the cone sequence 0 -> V1x -> V1y + V0x -> V0y -> 0 of a
// quasi-isomorphism f : x -> y. The retraction of the first map and the
// complementary section of the second are read off as a homotopy inverse
// `back` : y -> x with contractions id_x => back f and id_y => f back.
struct ConeSplitting {
  Matrix back1, back0;
  Matrix contract_src;  // V0x -> V1x
  Matrix contract_dst;  // V0y -> V1y
};

ConeSplitting split_cone(const GLArrow& f) {
  const std::size_t n1y = f.dst.fiber.dim1, n0x = f.src.fiber.dim0, n1x = f.src.fiber.dim1;
  const Cone c = cone(f.chain_map());
  if (!is_injective(c.d2) || !is_surjective(c.d1)) throw NotQuasiIso("cone of arrow is not split exact");
  const Matrix r = left_inverse(c.d2);  // (back1 | contract_src)
  const Matrix s0 = right_inverse(c.d1);
  // Section complementary to r: r s = 0 and d2 r + s d1 = I.
  const Matrix s = (Matrix::identity(n1y + n0x) - c.d2 * r) * s0;
  ConeSplitting out;
  out.back1 = r.block(0, n1x, 0, n1y);
  out.contract_src = r.block(0, n1x, n1y, n0x);
  out.contract_dst = s.block(0, n1y, 0, s.cols());
  out.back0 = -s.block(n1y, n0x, 0, s.cols());
  return out;
}

}  // namespace

QuasiInverse quasi_inverse(const GLArrow& f) {
  const ConeSplitting sp = split_cone(f);
  GLArrow g{f.dst, f.src, sp.back1, sp.back0};
  GL2Cell eta{GLArrow::identity(f.src), compose(g, f), sp.contract_src};
  GL2Cell eps{GLArrow::identity(f.dst), compose(f, g), sp.contract_dst};
  if (auto why = arrow_defect(g)) throw Error("quasi_inverse produced an invalid arrow: " + *why);
  if (auto why = cell_defect(eta)) throw Error("quasi_inverse produced an invalid unit: " + *why);
  if (auto why = cell_defect(eps)) throw Error("quasi_inverse produced an invalid counit: " + *why);
  return {std::move(g), std::move(eta), std::move(eps)};
}

HornFill fill_horn20(const GLArrow& alpha, const GLArrow& gamma) {
  if (!(alpha.src == gamma.src)) throw InvalidInput("fill_horn20: alpha and gamma must share their source");
  const ConeSplitting sp = split_cone(alpha);
  GLArrow beta{alpha.dst, gamma.dst, gamma.a1 * sp.back1, gamma.a0 * sp.back0};
  GL2Cell r{gamma, compose(beta, alpha), gamma.a1 * sp.contract_src};
  if (auto why = arrow_defect(beta)) throw Error("fill_horn20 produced an invalid arrow: " + *why);
  if (auto why = cell_defect(r)) throw Error("fill_horn20 produced an invalid 2-cell: " + *why);
  return {std::move(beta), std::move(r)};
}

HornFill fill_horn22(const GLArrow& gamma, const GLArrow& beta) {
  if (!(gamma.dst == beta.dst)) throw InvalidInput("fill_horn22: gamma and beta must share their target");
  const ConeSplitting sp = split_cone(beta);
  GLArrow alpha{gamma.src, beta.src, sp.back1 * gamma.a1, sp.back0 * gamma.a0};
  GL2Cell r{gamma, compose(beta, alpha), sp.contract_dst * gamma.a0};
  if (auto why = arrow_defect(alpha)) throw Error("fill_horn22 produced an invalid arrow: " + *why);
  if (auto why = cell_defect(r)) throw Error("fill_horn22 produced an invalid 2-cell: " + *why);
  return {std::move(alpha), std::move(r)};
}

std::optional<GL2Cell> homotopic(const GLArrow& a, const GLArrow& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst)) return std::nullopt;
  auto R = solve_homotopy(a.chain_map(), b.chain_map());
  if (!R) return std::nullopt;
  return GL2Cell{a, b, std::move(*R)};
}

namespace {

// Solves for R : A => B together with one extra linear constraint
// lhs_extra * vec(R) = rhs_extra.
std::optional<GL2Cell> constrained_homotopy(const GLArrow& A, const GLArrow& B, const Matrix& lhs_extra,
                                            const Matrix& rhs_extra) {
  if (!(A.src == B.src) || !(A.dst == B.dst)) return std::nullopt;
  const std::size_t rows = A.dst.fiber.dim1, cols = A.src.fiber.dim0;
  const Matrix lhs = vstack(vstack(kron(A.src.fiber.d.transpose(), Matrix::identity(rows)),
                                   kron(Matrix::identity(cols), A.dst.fiber.d)),
                            lhs_extra);
  const Matrix rhs = vstack(vstack(vec(A.a1 - B.a1), vec(A.a0 - B.a0)), rhs_extra);
  auto x = solve(lhs, rhs);
  if (!x) return std::nullopt;
  return GL2Cell{A, B, unvec(*x, rows, cols)};
}

}  // namespace

std::optional<GL2Cell> factor_right(const GLArrow& A, const GLArrow& B, const GLArrow& f, const GL2Cell& theta) {
  if (!(f.dst == A.src) || !(theta.from == compose(A, f)) || !(theta.to == compose(B, f))) return std::nullopt;
  // vec(R f0) = (f0^T kron I) vec R
  const std::size_t rows = A.dst.fiber.dim1;
  return constrained_homotopy(A, B, kron(f.a0.transpose(), Matrix::identity(rows)), vec(theta.R));
}

std::optional<GL2Cell> factor_left(const GLArrow& g, const GLArrow& A, const GLArrow& B, const GL2Cell& theta) {
  if (!(A.dst == g.src) || !(theta.from == compose(g, A)) || !(theta.to == compose(g, B))) return std::nullopt;
  // vec(g1 R) = (I kron g1) vec R
  const std::size_t cols = A.src.fiber.dim0;
  return constrained_homotopy(A, B, kron(Matrix::identity(cols), g.a1), vec(theta.R));
}

}  // namespace gl2
