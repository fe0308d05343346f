#include "gl2/random.hpp"

#include <algorithm>
#include <string>

namespace gl2 {

namespace {

// Places b into m with its top-left corner at (r, c).
void put(Matrix& m, const Matrix& b, std::size_t r, std::size_t c) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r + i, c + j) = b(i, j);
}

Matrix shift_degree1(const Matrix& R, const Fiber2& src) { return R * src.d; }
Matrix shift_degree0(const Matrix& R, const Fiber2& dst) { return dst.d * R; }

}  // namespace

Rational Rng::small() {
  Rational q = uniform(-2, 2);
  if (uniform(0, 3) == 0) q /= 2;
  return q;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.small();
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (is_invertible(m)) return m;
  }
}

Fiber2 random_fiber(Rng& rng, std::size_t dim1, std::size_t dim0, std::size_t rank) {
  rank = std::min({rank, dim1, dim0});
  Matrix standard(dim0, dim1);
  for (std::size_t i = 0; i < rank; ++i) standard(i, i) = 1;
  return Fiber2(dim1, dim0, random_invertible(rng, dim0) * standard * random_invertible(rng, dim1));
}

ChainMap2 random_chain_map(Rng& rng, const Fiber2& src, const Fiber2& dst) {
  const std::size_t n1 = dst.dim1 * src.dim1, n0 = dst.dim0 * src.dim0;
  if (n1 + n0 == 0) return ChainMap2::zero(src, dst);
  // Unknowns (vec a1, vec a0); equations vec(a0 d - d' a1) = 0.
  Matrix op(dst.dim0 * src.dim1, n1 + n0);
  if (op.rows() > 0) {
    if (n1 > 0) put(op, -kron(Matrix::identity(src.dim1), dst.d), 0, 0);
    if (n0 > 0) put(op, kron(src.d.transpose(), Matrix::identity(dst.dim0)), 0, n1);
  }
  const Matrix basis = op.rows() > 0 ? kernel_basis(op) : Matrix::identity(n1 + n0);
  Matrix v(n1 + n0, 1);
  for (std::size_t j = 0; j < basis.cols(); ++j) v += basis.column(j) * rng.small();
  return ChainMap2::make(src, dst, unvec(v.block(0, n1, 0, 1), dst.dim1, src.dim1),
                         unvec(v.block(n1, n0, 0, 1), dst.dim0, src.dim0));
}

PresentedFiber random_presented_fiber(Rng& rng, std::size_t h1, std::size_t h0, std::size_t c) {
  PresentedFiber p{h1, h0, c, random_invertible(rng, h1 + c), random_invertible(rng, h0 + c), {}};
  Matrix standard(h0 + c, h1 + c);
  for (std::size_t i = 0; i < c; ++i) standard(h0 + i, h1 + i) = 1;
  p.fiber = Fiber2(h1 + c, h0 + c, p.q0 * standard * inverse(p.q1));
  return p;
}

PresentedFiber random_presented_fiber(Rng& rng, const FiberShape& shape) {
  const std::size_t top = std::max(shape.h1, shape.h0);
  if (top > shape.max_dim) throw InvalidInput("fiber shape: homology exceeds the dimension bound");
  return random_presented_fiber(rng, shape.h1, shape.h0, std::size_t(rng.uniform(0, int(shape.max_dim - top))));
}

GLArrow random_gl_arrow(Rng& rng, const std::string& xp, const PresentedFiber& x, const std::string& yp,
                        const PresentedFiber& y) {
  if (x.h1 != y.h1 || x.h0 != y.h0) throw InvalidInput("random_gl_arrow: homology dimensions differ");
  const std::size_t h1 = x.h1, h0 = x.h0;
  // Standard form: invertible on homology, N on the contractible parts,
  // E : H0 -> C0 and F : C1 -> H1 are free.
  const Matrix N = random_matrix(rng, y.c, x.c);
  Matrix a1(h1 + y.c, h1 + x.c), a0(h0 + y.c, h0 + x.c);
  put(a1, random_invertible(rng, h1), 0, 0);
  put(a1, N, h1, h1);
  put(a1, random_matrix(rng, h1, x.c), 0, h1);
  put(a0, random_invertible(rng, h0), 0, 0);
  put(a0, N, h0, h0);
  put(a0, random_matrix(rng, y.c, h0), h0, 0);
  a1 = y.q1 * a1 * inverse(x.q1);
  a0 = y.q0 * a0 * inverse(x.q0);
  const Matrix R = random_matrix(rng, y.fiber.dim1, x.fiber.dim0);
  a1 += shift_degree1(R, x.fiber);
  a0 += shift_degree0(R, y.fiber);
  return GLArrow::make(GLObject{xp, x.fiber}, GLObject{yp, y.fiber}, std::move(a1), std::move(a0));
}

GL2Cell random_cell_into(Rng& rng, const GLArrow& b) {
  const Matrix R = random_matrix(rng, b.dst.fiber.dim1, b.src.fiber.dim0);
  GLArrow a{b.src, b.dst, b.a1 + shift_degree1(R, b.src.fiber), b.a0 + shift_degree0(R, b.dst.fiber)};
  return GL2Cell::make(std::move(a), b, R);
}

GL2Cell random_cell_from(Rng& rng, const GLArrow& a) {
  const Matrix R = random_matrix(rng, a.dst.fiber.dim1, a.src.fiber.dim0);
  GLArrow b{a.src, a.dst, a.a1 - shift_degree1(R, a.src.fiber), a.a0 - shift_degree0(R, a.dst.fiber)};
  return GL2Cell::make(a, std::move(b), R);
}

Simplex<GLHandle> random_gl_simplex(Rng& rng, std::size_t n, const FiberShape& shape) {
  const GLHandle h;
  std::vector<PresentedFiber> fibers;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) {
    fibers.push_back(random_presented_fiber(rng, shape));
    names.push_back("p" + std::to_string(i));
  }
  Simplex<GLHandle> s;
  s.vertices.push_back(GLObject{names[0], fibers[0].fiber});
  for (std::size_t m = 1; m <= n; ++m) {
    FiltrationStage<GLHandle> stage{m, m - 1, s};
    stage.data.n = m;
    stage.data.vertices.push_back(GLObject{names[m], fibers[m].fiber});
    stage.data.edges.emplace(EdgeKey{int(m), int(m - 1)},
                             random_gl_arrow(rng, names[m - 1], fibers[m - 1], names[m], fibers[m]));
    for (int k = int(m) - 2; k >= 0; --k) {
      const GLArrow target =
          compose(arrow_at(h, stage.data, int(m), k + 1), arrow_at(h, stage.data, k + 1, k));
      stage = reconstruct(h, stage, random_cell_into(rng, target));
    }
    s = std::move(stage.data);
  }
  return s;
}

PseudoRep random_pseudo_rep(Rng& rng, const FinGroupoid& g, std::size_t max_dim) {
  PseudoRep p{g, std::vector<std::size_t>(g.num_objects(), 1), {}};
  for (const auto& comp : components(g)) {
    const std::size_t e = std::size_t(rng.uniform(1, int(max_dim)));
    for (int x : comp) p.dims[std::size_t(x)] = e;
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t ex = p.dims[std::size_t(g.src[a])], ey = p.dims[std::size_t(g.tgt[a])];
    p.rho.push_back(g.is_unit(int(a)) ? Matrix::identity(ex) : random_matrix(rng, ey, ex));
  }
  return p;
}

Ruth2 random_strict_ruth(Rng& rng, const FinGroupoid& g, std::size_t max_dim) {
  std::vector<std::pair<std::size_t, std::size_t>> dims(g.num_objects());
  std::vector<Matrix> A(g.num_objects()), B(g.num_objects()), Binv(g.num_objects()), Ainv(g.num_objects());
  Ruth2 r;
  r.g = g;
  r.d.resize(g.num_objects());
  for (const auto& comp : components(g)) {
    std::size_t d1 = 0, d0 = 0;
    while (d1 + d0 == 0) {
      d1 = std::size_t(rng.uniform(0, int(max_dim)));
      d0 = std::size_t(rng.uniform(0, int(max_dim)));
    }
    const Matrix D = random_matrix(rng, d0, d1);
    for (int x : comp) {
      dims[std::size_t(x)] = {d1, d0};
      A[std::size_t(x)] = random_invertible(rng, d0);
      B[std::size_t(x)] = random_invertible(rng, d1);
      Ainv[std::size_t(x)] = inverse(A[std::size_t(x)]);
      Binv[std::size_t(x)] = inverse(B[std::size_t(x)]);
      r.d[std::size_t(x)] = A[std::size_t(x)] * D * Binv[std::size_t(x)];
    }
  }
  r.v = GradedBundle(g.objects, dims);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t x = std::size_t(g.src[a]), y = std::size_t(g.tgt[a]);
    r.rho1.push_back(B[y] * Binv[x]);
    r.rho0.push_back(A[y] * Ainv[x]);
  }
  for (auto [h, k] : g.composable_pairs()) {
    const std::size_t z1 = dims[std::size_t(g.tgt[std::size_t(h)])].first;
    const std::size_t x0 = dims[std::size_t(g.src[std::size_t(k)])].second;
    r.gamma.emplace(std::pair{h, k}, Matrix::zero(z1, x0));
  }
  return r;
}

RuthMorphism random_transport(Rng& rng, const Ruth2& r) {
  std::vector<Matrix> t1, t0, mu;
  for (std::size_t x = 0; x < r.g.num_objects(); ++x) {
    auto [d1, d0] = r.v.dims(x);
    t1.push_back(random_invertible(rng, d1));
    t0.push_back(random_invertible(rng, d0));
  }
  for (std::size_t a = 0; a < r.g.num_arrows(); ++a) {
    const std::size_t x0 = r.v.dims(std::size_t(r.g.src[a])).second;
    const std::size_t y1 = r.v.dims(std::size_t(r.g.tgt[a])).first;
    mu.push_back(r.g.is_unit(int(a)) ? Matrix::zero(y1, x0) : random_matrix(rng, y1, x0));
  }
  return transport(r, t1, t0, mu);
}

Ruth2 random_ruth(Rng& rng, const FinGroupoid& g, std::size_t max_dim) {
  Ruth2 base = rng.coin() ? random_strict_ruth(rng, g, max_dim) : double_pseudo_rep(random_pseudo_rep(rng, g, max_dim));
  return random_transport(rng, base).dst;
}

RuthMorphism random_doubling_morphism(Rng& rng, const PseudoRep& p, const PseudoRep& q) {
  const FinGroupoid& g = p.g;
  if (!(g == q.g)) throw InvalidInput("random_doubling_morphism: different groupoids");
  RuthMorphism m{double_pseudo_rep(p), double_pseudo_rep(q), {}, {}, {}};
  for (std::size_t x = 0; x < g.num_objects(); ++x) m.theta1.push_back(random_matrix(rng, q.dims[x], p.dims[x]));
  m.theta0 = m.theta1;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t x = std::size_t(g.src[a]), y = std::size_t(g.tgt[a]);
    m.mu.push_back(m.theta1[y] * p.rho[a] - q.rho[a] * m.theta1[x]);
  }
  return m;
}

HomotopyData<GLHandle> random_homotopy_data(Rng& rng, const LaxFunctor<GLHandle>& phi,
                                            const LaxTransformation<GLHandle>& T) {
  const Fin2Cat& c = phi.source;
  HomotopyData<GLHandle> D{T.on_objects, {}, {}, {}};
  for (std::size_t a = 0; a < c.num_arrows(); ++a) {
    const GLArrow& Hy = T.on_objects[std::size_t(c.arrow_tgt[a])];
    GL2Cell lower = random_cell_into(rng, compose(Hy, phi.on_arrows[a]));
    D.diagonal.push_back(lower.from);
    D.upper.push_back(vcompose(T.on_arrows[a], lower));
    D.lower.push_back(std::move(lower));
  }
  return D;
}

}  // namespace gl2
