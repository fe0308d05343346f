#include "doctest.h"
#include "gl2/chain.hpp"
#include "gl2/random.hpp"
#include "oracles.hpp"

using namespace gl2;

namespace {

// Cone exactness from minor ranks of the hand-assembled cone.
bool cone_exact_oracle(const ChainMap2& m) {
  const std::size_t n1x = m.src.dim1, n0x = m.src.dim0, n1y = m.dst.dim1, n0y = m.dst.dim0;
  const std::size_t mid = n1y + n0x;
  Matrix d2(mid, n1x), d1(n0y, mid);
  for (std::size_t j = 0; j < n1x; ++j) {
    for (std::size_t i = 0; i < n1y; ++i) d2(i, j) = m.a1(i, j);
    for (std::size_t i = 0; i < n0x; ++i) d2(n1y + i, j) = m.src.d(i, j);
  }
  for (std::size_t i = 0; i < n0y; ++i) {
    for (std::size_t j = 0; j < n1y; ++j) d1(i, j) = m.dst.d(i, j);
    for (std::size_t j = 0; j < n0x; ++j) d1(i, n1y + j) = -m.a0(i, j);
  }
  const std::size_t r2 = oracle::minor_rank(d2), r1 = oracle::minor_rank(d1);
  return r2 == n1x && r1 == n0y && r1 + r2 == mid;
}

}  // namespace

TEST_SUITE("chain") {
  TEST_CASE("homology dimensions") {
    CHECK(homology(Fiber2(1, 1, Matrix{{1}})) == HomologyDims{0, 0});
    CHECK(homology(Fiber2(1, 1, Matrix{{0}})) == HomologyDims{1, 1});
    CHECK(homology(Fiber2(2, 1, Matrix{{1, 0}})) == HomologyDims{1, 0});
    CHECK(homology(Fiber2(0, 2, Matrix(2, 0))) == HomologyDims{0, 2});
  }

  TEST_CASE("quasi-isomorphism examples") {
    Fiber2 zero(1, 1, Matrix{{0}});
    CHECK_FALSE(is_quasi_iso(ChainMap2::zero(zero, zero)));
    CHECK(is_quasi_iso(ChainMap2::identity(zero)));
    Fiber2 acyclic(1, 1, Matrix{{1}});
    CHECK(is_quasi_iso(ChainMap2::make(acyclic, acyclic, Matrix{{2}}, Matrix{{2}})));
    CHECK(is_quasi_iso(ChainMap2::zero(acyclic, acyclic)));
    // Different Euler characteristic: 0 -> R versus R -> R^2 with d = (1,0)^T.
    Fiber2 a(0, 1, Matrix(1, 0)), b(1, 2, Matrix{{1}, {0}});
    CHECK(is_quasi_iso(ChainMap2::make(a, b, Matrix(1, 0), Matrix{{0}, {1}})));
  }

  TEST_CASE("checked constructors reject bad data") {
    Fiber2 f(1, 1, Matrix{{1}});
    CHECK_THROWS_AS(ChainMap2::make(f, f, Matrix{{1}}, Matrix{{2}}), InvalidInput);
    CHECK_THROWS_AS(ChainMap2::make(f, f, Matrix{{1, 0}}, Matrix{{1}}), InvalidInput);
    auto id = ChainMap2::identity(f);
    auto zero = ChainMap2::zero(f, f);
    CHECK_NOTHROW(Homotopy2::make(id, zero, Matrix{{1}}));
    CHECK_THROWS_AS(Homotopy2::make(id, zero, Matrix{{2}}), InvalidInput);
    CHECK_THROWS_AS(Fiber2(2, 1, Matrix{{1}}), InvalidInput);
  }

  TEST_CASE("cone of the identity") {
    Fiber2 f(1, 1, Matrix{{1}});
    Cone c = cone(ChainMap2::identity(f));
    CHECK(c.d2 == Matrix{{1}, {1}});
    CHECK(c.d1 == Matrix{{1, -1}});
    CHECK(is_cone_exact(ChainMap2::identity(f)));

    Fiber2 z(1, 1, Matrix{{0}});
    Cone cz = cone(ChainMap2::zero(z, z));
    CHECK(cz.d2 == Matrix{{0}, {0}});
    CHECK(cz.d1 == Matrix{{0, 0}});
    CHECK_FALSE(is_cone_exact(ChainMap2::zero(z, z)));
  }

  TEST_CASE("induced maps on homology") {
    Fiber2 z(1, 1, Matrix{{0}});
    auto id = induced_homology_maps(ChainMap2::identity(z));
    CHECK(id.h1 == Matrix::identity(1));
    CHECK(id.h0 == Matrix::identity(1));
    auto zero = induced_homology_maps(ChainMap2::zero(z, z));
    CHECK(zero.h1 == Matrix{{0}});
    CHECK(zero.h0 == Matrix{{0}});
    auto three = induced_homology_maps(ChainMap2::make(z, z, Matrix{{3}}, Matrix{{-1}}));
    CHECK(three.h1 == Matrix{{3}});
    CHECK(three.h0 == Matrix{{-1}});
  }

  TEST_CASE("random chain maps: three characterizations agree with the cone oracle") {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
      Fiber2 x = random_fiber(rng, rng.uniform(0, 3), rng.uniform(0, 3), 0);
      x = random_fiber(rng, x.dim1, x.dim0, rng.uniform(0, std::min(x.dim1, x.dim0)));
      Fiber2 y = random_fiber(rng, rng.uniform(0, 3), rng.uniform(0, 3), 0);
      y = random_fiber(rng, y.dim1, y.dim0, rng.uniform(0, std::min(y.dim1, y.dim0)));
      ChainMap2 m = random_chain_map(rng, x, y);
      REQUIRE(is_chain_map(x, y, m.a1, m.a0));
      CHECK(oracle::product(m.a0, x.d) == oracle::product(y.d, m.a1));

      const bool q = is_quasi_iso(m);
      const auto hx = homology(x), hy = homology(y);
      auto ind = induced_homology_maps(m);
      const bool homology_iso = hx == hy && oracle::minor_rank(ind.h1) == hx.h1 && oracle::minor_rank(ind.h0) == hx.h0;
      CHECK(q == homology_iso);
      CHECK(q == is_cone_exact(m));
      CHECK(q == cone_exact_oracle(m));
      if (q) CHECK(x.euler() == y.euler());
    }
  }

  TEST_CASE("solve_homotopy finds homotopies between homotopic maps") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
      Fiber2 x = random_fiber(rng, rng.uniform(0, 3), rng.uniform(0, 3), 0);
      Fiber2 y = random_fiber(rng, rng.uniform(0, 3), rng.uniform(0, 3), 0);
      x = random_fiber(rng, x.dim1, x.dim0, rng.uniform(0, std::min(x.dim1, x.dim0)));
      y = random_fiber(rng, y.dim1, y.dim0, rng.uniform(0, std::min(y.dim1, y.dim0)));
      ChainMap2 f = random_chain_map(rng, x, y);
      Matrix R = random_matrix(rng, y.dim1, x.dim0);
      ChainMap2 g = ChainMap2::make(x, y, f.a1 - R * x.d, f.a0 - y.d * R);
      auto found = solve_homotopy(f, g);
      REQUIRE(found);
      CHECK(is_homotopy(f, g, *found));
    }
  }
}
