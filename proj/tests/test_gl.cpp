#include "doctest.h"
#include "gl2/gl.hpp"
#include "gl2/random.hpp"

using namespace gl2;

namespace {

GLObject scalar_object(const std::string& p, const Rational& d) { return GLObject{p, Fiber2(1, 1, Matrix{{d}})}; }

GLArrow scalar_arrow(const GLObject& x, const GLObject& y, const Rational& a1, const Rational& a0) {
  return GLArrow::make(x, y, Matrix{{a1}}, Matrix{{a0}});
}

struct Triple {
  PresentedFiber px, py, pz;
  GLObject x, y, z;
};

Triple random_triple(Rng& rng) {
  FiberShape shape{static_cast<std::size_t>(rng.uniform(0, 1)), static_cast<std::size_t>(rng.uniform(0, 1)), 3};
  Triple t;
  t.px = random_presented_fiber(rng, shape);
  t.py = random_presented_fiber(rng, shape);
  t.pz = random_presented_fiber(rng, shape);
  t.x = GLObject{"x", t.px.fiber};
  t.y = GLObject{"y", t.py.fiber};
  t.z = GLObject{"z", t.pz.fiber};
  return t;
}

}  // namespace

TEST_SUITE("gl") {
  TEST_CASE("scalar composition and units") {
    GLObject x = scalar_object("x", 0);
    GLArrow two = scalar_arrow(x, x, 2, 2), three = scalar_arrow(x, x, 3, 3);
    GLArrow six = compose(three, two);
    CHECK(six.a1 == Matrix{{6}});
    CHECK(six.a0 == Matrix{{6}});
    CHECK(compose(GLArrow::identity(x), two) == two);
    CHECK(compose(two, GLArrow::identity(x)) == two);
    CHECK(two.is_strict());
  }

  TEST_CASE("vertical composition, inverse and whiskering") {
    GLObject x = scalar_object("x", 1);
    GLArrow id = GLArrow::identity(x);
    GLArrow zero = scalar_arrow(x, x, 0, 0);
    GL2Cell r = GL2Cell::make(id, zero, Matrix{{1}});
    GL2Cell back = invert(r);
    CHECK(back.R == Matrix{{-1}});
    CHECK(vcompose(back, r) == GL2Cell::unit(id));

    GLArrow five = scalar_arrow(x, x, 5, 5);
    GL2Cell c = GL2Cell::make(five, zero, Matrix{{5}});
    CHECK(invert(c).R == Matrix{{-5}});

    GLArrow two = scalar_arrow(x, x, 2, 2);
    GL2Cell three = GL2Cell::make(scalar_arrow(x, x, 3, 3), zero, Matrix{{3}});
    CHECK(whisker_left(two, three).R == Matrix{{6}});
    CHECK(whisker_right(three, two).R == Matrix{{6}});
    CHECK_THROWS_AS(GL2Cell::make(five, zero, Matrix{{1}}), InvalidInput);
  }

  TEST_CASE("checked arrows") {
    GLObject z = scalar_object("x", 0);
    CHECK_THROWS_AS(scalar_arrow(z, z, 0, 0), NotQuasiIso);
    GLObject a = scalar_object("a", 1);
    CHECK_THROWS_AS(scalar_arrow(a, a, 1, 2), InvalidInput);
    CHECK(arrow_defect(GLArrow{z, z, Matrix{{0}}, Matrix{{0}}}).has_value());
    CHECK_FALSE(arrow_defect(GLArrow::identity(z)).has_value());
    CHECK_FALSE(scalar_arrow(a, a, 0, 0).is_strict());
  }

  TEST_CASE("quasi-inverse of a scalar") {
    GLObject x = scalar_object("x", 1);
    auto q = quasi_inverse(scalar_arrow(x, x, 2, 2));
    CHECK(q.inverse.a1 == Matrix{{Rational(1, 2)}});
    CHECK(q.inverse.a0 == Matrix{{Rational(1, 2)}});
    CHECK(q.eta.R.is_zero());
    CHECK(q.eps.R.is_zero());
    auto qi = quasi_inverse(GLArrow::identity(x));
    CHECK(qi.inverse == GLArrow::identity(x));
  }

  TEST_CASE("horn fillers on identities") {
    GLObject x = scalar_object("x", 0);
    GLArrow id = GLArrow::identity(x);
    auto f0 = fill_horn20(id, id);
    CHECK(homotopic(f0.arrow, id).has_value());
    CHECK(f0.cell.from == id);
    CHECK(f0.cell.to == compose(f0.arrow, id));
    auto f2 = fill_horn22(id, id);
    CHECK(homotopic(f2.arrow, id).has_value());
    CHECK(f2.cell.to == compose(id, f2.arrow));
  }

  TEST_CASE("random quasi-inverses and horn fillers") {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
      Triple tr = random_triple(rng);
      GLArrow f = random_gl_arrow(rng, "x", tr.px, "y", tr.py);
      auto q = quasi_inverse(f);
      CHECK_FALSE(cell_defect(q.eta).has_value());
      CHECK_FALSE(cell_defect(q.eps).has_value());
      CHECK(q.eta.to == compose(q.inverse, f));
      CHECK(q.eps.to == compose(f, q.inverse));

      GLArrow gamma = random_gl_arrow(rng, "x", tr.px, "z", tr.pz);
      auto h0 = fill_horn20(f, gamma);
      CHECK_FALSE(cell_defect(h0.cell).has_value());
      CHECK(h0.cell.from == gamma);
      CHECK(h0.cell.to == compose(h0.arrow, f));

      GLArrow beta = random_gl_arrow(rng, "y", tr.py, "z", tr.pz);
      auto h2 = fill_horn22(gamma, beta);
      CHECK_FALSE(cell_defect(h2.cell).has_value());
      CHECK(h2.cell.from == gamma);
      CHECK(h2.cell.to == compose(beta, h2.arrow));
    }
  }

  TEST_CASE("interchange and the bracketing of horizontal composition") {
    Rng rng(32);
    for (int t = 0; t < 60; ++t) {
      Triple tr = random_triple(rng);
      GLArrow f = random_gl_arrow(rng, "x", tr.px, "y", tr.py);
      GLArrow g = random_gl_arrow(rng, "y", tr.py, "z", tr.pz);
      GL2Cell r1 = random_cell_from(rng, f), r2 = random_cell_from(rng, r1.to);
      GL2Cell s1 = random_cell_from(rng, g), s2 = random_cell_from(rng, s1.to);
      CHECK(hcompose(vcompose(s2, s1), vcompose(r2, r1)) == vcompose(hcompose(s2, r2), hcompose(s1, r1)));
      // s * r == (s f') . (g r) == (g' r) . (s f)
      CHECK(hcompose(s1, r1) == vcompose(whisker_right(s1, r1.to), whisker_left(s1.from, r1)));
      CHECK(hcompose(s1, r1) == vcompose(whisker_left(s1.to, r1), whisker_right(s1, r1.from)));
    }
  }

  TEST_CASE("precomposition and postcomposition factor cells uniquely") {
    Rng rng(33);
    for (int t = 0; t < 40; ++t) {
      Triple tr = random_triple(rng);
      GLArrow f = random_gl_arrow(rng, "x", tr.px, "y", tr.py);
      GLArrow A = random_gl_arrow(rng, "y", tr.py, "z", tr.pz);
      GL2Cell c = random_cell_from(rng, A);
      GL2Cell theta = whisker_right(c, f);
      auto back = factor_right(c.from, c.to, f, theta);
      REQUIRE(back);
      CHECK(whisker_right(*back, f) == theta);

      GLArrow g = random_gl_arrow(rng, "y", tr.py, "z", tr.pz);
      GLArrow B = random_gl_arrow(rng, "x", tr.px, "y", tr.py);
      GL2Cell d = random_cell_from(rng, B);
      GL2Cell phi = whisker_left(g, d);
      auto back2 = factor_left(g, d.from, d.to, phi);
      REQUIRE(back2);
      CHECK(whisker_left(g, *back2) == phi);
    }
  }
}
