#include <algorithm>

#include "doctest.h"
#include "gl2/lax.hpp"
#include "gl2/random.hpp"
#include "gl2/ruth.hpp"
#include "gl2/twocat.hpp"

using namespace gl2;

namespace {

const GLHandle kGL;

bool has_rule(const Report& r, const std::string& rule) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.rule == rule; });
}

LaxFunctor<TableHandle> identity_functor(const Fin2Cat& c) {
  LaxFunctor<TableHandle> F{c, {}, {}, {}, {}};
  for (int x = 0; x < int(c.num_objects()); ++x) F.on_objects.push_back(x);
  for (int a = 0; a < int(c.num_arrows()); ++a) F.on_arrows.push_back(a);
  for (int k = 0; k < int(c.num_cells()); ++k) F.on_cells.push_back(k);
  for (auto [g, f] : lax_detail::composable_pairs(c)) F.structure.emplace(std::pair{g, f}, c.unit_cell[std::size_t(c.compose(g, f))]);
  return F;
}

// Z2 (as a groupoid) into the delooping of Z3: every arrow goes to the unit,
// the structure cell at (1, 1) is any element.
LaxFunctor<TableHandle> cocycle_functor(const Fin2Cat& src, const Fin2Cat& dst, int value) {
  LaxFunctor<TableHandle> F{src, {0}, {0, 0}, {0, 0}, {}};
  for (auto [g, f] : lax_detail::composable_pairs(src)) F.structure.emplace(std::pair{g, f}, g == 1 && f == 1 ? value : 0);
  (void)dst;
  return F;
}

}  // namespace

TEST_SUITE("lax") {
  TEST_CASE("identity functors give identity simplicial maps") {
    auto cm = crossed_module_2groupoid(cyclic_group(4), {0, 2});
    TableHandle th(cm.cat);
    auto F = identity_functor(cm.cat);
    CHECK(verify_lax_functor(th, F).empty());
    auto S = lax_to_simplicial(th, F);
    CHECK(verify_simplicial_map(th, S, 3).empty());
    for (const auto& s : enumerate_nerve(th, 3)) CHECK(map_simplex(S, s) == s);
    CHECK(simplicial_to_lax(th, S, 3) == F);
  }

  TEST_CASE("normalized cocycles into a delooping") {
    Fin2Cat src = from_groupoid(one_object_groupoid(cyclic_group(2)));
    auto z3 = delooping(cyclic_group(3));
    TableHandle th(z3.cat);
    for (int v = 0; v < 3; ++v) {
      auto F = cocycle_functor(src, z3.cat, v);
      REQUIRE(verify_lax_functor(th, F).empty());
      auto S = lax_to_simplicial(th, F);
      CHECK(verify_simplicial_map(th, S).empty());
      CHECK(simplicial_to_lax(th, S) == F);
    }
    // A structure cell at a unit pair breaks normality.
    auto bad = cocycle_functor(src, z3.cat, 1);
    bad.structure.at({0, 1}) = 2;
    CHECK(has_rule(verify_lax_functor(th, bad), "normality"));
  }

  TEST_CASE("corrupted level-2 data is not simplicial") {
    Fin2Cat src = from_groupoid(one_object_groupoid(cyclic_group(2)));
    auto z3 = delooping(cyclic_group(3));
    TableHandle th(z3.cat);
    auto S = lax_to_simplicial(th, cocycle_functor(src, z3.cat, 1));
    // The degenerate triangle (id, 1, unit) must go to a unit.
    S.level2.at({0, 1, 1}) = 2;
    CHECK_FALSE(verify_simplicial_map(th, S).empty());
    CHECK_THROWS_AS(simplicial_to_lax(th, S), NotSimplicial);
  }

  TEST_CASE("RUTH-derived pseudo-functors are simplicial maps up to level 4") {
    Rng rng(51);
    for (int t = 0; t < 3; ++t) {
      Ruth2 r = random_ruth(rng, pair_groupoid(3), 2);
      auto p = ruth_to_pseudofunctor(r);
      auto S = lax_to_simplicial(kGL, p.F);
      CHECK(verify_simplicial_map(kGL, S, 4).empty());
      CHECK(simplicial_to_lax(kGL, S, 3) == p.F);
    }
  }

  TEST_CASE("a perturbed structure cell fails coherence in GL") {
    Rng rng(52);
    Ruth2 r = random_ruth(rng, translation_groupoid(cyclic_group(3)), 2);
    auto p = ruth_to_pseudofunctor(r);
    const auto& c = p.F.source;
    for (auto [g, f] : lax_detail::composable_pairs(c)) {
      if (c.unit_arrow[std::size_t(c.arrow_src[std::size_t(g)])] == g) continue;
      if (c.unit_arrow[std::size_t(c.arrow_src[std::size_t(f)])] == f) continue;
      auto q = p;
      auto& cell = q.F.structure.at({g, f});
      Matrix bump(cell.R.rows(), cell.R.cols());
      if (bump.rows() == 0 || bump.cols() == 0) continue;
      bump(0, 0) = 1;
      cell.R += bump;
      CHECK(has_rule(verify_lax_functor(kGL, q.F), "coherence of the structure cells"));
      break;
    }
  }

  TEST_CASE("transformations and homotopies") {
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
      Ruth2 r = random_ruth(rng, t % 2 ? pair_groupoid(3) : translation_groupoid(cyclic_group(3)), 2);
      auto m = random_transport(rng, r);
      auto e = morphism_to_lax_equivalence(m);
      REQUIRE(verify_lax_transformation(kGL, e.src.F, e.dst.F, e.T).empty());

      auto D = lax_transformation_to_homotopy(kGL, e.src.F, e.T);
      CHECK(verify_homotopy_squares(kGL, e.src.F, e.dst.F, D).empty());
      CHECK(homotopy_to_lax_transformation(kGL, e.src.F, e.dst.F, D) == e.T);

      auto D2 = random_homotopy_data(rng, e.src.F, e.T);
      CHECK(verify_homotopy_squares(kGL, e.src.F, e.dst.F, D2).empty());
      CHECK(homotopy_to_lax_transformation(kGL, e.src.F, e.dst.F, D2) == e.T);
    }
  }

  TEST_CASE("the identity homotopy is the identity transformation") {
    Rng rng(54);
    Ruth2 r = random_ruth(rng, pair_groupoid(2), 2);
    auto e = morphism_to_lax_equivalence(identity_morphism(r));
    for (std::size_t x = 0; x < r.g.num_objects(); ++x) CHECK(e.T.on_objects[x] == GLArrow::identity(r.object(int(x))));
    for (std::size_t a = 0; a < r.g.num_arrows(); ++a) CHECK(e.T.on_arrows[a] == GL2Cell::unit(compose(e.T.on_objects[std::size_t(r.g.tgt[a])], r.arrow(int(a)))));
    auto D = lax_transformation_to_homotopy(kGL, e.src.F, e.T);
    for (const auto& c : D.lower) CHECK(c.R.is_zero());
    for (const auto& c : D.upper) CHECK(c.R.is_zero());
  }
}
