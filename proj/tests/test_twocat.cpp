#include <algorithm>

#include "doctest.h"
#include "gl2/twocat.hpp"

using namespace gl2;

namespace {

bool has_rule(const Report& r, const std::string& rule) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.rule == rule; });
}

// Commutativity straight from the table.
bool commutes(const FiniteMonoid& m) {
  for (int a = 0; a < int(m.order); ++a)
    for (int b = 0; b < int(m.order); ++b)
      if (m.table[std::size_t(a) * m.order + std::size_t(b)] != m.table[std::size_t(b) * m.order + std::size_t(a)])
        return false;
  return true;
}

}  // namespace

TEST_SUITE("twocat") {
  TEST_CASE("deloopings of abelian groups are 2-groupoids") {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto g = delooping(cyclic_group(n));
      CHECK(verify_2category(g.cat).empty());
      CHECK(verify_2groupoid(g).ok());
    }
    for (const auto& k : groups_up_to_order8()) {
      if (commutes(k)) {
        CHECK(verify_2groupoid(delooping(k)).ok());
      } else {
        CHECK_THROWS_AS(delooping(k), NotAbelian);
        CHECK(has_rule(verify_2category(delooping_table(k)), "interchange law"));
      }
    }
  }

  TEST_CASE("S3 fails interchange") {
    CHECK_THROWS_AS(delooping(symmetric3()), NotAbelian);
    CHECK(has_rule(verify_2category(delooping_table(symmetric3())), "interchange law"));
  }

  TEST_CASE("boolean monoid: a 2-category that is not a 2-groupoid") {
    Fin2Cat c = delooping_table(boolean_monoid());
    CHECK(verify_2category(c).empty());
    auto report = verify_2groupoid(Fin2Groupoid::from_category(c));
    CHECK_FALSE(report.ok());
    CHECK(has_rule(report.violations, "invertibility of 2-cells"));
  }

  TEST_CASE("corrupted composition is detected") {
    Fin2Cat c = delooping(cyclic_group(3)).cat;
    c.cell_vcomp[1 * 3 + 2] = 1;  // 1 . 2 should be 0
    CHECK(has_rule(verify_2category(c), "vertical associativity"));

    Fin2Cat h = delooping(cyclic_group(3)).cat;
    h.cell_hcomp[1 * 3 + 1] = 0;  // 1 o 1 should be 2
    CHECK_FALSE(verify_2category(h).empty());
  }

  TEST_CASE("crossed module and chaotic 2-groupoids") {
    auto cm = crossed_module_2groupoid(cyclic_group(4), {0, 2});
    CHECK(verify_2groupoid(cm).ok());
    CHECK(cm.cat.num_arrows() == 4);
    CHECK(cm.cat.num_cells() == 8);
    auto ch = chaotic_2groupoid(boolean_monoid());
    CHECK(verify_2groupoid(ch).ok());
    CHECK(ch.cat.num_cells() == 4);
  }

  TEST_CASE("quasi-inverses") {
    auto ch = chaotic_2groupoid(boolean_monoid());
    // The zero element is not invertible in the monoid but is an equivalence here.
    auto w = find_quasi_inverse(ch.cat, 1);
    REQUIRE(w);
    CHECK(ch.cat.cell_from[std::size_t(w->eta)] == ch.cat.unit_arrow[0]);
    CHECK(ch.cat.cell_to[std::size_t(w->eta)] == ch.cat.compose(w->inverse, 1));
    CHECK_FALSE(find_quasi_inverse(delooping_table(boolean_monoid()), 0) == std::nullopt);
  }

  TEST_CASE("precomposition is an equivalence of hom-categories") {
    auto ch = chaotic_2groupoid(boolean_monoid());
    for (int f = 0; f < 2; ++f) {
      auto w = right_mult_equivalence(ch, f, 0);
      CHECK(w.f == f);
      CHECK(w.hom_yz.size() == 2);
      CHECK(w.rf_arrows.size() == w.hom_yz.size());
    }
    auto cm = crossed_module_2groupoid(cyclic_group(4), {0, 2});
    for (int f = 0; f < 4; ++f) CHECK_NOTHROW(right_mult_equivalence(cm, f, 0));
    auto z3 = delooping(cyclic_group(3));
    CHECK_NOTHROW(right_mult_equivalence(z3, 0, 0));
  }

  TEST_CASE("groupoids as 2-categories") {
    Fin2Cat c = from_groupoid(pair_groupoid(3));
    CHECK(verify_2category(c).empty());
    CHECK(c.num_cells() == c.num_arrows());
    CHECK(verify_2groupoid(Fin2Groupoid::from_category(c)).ok());
  }
}
