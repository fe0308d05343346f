#include "gl2/twocat.hpp"

#include <algorithm>

namespace gl2 {

namespace {

template <class V>
int index_of_name(const V& names, const std::string& name, const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InvalidInput(std::string("2-category has no ") + what + " \"" + name + "\"");
  return int(it - names.begin());
}

}  // namespace

std::vector<int> Fin2Cat::hom(int x, int y) const {
  std::vector<int> out;
  for (std::size_t a = 0; a < num_arrows(); ++a)
    if (arrow_src[a] == x && arrow_tgt[a] == y) out.push_back(int(a));
  return out;
}

std::vector<int> Fin2Cat::cells_between(int a, int b) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < num_cells(); ++c)
    if (cell_from[c] == a && cell_to[c] == b) out.push_back(int(c));
  return out;
}

std::optional<int> Fin2Cat::find_inverse(int c) const {
  const int a = cell_from[std::size_t(c)], b = cell_to[std::size_t(c)];
  for (int d : cells_between(b, a))
    if (vcompose(d, c) == unit_cell[std::size_t(a)] && vcompose(c, d) == unit_cell[std::size_t(b)]) return d;
  return std::nullopt;
}

int Fin2Cat::object_index(const std::string& name) const { return index_of_name(objects, name, "object"); }
int Fin2Cat::arrow_index(const std::string& name) const { return index_of_name(arrows, name, "arrow"); }
int Fin2Cat::cell_index(const std::string& name) const { return index_of_name(cells, name, "2-cell"); }

Report verify_2category(const Fin2Cat& c) {
  Report r;
  const std::size_t no = c.num_objects(), na = c.num_arrows(), nc = c.num_cells();
  if (c.arrow_src.size() != na || c.arrow_tgt.size() != na || c.cell_from.size() != nc || c.cell_to.size() != nc ||
      c.unit_arrow.size() != no || c.unit_cell.size() != na || c.arrow_comp.size() != na * na ||
      c.cell_hcomp.size() != nc * nc || c.cell_vcomp.size() != nc * nc) {
    r.push_back({"table shape", "2-category", "table sizes disagree with the object, arrow and cell counts"});
    return r;
  }
  auto ok = [](int v, std::size_t n) { return v >= 0 && std::size_t(v) < n; };
  for (std::size_t a = 0; a < na; ++a)
    if (!ok(c.arrow_src[a], no) || !ok(c.arrow_tgt[a], no) || !ok(c.unit_cell[a], nc))
      r.push_back({"table range", c.arrows[a], "endpoint or unit cell out of range"});
  for (std::size_t k = 0; k < nc; ++k)
    if (!ok(c.cell_from[k], na) || !ok(c.cell_to[k], na)) r.push_back({"table range", c.cells[k], "endpoint out of range"});
  for (std::size_t x = 0; x < no; ++x)
    if (!ok(c.unit_arrow[x], na)) r.push_back({"table range", c.objects[x], "unit arrow out of range"});
  for (int v : c.arrow_comp)
    if (v != -1 && !ok(v, na)) {
      r.push_back({"table range", "arrow composition", "entry out of range"});
      break;
    }
  for (const auto* t : {&c.cell_hcomp, &c.cell_vcomp})
    for (int v : *t)
      if (v != -1 && !ok(v, nc)) {
        r.push_back({"table range", "cell composition", "entry out of range"});
        break;
      }
  if (!r.empty()) return r;

  auto A = [&](int a) { return c.arrows[std::size_t(a)]; };
  auto C = [&](int k) { return c.cells[std::size_t(k)]; };
  auto src = [&](int a) { return c.arrow_src[std::size_t(a)]; };
  auto tgt = [&](int a) { return c.arrow_tgt[std::size_t(a)]; };
  auto from = [&](int k) { return c.cell_from[std::size_t(k)]; };
  auto to = [&](int k) { return c.cell_to[std::size_t(k)]; };
  auto ucell = [&](int a) { return c.unit_cell[std::size_t(a)]; };
  auto uarr = [&](int x) { return c.unit_arrow[std::size_t(x)]; };

  // Endpoints of units and of every composite.
  for (std::size_t x = 0; x < no; ++x)
    if (src(uarr(int(x))) != int(x) || tgt(uarr(int(x))) != int(x))
      r.push_back({"endpoint compatibility", c.objects[x], "unit arrow is not an endomorphism"});
  for (std::size_t a = 0; a < na; ++a)
    if (from(ucell(int(a))) != int(a) || to(ucell(int(a))) != int(a))
      r.push_back({"endpoint compatibility", c.arrows[a], "unit cell is not an endomorphism"});
  for (int g = 0; g < int(na); ++g)
    for (int f = 0; f < int(na); ++f) {
      const int gf = c.compose(g, f);
      const bool composable = src(g) == tgt(f);
      if (composable != (gf != -1))
        r.push_back({"endpoint compatibility", tuple_string({A(g), A(f)}), "arrow composite defined off its domain"});
      else if (composable && (src(gf) != src(f) || tgt(gf) != tgt(g)))
        r.push_back({"endpoint compatibility", tuple_string({A(g), A(f)}), "arrow composite has wrong endpoints"});
    }
  for (int s = 0; s < int(nc); ++s)
    for (int q = 0; q < int(nc); ++q) {
      const int v = c.vcompose(s, q);
      const bool vdef = to(q) == from(s);
      if (vdef != (v != -1))
        r.push_back({"endpoint compatibility", tuple_string({C(s), C(q)}), "vertical composite defined off its domain"});
      else if (vdef && (from(v) != from(q) || to(v) != to(s)))
        r.push_back({"endpoint compatibility", tuple_string({C(s), C(q)}), "vertical composite has wrong endpoints"});
      const int h = c.hcompose(s, q);
      const bool hdef = src(from(s)) == tgt(from(q));
      if (hdef != (h != -1))
        r.push_back({"endpoint compatibility", tuple_string({C(s), C(q)}), "horizontal composite defined off its domain"});
      else if (hdef && (from(h) != c.compose(from(s), from(q)) || to(h) != c.compose(to(s), to(q))))
        r.push_back({"endpoint compatibility", tuple_string({C(s), C(q)}), "horizontal composite has wrong endpoints"});
    }
  if (!r.empty()) return r;

  // Arrow level.
  for (int f = 0; f < int(na); ++f)
    if (c.compose(uarr(tgt(f)), f) != f || c.compose(f, uarr(src(f))) != f)
      r.push_back({"unit law of composition", A(f), ""});
  for (int h = 0; h < int(na); ++h)
    for (int g = 0; g < int(na); ++g) {
      if (src(h) != tgt(g)) continue;
      for (int f = 0; f < int(na); ++f)
        if (src(g) == tgt(f) && c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          r.push_back({"associativity of composition", tuple_string({A(h), A(g), A(f)}), ""});
    }

  // Vertical structure.
  for (int k = 0; k < int(nc); ++k)
    if (c.vcompose(ucell(to(k)), k) != k || c.vcompose(k, ucell(from(k))) != k)
      r.push_back({"vertical unit law", C(k), ""});
  std::vector<std::pair<int, int>> vpairs;  // (s, q) with s . q defined
  for (int s = 0; s < int(nc); ++s)
    for (int q = 0; q < int(nc); ++q)
      if (to(q) == from(s)) vpairs.emplace_back(s, q);
  for (auto [s, q] : vpairs)
    for (int t = 0; t < int(nc); ++t)
      if (from(t) == to(s) && c.vcompose(c.vcompose(t, s), q) != c.vcompose(t, c.vcompose(s, q)))
        r.push_back({"vertical associativity", tuple_string({C(t), C(s), C(q)}), ""});

  // Horizontal structure.
  for (int k = 0; k < int(nc); ++k) {
    const int x = src(from(k)), y = tgt(from(k));
    if (c.hcompose(ucell(uarr(y)), k) != k || c.hcompose(k, ucell(uarr(x))) != k)
      r.push_back({"horizontal unit law", C(k), ""});
  }
  for (int g = 0; g < int(na); ++g)
    for (int f = 0; f < int(na); ++f)
      if (src(g) == tgt(f) && c.hcompose(ucell(g), ucell(f)) != ucell(c.compose(g, f)))
        r.push_back({"units preserved by composition", tuple_string({A(g), A(f)}), ""});
  for (int t = 0; t < int(nc); ++t)
    for (int s = 0; s < int(nc); ++s) {
      if (src(from(t)) != tgt(from(s))) continue;
      for (int q = 0; q < int(nc); ++q)
        if (src(from(s)) == tgt(from(q)) && c.hcompose(c.hcompose(t, s), q) != c.hcompose(t, c.hcompose(s, q)))
          r.push_back({"horizontal associativity", tuple_string({C(t), C(s), C(q)}), ""});
    }

  // (s' . s) o (r' . r) == (s' o r') . (s o r)
  for (auto [s2, s1] : vpairs)
    for (auto [r2, r1] : vpairs) {
      if (src(from(s1)) != tgt(from(r1))) continue;
      const int lhs = c.hcompose(c.vcompose(s2, s1), c.vcompose(r2, r1));
      const int rhs = c.vcompose(c.hcompose(s2, r2), c.hcompose(s1, r1));
      if (lhs != rhs) r.push_back({"interchange law", tuple_string({C(s2), C(s1), C(r2), C(r1)}), ""});
    }
  return r;
}

Fin2Groupoid Fin2Groupoid::from_category(Fin2Cat c) {
  Fin2Groupoid g{std::move(c), {}};
  for (std::size_t k = 0; k < g.cat.num_cells(); ++k) g.inverse_cell.push_back(g.cat.find_inverse(int(k)).value_or(-1));
  return g;
}

std::optional<QuasiInverseWitness> find_quasi_inverse(const Fin2Cat& c, int f) {
  const int x = c.arrow_src[std::size_t(f)], y = c.arrow_tgt[std::size_t(f)];
  const int ux = c.unit_arrow[std::size_t(x)], uy = c.unit_arrow[std::size_t(y)];
  for (int g : c.hom(y, x)) {
    const auto eta = c.cells_between(ux, c.compose(g, f));
    const auto eps = c.cells_between(uy, c.compose(f, g));
    if (!eta.empty() && !eps.empty()) return QuasiInverseWitness{f, g, eta.front(), eps.front()};
  }
  return std::nullopt;
}

GroupoidReport verify_2groupoid(const Fin2Groupoid& g) {
  GroupoidReport out;
  out.violations = verify_2category(g.cat);
  if (!out.violations.empty()) return out;
  const Fin2Cat& c = g.cat;
  if (g.inverse_cell.size() != c.num_cells()) {
    out.violations.push_back({"table shape", "inverse cells", "one entry per 2-cell is required"});
    return out;
  }
  for (std::size_t k = 0; k < c.num_cells(); ++k) {
    const int d = g.inverse_cell[k];
    const int a = c.cell_from[k], b = c.cell_to[k];
    if (d < 0 || std::size_t(d) >= c.num_cells()) {
      out.violations.push_back({"invertibility of 2-cells", c.cells[k], "no inverse 2-cell"});
      continue;
    }
    if (c.cell_from[std::size_t(d)] != b || c.cell_to[std::size_t(d)] != a ||
        c.vcompose(d, int(k)) != c.unit_cell[std::size_t(a)] || c.vcompose(int(k), d) != c.unit_cell[std::size_t(b)])
      out.violations.push_back({"invertibility of 2-cells", c.cells[k], "listed inverse is not a two-sided inverse"});
  }
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    if (auto w = find_quasi_inverse(c, int(f)))
      out.witnesses.push_back(*w);
    else
      out.violations.push_back({"invertibility of arrows up to 2-cells", c.arrows[f], "no quasi-inverse"});
  }
  return out;
}

Fin2Cat from_groupoid(const FinGroupoid& g) {
  Fin2Cat c;
  c.objects = g.objects;
  c.arrows = g.arrows;
  c.arrow_src = g.src;
  c.arrow_tgt = g.tgt;
  c.unit_arrow = g.unit;
  c.arrow_comp = g.comp;
  const std::size_t n = g.num_arrows();
  for (std::size_t a = 0; a < n; ++a) {
    c.cells.push_back("1_" + g.arrows[a]);
    c.cell_from.push_back(int(a));
    c.cell_to.push_back(int(a));
    c.unit_cell.push_back(int(a));
  }
  c.cell_vcomp.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) c.cell_vcomp[a * n + a] = int(a);
  c.cell_hcomp = g.comp;
  return c;
}

Fin2Cat delooping_table(const FiniteMonoid& m) {
  Fin2Cat c;
  c.objects = {"*"};
  c.arrows = {"1"};
  c.arrow_src = {0};
  c.arrow_tgt = {0};
  c.unit_arrow = {0};
  c.arrow_comp = {0};
  c.cells = m.element_names;
  c.cell_from.assign(m.order, 0);
  c.cell_to.assign(m.order, 0);
  c.unit_cell = {0};
  c.cell_hcomp = m.table;
  c.cell_vcomp = m.table;
  return c;
}

Fin2Groupoid delooping(const FiniteGroup& k) {
  if (!k.is_valid_group()) throw InvalidInput(k.name + " is not a group");
  if (!k.is_abelian())
    throw NotAbelian("delooping of " + k.name + ": the group is nonabelian, so the interchange law fails");
  Fin2Groupoid g{delooping_table(k), {}};
  for (std::size_t a = 0; a < k.order; ++a) g.inverse_cell.push_back(k.inverse(int(a)));
  return g;
}

Fin2Groupoid crossed_module_2groupoid(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  const auto& n = normal_subgroup;
  const std::size_t G = g.order, N = n.size();
  std::vector<int> pos(G, -1);
  for (std::size_t i = 0; i < N; ++i) {
    if (n[i] < 0 || std::size_t(n[i]) >= G) throw InvalidInput("subgroup element out of range");
    pos[std::size_t(n[i])] = int(i);
  }
  if (N == 0 || pos[0] != 0) throw InvalidInput("subgroup must list the identity first");
  for (int a : n)
    for (int b : n)
      if (pos[std::size_t(g.mul(a, b))] < 0) throw InvalidInput("subgroup is not closed under multiplication");
  for (std::size_t x = 0; x < G; ++x)
    for (int a : n)
      if (pos[std::size_t(g.mul(g.mul(int(x), a), g.inverse(int(x))))] < 0)
        throw InvalidInput("subgroup is not normal");

  Fin2Cat c;
  c.objects = {"*"};
  c.arrows = g.element_names;
  c.arrow_src.assign(G, 0);
  c.arrow_tgt.assign(G, 0);
  c.unit_arrow = {0};
  c.arrow_comp = g.table;
  auto cell = [&](std::size_t ni, std::size_t x) { return int(ni * G + x); };
  for (std::size_t ni = 0; ni < N; ++ni)
    for (std::size_t x = 0; x < G; ++x) {
      c.cells.push_back("(" + g.element_names[std::size_t(n[ni])] + "," + g.element_names[x] + ")");
      c.cell_from.push_back(int(x));
      c.cell_to.push_back(g.mul(n[ni], int(x)));
    }
  for (std::size_t x = 0; x < G; ++x) c.unit_cell.push_back(cell(0, x));
  const std::size_t C = N * G;
  c.cell_vcomp.assign(C * C, -1);
  c.cell_hcomp.assign(C * C, -1);
  for (std::size_t n2 = 0; n2 < N; ++n2)
    for (std::size_t x2 = 0; x2 < G; ++x2)
      for (std::size_t n1 = 0; n1 < N; ++n1)
        for (std::size_t x1 = 0; x1 < G; ++x1) {
          const std::size_t s = std::size_t(cell(n2, x2)), q = std::size_t(cell(n1, x1));
          if (int(x2) == g.mul(n[n1], int(x1)))
            c.cell_vcomp[s * C + q] = cell(std::size_t(pos[std::size_t(g.mul(n[n2], n[n1]))]), x1);
          const int conj = g.mul(g.mul(int(x2), n[n1]), g.inverse(int(x2)));
          c.cell_hcomp[s * C + q] = cell(std::size_t(pos[std::size_t(g.mul(n[n2], conj))]), std::size_t(g.mul(int(x2), int(x1))));
        }
  Fin2Groupoid out{std::move(c), {}};
  for (std::size_t ni = 0; ni < N; ++ni)
    for (std::size_t x = 0; x < G; ++x) {
      const int inv = g.inverse(n[ni]);
      out.inverse_cell.push_back(cell(std::size_t(pos[std::size_t(inv)]), std::size_t(g.mul(n[ni], int(x)))));
    }
  return out;
}

Fin2Groupoid chaotic_2groupoid(const FiniteMonoid& m) {
  const std::size_t M = m.order;
  Fin2Cat c;
  c.objects = {"*"};
  c.arrows = m.element_names;
  c.arrow_src.assign(M, 0);
  c.arrow_tgt.assign(M, 0);
  c.unit_arrow = {0};
  c.arrow_comp = m.table;
  auto cell = [&](std::size_t a, std::size_t b) { return int(a * M + b); };  // a => b
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = 0; b < M; ++b) {
      c.cells.push_back(m.element_names[a] + "=>" + m.element_names[b]);
      c.cell_from.push_back(int(a));
      c.cell_to.push_back(int(b));
    }
  for (std::size_t a = 0; a < M; ++a) c.unit_cell.push_back(cell(a, a));
  const std::size_t C = M * M;
  c.cell_vcomp.assign(C * C, -1);
  c.cell_hcomp.assign(C * C, -1);
  for (std::size_t a2 = 0; a2 < M; ++a2)
    for (std::size_t b2 = 0; b2 < M; ++b2)
      for (std::size_t a1 = 0; a1 < M; ++a1)
        for (std::size_t b1 = 0; b1 < M; ++b1) {
          const std::size_t s = std::size_t(cell(a2, b2)), q = std::size_t(cell(a1, b1));
          if (b1 == a2) c.cell_vcomp[s * C + q] = cell(a1, b2);
          c.cell_hcomp[s * C + q] =
              cell(std::size_t(m.mul(int(a2), int(a1))), std::size_t(m.mul(int(b2), int(b1))));
        }
  Fin2Groupoid out{std::move(c), {}};
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = 0; b < M; ++b) out.inverse_cell.push_back(cell(b, a));
  return out;
}

RightMultWitness right_mult_equivalence(const Fin2Groupoid& G, int f, int z) {
  const Fin2Cat& c = G.cat;
  if (f < 0 || std::size_t(f) >= c.num_arrows() || z < 0 || std::size_t(z) >= c.num_objects())
    throw InvalidInput("right_mult_equivalence: arrow or object out of range");
  const auto qi = find_quasi_inverse(c, f);
  if (!qi) throw Error("right_mult_equivalence: arrow " + c.arrows[std::size_t(f)] + " has no quasi-inverse");
  RightMultWitness w;
  w.f = f;
  w.g = qi->inverse;
  w.z = z;
  w.eta = qi->eta;
  w.eps = qi->eps;
  const int x = c.arrow_src[std::size_t(f)], y = c.arrow_tgt[std::size_t(f)];
  w.hom_yz = c.hom(y, z);
  w.hom_xz = c.hom(x, z);
  for (int a : w.hom_yz) w.rf_arrows.push_back(c.compose(a, f));
  for (int b : w.hom_xz) w.rg_arrows.push_back(c.compose(b, w.g));
  w.rf_cells.assign(c.num_cells(), -1);
  w.rg_cells.assign(c.num_cells(), -1);
  auto in = [](const std::vector<int>& v, int a) { return std::find(v.begin(), v.end(), a) != v.end(); };
  for (std::size_t k = 0; k < c.num_cells(); ++k) {
    if (in(w.hom_yz, c.cell_from[k])) w.rf_cells[k] = c.whisker_right(int(k), f);
    if (in(w.hom_xz, c.cell_from[k])) w.rg_cells[k] = c.whisker_right(int(k), w.g);
  }
  for (int b : w.hom_xz) w.unit_components.push_back(c.whisker_left(b, w.eta));
  for (int a : w.hom_yz) w.counit_components.push_back(c.whisker_left(a, w.eps));

  // Enumerated verification.
  auto fail = [&](const std::string& why) { throw Error("right_mult_equivalence witness fails: " + why); };
  auto check_functor = [&](const std::vector<int>& hom, const std::vector<int>& on_cells, int by, const char* name) {
    for (std::size_t k = 0; k < c.num_cells(); ++k) {
      if (on_cells[k] < 0) continue;
      const int img = on_cells[k];
      if (c.cell_from[std::size_t(img)] != c.compose(c.cell_from[k], by) ||
          c.cell_to[std::size_t(img)] != c.compose(c.cell_to[k], by))
        fail(std::string(name) + " does not respect endpoints");
      for (std::size_t q = 0; q < c.num_cells(); ++q)
        if (on_cells[q] >= 0 && c.cell_to[q] == c.cell_from[k] &&
            on_cells[std::size_t(c.vcompose(int(k), int(q)))] != c.vcompose(img, on_cells[q]))
          fail(std::string(name) + " does not preserve vertical composition");
    }
    for (int a : hom)
      if (on_cells[std::size_t(c.unit_cell[std::size_t(a)])] != c.unit_cell[std::size_t(c.compose(a, by))])
        fail(std::string(name) + " does not preserve units");
  };
  check_functor(w.hom_yz, w.rf_cells, f, "R_f");
  check_functor(w.hom_xz, w.rg_cells, w.g, "R_g");
  auto check_natural = [&](const std::vector<int>& hom, const std::vector<int>& comps, int by1, int by2,
                           const char* name) {
    for (std::size_t i = 0; i < hom.size(); ++i) {
      const int k = comps[i];
      if (c.cell_from[std::size_t(k)] != hom[i] ||
          c.cell_to[std::size_t(k)] != c.compose(c.compose(hom[i], by1), by2))
        fail(std::string(name) + " component has wrong endpoints");
      if (!c.find_inverse(k)) fail(std::string(name) + " component is not invertible");
      for (std::size_t j = 0; j < hom.size(); ++j)
        for (int r : c.cells_between(hom[i], hom[j])) {
          const int moved = c.whisker_right(c.whisker_right(r, by1), by2);
          if (c.vcompose(moved, k) != c.vcompose(comps[j], r)) fail(std::string(name) + " is not natural");
        }
    }
  };
  check_natural(w.hom_xz, w.unit_components, w.g, f, "unit");
  check_natural(w.hom_yz, w.counit_components, f, w.g, "counit");
  return w;
}

TableHandle::TableHandle(const Fin2Cat& c) : c_(&c) {
  for (std::size_t k = 0; k < c.num_cells(); ++k) inverse_.push_back(c.find_inverse(int(k)).value_or(-1));
}

int TableHandle::checked(int v, const char* what) {
  if (v < 0) throw InvalidInput(std::string(what) + " is undefined");
  return v;
}

std::optional<int> TableHandle::inverse(int c) const {
  const int d = inverse_[std::size_t(c)];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<std::pair<int, int>> TableHandle::fill_outer_first(int alpha, int gamma) const {
  for (int beta : c_->hom(target(alpha), target(gamma))) {
    const auto cs = c_->cells_between(gamma, c_->compose(beta, alpha));
    if (!cs.empty()) return std::pair{beta, cs.front()};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> TableHandle::fill_outer_last(int gamma, int beta) const {
  for (int alpha : c_->hom(source(gamma), source(beta))) {
    const auto cs = c_->cells_between(gamma, c_->compose(beta, alpha));
    if (!cs.empty()) return std::pair{alpha, cs.front()};
  }
  return std::nullopt;
}

std::optional<int> TableHandle::factor_right(int A, int B, int f, int theta) const {
  for (int k : c_->cells_between(A, B))
    if (c_->whisker_right(k, f) == theta) return k;
  return std::nullopt;
}

std::optional<int> TableHandle::factor_left(int g, int A, int B, int theta) const {
  for (int k : c_->cells_between(A, B))
    if (c_->whisker_left(g, k) == theta) return k;
  return std::nullopt;
}

std::vector<int> TableHandle::objects() const {
  std::vector<int> out(c_->num_objects());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = int(i);
  return out;
}

}  // namespace gl2
