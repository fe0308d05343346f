#pragma once

// Normal lax functors from a finite table 2-category into a handle, their
// simplicial counterparts on nerves, lax transformations, and the square
// data of simplicial homotopies.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/nerve.hpp"
#include "gl2/twocat.hpp"

namespace gl2 {

/// phi2 on cells and structure cells phi11(g, f) : phi(g o f) => phi(g) o phi(f).
template <TwoCategoryHandle H>
struct LaxFunctor {
  Fin2Cat source;
  std::vector<typename H::Object> on_objects;
  std::vector<typename H::Arrow> on_arrows;
  std::vector<typename H::Cell> on_cells;
  std::map<std::pair<int, int>, typename H::Cell> structure;  // keyed (g, f)

  friend bool operator==(const LaxFunctor&, const LaxFunctor&) = default;
};

namespace lax_detail {

inline std::string pair_where(const Fin2Cat& c, int g, int f) {
  return "pair " + tuple_string({c.arrows[std::size_t(g)], c.arrows[std::size_t(f)]});
}

inline std::string triple_where(const Fin2Cat& c, int h, int g, int f) {
  return "triple " + tuple_string({c.arrows[std::size_t(h)], c.arrows[std::size_t(g)], c.arrows[std::size_t(f)]});
}

inline std::vector<std::pair<int, int>> composable_pairs(const Fin2Cat& c) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < int(c.num_arrows()); ++g)
    for (int f = 0; f < int(c.num_arrows()); ++f)
      if (c.arrow_src[std::size_t(g)] == c.arrow_tgt[std::size_t(f)]) out.emplace_back(g, f);
  return out;
}

}  // namespace lax_detail

/// Endpoints, normality, functoriality on 2-cells, naturality of the
/// structure cells and their coherence over composable triples.
template <TwoCategoryHandle H>
Report verify_lax_functor(const H& h, const LaxFunctor<H>& F) {
  using namespace lax_detail;
  Report r;
  const Fin2Cat& c = F.source;
  if (F.on_objects.size() != c.num_objects() || F.on_arrows.size() != c.num_arrows() ||
      F.on_cells.size() != c.num_cells()) {
    r.push_back({"functor shape", "lax functor", "one image per object, arrow and 2-cell is required"});
    return r;
  }
  const auto pairs = composable_pairs(c);
  for (auto [g, f] : pairs)
    if (!F.structure.count({g, f})) r.push_back({"functor shape", pair_where(c, g, f), "missing structure cell"});
  if (!r.empty()) return r;

  auto phi = [&](int a) -> const typename H::Arrow& { return F.on_arrows[std::size_t(a)]; };
  auto phi2 = [&](int k) -> const typename H::Cell& { return F.on_cells[std::size_t(k)]; };
  auto st = [&](int g, int f) -> const typename H::Cell& { return F.structure.at({g, f}); };

  for (std::size_t a = 0; a < c.num_arrows(); ++a)
    if (!(h.source(phi(int(a))) == F.on_objects[std::size_t(c.arrow_src[a])]) ||
        !(h.target(phi(int(a))) == F.on_objects[std::size_t(c.arrow_tgt[a])]))
      r.push_back({"endpoint compatibility", "arrow " + c.arrows[a], "image does not join the image objects"});
  for (std::size_t k = 0; k < c.num_cells(); ++k)
    if (!(h.from(phi2(int(k))) == phi(c.cell_from[k])) || !(h.to(phi2(int(k))) == phi(c.cell_to[k])))
      r.push_back({"endpoint compatibility", "2-cell " + c.cells[k], "image does not join the image arrows"});
  for (auto [g, f] : pairs) {
    const auto& s = st(g, f);
    if (!(h.from(s) == phi(c.compose(g, f))) || !(h.to(s) == h.compose(phi(g), phi(f))))
      r.push_back({"endpoint compatibility", pair_where(c, g, f), "structure cell is not phi(g f) => phi(g) phi(f)"});
  }
  if (!r.empty()) return r;

  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!(phi(c.unit_arrow[x]) == h.unit(F.on_objects[x])))
      r.push_back({"normality", "object " + c.objects[x], "unit arrow is not sent to a unit"});
  for (std::size_t a = 0; a < c.num_arrows(); ++a)
    if (!(phi2(c.unit_cell[a]) == h.unit_cell(phi(int(a)))))
      r.push_back({"normality", "arrow " + c.arrows[a], "unit 2-cell is not sent to a unit"});
  for (auto [g, f] : pairs) {
    const bool unital = c.unit_arrow[std::size_t(c.arrow_tgt[std::size_t(g)])] == g ||
                        c.unit_arrow[std::size_t(c.arrow_src[std::size_t(g)])] == f;
    if (unital && !(st(g, f) == h.unit_cell(phi(c.compose(g, f)))))
      r.push_back({"normality", pair_where(c, g, f), "structure cell at a unit is not a unit 2-cell"});
  }
  if (!r.empty()) return r;

  for (int s = 0; s < int(c.num_cells()); ++s)
    for (int q = 0; q < int(c.num_cells()); ++q)
      if (c.cell_to[std::size_t(q)] == c.cell_from[std::size_t(s)] &&
          !(phi2(c.vcompose(s, q)) == h.vcompose(phi2(s), phi2(q))))
        r.push_back({"functoriality on 2-cells", "2-cells " + tuple_string({c.cells[std::size_t(s)], c.cells[std::size_t(q)]}),
                     ""});
  // (phi2(s) o phi2(q)) . phi11(g, f) == phi11(g', f') . phi2(s o q)
  for (int s = 0; s < int(c.num_cells()); ++s)
    for (int q = 0; q < int(c.num_cells()); ++q) {
      const int g = c.cell_from[std::size_t(s)], f = c.cell_from[std::size_t(q)];
      if (c.arrow_src[std::size_t(g)] != c.arrow_tgt[std::size_t(f)]) continue;
      const int g2 = c.cell_to[std::size_t(s)], f2 = c.cell_to[std::size_t(q)];
      const auto lhs = h.vcompose(h.hcompose(phi2(s), phi2(q)), st(g, f));
      const auto rhs = h.vcompose(st(g2, f2), phi2(c.hcompose(s, q)));
      if (!(lhs == rhs))
        r.push_back({"naturality of the structure cells",
                     "2-cells " + tuple_string({c.cells[std::size_t(s)], c.cells[std::size_t(q)]}), ""});
    }
  for (auto [hh, g] : pairs)
    for (int f = 0; f < int(c.num_arrows()); ++f) {
      if (c.arrow_src[std::size_t(g)] != c.arrow_tgt[std::size_t(f)]) continue;
      // (phi(h) o phi11(g, f)) . phi11(h, g f) == (phi11(h, g) o phi(f)) . phi11(h g, f)
      const auto lhs = h.vcompose(whisker_left(h, phi(hh), st(g, f)), st(hh, c.compose(g, f)));
      const auto rhs = h.vcompose(whisker_right(h, st(hh, g), phi(f)), st(c.compose(hh, g), f));
      if (!(lhs == rhs)) r.push_back({"coherence of the structure cells", triple_where(c, hh, g, f), ""});
    }
  // Labels that carry their own equations (GL(V)).
  if constexpr (requires { h.arrow_defect(phi(0)); h.cell_defect(phi2(0)); }) {
    for (std::size_t a = 0; a < c.num_arrows(); ++a)
      if (auto why = h.arrow_defect(phi(int(a)))) r.push_back({"arrow validity", "arrow " + c.arrows[a], *why});
    for (std::size_t k = 0; k < c.num_cells(); ++k)
      if (auto why = h.cell_defect(phi2(int(k)))) r.push_back({"2-cell validity", "2-cell " + c.cells[k], *why});
    for (auto [g, f] : pairs)
      if (auto why = h.cell_defect(st(g, f))) r.push_back({"2-cell validity", pair_where(c, g, f), *why});
  }
  return r;
}

/// Levels 0, 1 and 2 of a simplicial map N(source) -> N(target). A 2-simplex
/// of the source is keyed (f, g, alpha) with alpha : h => g o f.
template <TwoCategoryHandle H>
struct SimplicialMap {
  Fin2Cat source;
  std::vector<typename H::Object> level0;
  std::vector<typename H::Arrow> level1;
  std::map<std::array<int, 3>, typename H::Cell> level2;

  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

/// All 2-simplices (f, g, alpha) of the source nerve.
inline std::vector<std::array<int, 3>> source_triangles(const Fin2Cat& c) {
  std::vector<std::array<int, 3>> out;
  for (auto [g, f] : lax_detail::composable_pairs(c))
    for (std::size_t k = 0; k < c.num_cells(); ++k)
      if (c.cell_to[k] == c.compose(g, f)) out.push_back({f, g, int(k)});
  return out;
}

/// A triangle is sent to phi11(g, f) . phi2(alpha).
template <TwoCategoryHandle H>
SimplicialMap<H> lax_to_simplicial(const H& h, const LaxFunctor<H>& F) {
  if (auto r = verify_lax_functor(h, F); !r.empty()) throw InvalidInput("not a lax functor: " + r.front().message());
  SimplicialMap<H> S{F.source, F.on_objects, F.on_arrows, {}};
  for (const auto& t : source_triangles(F.source))
    S.level2.emplace(t, h.vcompose(F.structure.at({t[1], t[0]}), F.on_cells[std::size_t(t[2])]));
  return S;
}

/// Image of a source simplex (labels of the table nerve) under the map.
template <TwoCategoryHandle H>
Simplex<H> map_simplex(const SimplicialMap<H>& S, const Simplex<TableHandle>& s) {
  Simplex<H> out;
  out.n = s.n;
  for (int v : s.vertices) out.vertices.push_back(S.level0.at(std::size_t(v)));
  for (const auto& [key, a] : s.edges) out.edges.emplace(key, S.level1.at(std::size_t(a)));
  for (const auto& [key, c] : s.triangles) {
    const int f = s.edges.at({key[1], key[2]}), g = s.edges.at({key[0], key[1]});
    auto it = S.level2.find({f, g, c});
    if (it == S.level2.end()) throw NotSimplicial("level-2 map is undefined on a source triangle");
    out.triangles.emplace(key, it->second);
  }
  return out;
}

/// Face and degeneracy compatibility at levels <= 2, and validity of the
/// images of all source simplices at levels 3 .. max_level.
template <TwoCategoryHandle H>
Report verify_simplicial_map(const H& h, const SimplicialMap<H>& S, std::size_t max_level = 4) {
  Report r;
  const Fin2Cat& c = S.source;
  if (S.level0.size() != c.num_objects() || S.level1.size() != c.num_arrows()) {
    r.push_back({"simplicial map shape", "levels 0 and 1", "one image per object and arrow is required"});
    return r;
  }
  for (std::size_t a = 0; a < c.num_arrows(); ++a)
    if (!(h.source(S.level1[a]) == S.level0[std::size_t(c.arrow_src[a])]) ||
        !(h.target(S.level1[a]) == S.level0[std::size_t(c.arrow_tgt[a])]))
      r.push_back({"commutation with faces", "1-simplex " + c.arrows[a], ""});
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!(S.level1[std::size_t(c.unit_arrow[x])] == h.unit(S.level0[x])))
      r.push_back({"commutation with degeneracies", "0-simplex " + c.objects[x], ""});
  const auto tris = source_triangles(c);
  for (const auto& t : tris) {
    const std::string where = "2-simplex " + tuple_string({c.arrows[std::size_t(t[0])], c.arrows[std::size_t(t[1])],
                                                           c.cells[std::size_t(t[2])]});
    auto it = S.level2.find(t);
    if (it == S.level2.end()) {
      r.push_back({"simplicial map shape", where, "missing image"});
      continue;
    }
    const int hh = c.cell_from[std::size_t(t[2])];
    if (!(h.from(it->second) == S.level1[std::size_t(hh)]) ||
        !(h.to(it->second) == h.compose(S.level1[std::size_t(t[1])], S.level1[std::size_t(t[0])])))
      r.push_back({"commutation with faces", where, ""});
  }
  if (S.level2.size() != tris.size()) r.push_back({"simplicial map shape", "level 2", "images of non-simplices"});
  if (!r.empty()) return r;
  for (std::size_t a = 0; a < c.num_arrows(); ++a) {
    const int f = int(a);
    const int ux = c.unit_arrow[std::size_t(c.arrow_src[a])], uy = c.unit_arrow[std::size_t(c.arrow_tgt[a])];
    const auto unit = h.unit_cell(S.level1[a]);
    if (!(S.level2.at({ux, f, c.unit_cell[a]}) == unit) || !(S.level2.at({f, uy, c.unit_cell[a]}) == unit))
      r.push_back({"commutation with degeneracies", "1-simplex " + c.arrows[a], ""});
  }
  if (!r.empty()) return r;
  TableHandle th(c);
  for (std::size_t level = 3; level <= max_level; ++level)
    for (const auto& s : enumerate_nerve(th, level))
      if (auto v = validate_simplex(h, map_simplex(S, s)); !v.empty())
        r.push_back({"image is a simplex", "level " + std::to_string(level), v.front().message()});
  return r;
}

/// phi2(alpha : h => f) is the image of (f, id, alpha); phi11(g, f) is the
/// image of (f, g, unit of g f). Throws NotSimplicial on invalid input.
template <TwoCategoryHandle H>
LaxFunctor<H> simplicial_to_lax(const H& h, const SimplicialMap<H>& S, std::size_t max_level = 4) {
  if (auto r = verify_simplicial_map(h, S, max_level); !r.empty())
    throw NotSimplicial("not a simplicial map: " + r.front().message());
  const Fin2Cat& c = S.source;
  LaxFunctor<H> F{c, S.level0, S.level1, {}, {}};
  for (std::size_t k = 0; k < c.num_cells(); ++k) {
    const int f = c.cell_to[k];
    const int uy = c.unit_arrow[std::size_t(c.arrow_tgt[std::size_t(f)])];
    F.on_cells.push_back(S.level2.at({f, uy, int(k)}));
  }
  for (auto [g, f] : lax_detail::composable_pairs(c))
    F.structure.emplace(std::pair{g, f}, S.level2.at({f, g, c.unit_cell[std::size_t(c.compose(g, f))]}));
  if (auto r = verify_lax_functor(h, F); !r.empty()) throw NotSimplicial("recovered data: " + r.front().message());
  if (!(lax_to_simplicial(h, F) == S)) throw NotSimplicial("level-2 map is not determined by its special triangles");
  return F;
}

/// Components H_x : phi(x) -> psi(x) and H_f : H_y o phi(f) => psi(f) o H_x.
template <TwoCategoryHandle H>
struct LaxTransformation {
  std::vector<typename H::Arrow> on_objects;
  std::vector<typename H::Cell> on_arrows;

  friend bool operator==(const LaxTransformation&, const LaxTransformation&) = default;
};

template <TwoCategoryHandle H>
Report verify_lax_transformation(const H& h, const LaxFunctor<H>& phi, const LaxFunctor<H>& psi,
                                 const LaxTransformation<H>& T) {
  using namespace lax_detail;
  Report r;
  const Fin2Cat& c = phi.source;
  if (!(c == psi.source) || T.on_objects.size() != c.num_objects() || T.on_arrows.size() != c.num_arrows()) {
    r.push_back({"transformation shape", "lax transformation", "sources differ or components are missing"});
    return r;
  }
  auto Hx = [&](int x) -> const typename H::Arrow& { return T.on_objects[std::size_t(x)]; };
  auto Hf = [&](int f) -> const typename H::Cell& { return T.on_arrows[std::size_t(f)]; };
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!(h.source(Hx(int(x))) == phi.on_objects[x]) || !(h.target(Hx(int(x))) == psi.on_objects[x]))
      r.push_back({"component endpoints", "object " + c.objects[x], "H_x is not phi(x) -> psi(x)"});
  if (!r.empty()) return r;
  for (std::size_t a = 0; a < c.num_arrows(); ++a) {
    const int x = c.arrow_src[a], y = c.arrow_tgt[a];
    if (!(h.from(Hf(int(a))) == h.compose(Hx(y), phi.on_arrows[a])) ||
        !(h.to(Hf(int(a))) == h.compose(psi.on_arrows[a], Hx(x))))
      r.push_back({"component endpoints", "arrow " + c.arrows[a], "H_f is not H_y phi(f) => psi(f) H_x"});
  }
  if (!r.empty()) return r;
  if constexpr (requires { h.arrow_defect(Hx(0)); h.cell_defect(Hf(0)); }) {
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      if (auto why = h.arrow_defect(Hx(int(x)))) r.push_back({"arrow validity", "object " + c.objects[x], *why});
    for (std::size_t a = 0; a < c.num_arrows(); ++a)
      if (auto why = h.cell_defect(Hf(int(a)))) r.push_back({"2-cell validity", "arrow " + c.arrows[a], *why});
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!(Hf(c.unit_arrow[x]) == h.unit_cell(Hx(int(x)))))
      r.push_back({"normality of the transformation", "object " + c.objects[x], "H at a unit arrow is not a unit"});
  // (psi2(q) o H_x) . H_f == H_f' . (H_y o phi2(q)) for q : f => f'
  for (std::size_t q = 0; q < c.num_cells(); ++q) {
    const int f = c.cell_from[q], f2 = c.cell_to[q];
    const int x = c.arrow_src[std::size_t(f)], y = c.arrow_tgt[std::size_t(f)];
    const auto lhs = h.vcompose(whisker_right(h, psi.on_cells[q], Hx(x)), Hf(f));
    const auto rhs = h.vcompose(Hf(f2), whisker_left(h, Hx(y), phi.on_cells[q]));
    if (!(lhs == rhs)) r.push_back({"naturality of the transformation", "2-cell " + c.cells[q], ""});
  }
  // Prism over g : y -> z, f : x -> y:
  // (psi(g) o H_f) . (H_g o phi(f)) . (H_z o phi11(g,f)) == (psi11(g,f) o H_x) . H_{g f}
  for (auto [g, f] : composable_pairs(c)) {
    const int x = c.arrow_src[std::size_t(f)], z = c.arrow_tgt[std::size_t(g)];
    const auto lhs = h.vcompose(whisker_left(h, psi.on_arrows[std::size_t(g)], Hf(f)),
                                h.vcompose(whisker_right(h, Hf(g), phi.on_arrows[std::size_t(f)]),
                                           whisker_left(h, Hx(z), phi.structure.at({g, f}))));
    const auto rhs = h.vcompose(whisker_right(h, psi.structure.at({g, f}), Hx(x)), Hf(c.compose(g, f)));
    if (!(lhs == rhs)) r.push_back({"prism equation", pair_where(c, g, f), ""});
  }
  return r;
}

/// The square data of a simplicial homotopy N(C) x D1 -> N(D) over each arrow
/// f : x -> y: a diagonal D_f : phi(x) -> psi(y) with triangles
/// lower_f : D_f => H_y o phi(f) and upper_f : D_f => psi(f) o H_x.
template <TwoCategoryHandle H>
struct HomotopyData {
  std::vector<typename H::Arrow> on_objects;
  std::vector<typename H::Arrow> diagonal;
  std::vector<typename H::Cell> lower;
  std::vector<typename H::Cell> upper;

  friend bool operator==(const HomotopyData&, const HomotopyData&) = default;
};

template <TwoCategoryHandle H>
Report verify_homotopy_squares(const H& h, const LaxFunctor<H>& phi, const LaxFunctor<H>& psi,
                               const HomotopyData<H>& D) {
  Report r;
  const Fin2Cat& c = phi.source;
  const std::size_t na = c.num_arrows();
  if (D.on_objects.size() != c.num_objects() || D.diagonal.size() != na || D.lower.size() != na ||
      D.upper.size() != na) {
    r.push_back({"homotopy shape", "homotopy", "one entry per object or arrow is required"});
    return r;
  }
  for (std::size_t a = 0; a < na; ++a) {
    const int x = c.arrow_src[a], y = c.arrow_tgt[a];
    const auto& Hx = D.on_objects[std::size_t(x)];
    const auto& Hy = D.on_objects[std::size_t(y)];
    if (!(h.from(D.lower[a]) == D.diagonal[a]) || !(h.to(D.lower[a]) == h.compose(Hy, phi.on_arrows[a])))
      r.push_back({"triangle endpoints", "lower triangle over " + c.arrows[a], ""});
    if (!(h.from(D.upper[a]) == D.diagonal[a]) || !(h.to(D.upper[a]) == h.compose(psi.on_arrows[a], Hx)))
      r.push_back({"triangle endpoints", "upper triangle over " + c.arrows[a], ""});
  }
  return r;
}

/// H_f = upper_f . lower_f^-1.
template <TwoCategoryHandle H>
LaxTransformation<H> homotopy_to_lax_transformation(const H& h, const LaxFunctor<H>& phi, const LaxFunctor<H>& psi,
                                                    const HomotopyData<H>& D) {
  if (auto r = verify_homotopy_squares(h, phi, psi, D); !r.empty())
    throw InvalidInput("invalid homotopy data: " + r.front().message());
  LaxTransformation<H> T{D.on_objects, {}};
  for (std::size_t a = 0; a < D.lower.size(); ++a) {
    auto inv = h.inverse(D.lower[a]);
    if (!inv) throw InvalidInput("lower triangle over " + phi.source.arrows[a] + " is not invertible");
    T.on_arrows.push_back(h.vcompose(D.upper[a], *inv));
  }
  return T;
}

/// D_f = H_y o phi(f), lower_f = unit, upper_f = H_f.
template <TwoCategoryHandle H>
HomotopyData<H> lax_transformation_to_homotopy(const H& h, const LaxFunctor<H>& phi, const LaxTransformation<H>& T) {
  const Fin2Cat& c = phi.source;
  HomotopyData<H> D{T.on_objects, {}, {}, T.on_arrows};
  for (std::size_t a = 0; a < c.num_arrows(); ++a) {
    D.diagonal.push_back(h.compose(T.on_objects[std::size_t(c.arrow_tgt[a])], phi.on_arrows[a]));
    D.lower.push_back(h.unit_cell(D.diagonal.back()));
  }
  return D;
}

}  // namespace gl2
