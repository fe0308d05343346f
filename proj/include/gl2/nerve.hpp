#pragma once

// The nerve of a 2-category, generic over a handle exposing the 2-category
// operations. An n-simplex is stored by its 2-skeleton: vertices u_i, edges
// u_{j,i} : u_i -> u_j (j > i) and triangles u_{k,j,i} : u_{k,i} => u_{k,j} o u_{j,i}.
// Higher data is determined (the nerve is 3-coskeletal) subject to the
// tetrahedron equation
//   (u_{l,k} o u_{k,j,i}) . u_{l,k,i} = (u_{l,k,j} o u_{j,i}) . u_{l,j,i}.

#include <array>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/error.hpp"

namespace gl2 {

template <class H>
concept TwoCategoryHandle = requires(const H& h, const typename H::Object& x, const typename H::Arrow& a,
                                     const typename H::Cell& c) {
  { h.source(a) } -> std::convertible_to<typename H::Object>;
  { h.target(a) } -> std::convertible_to<typename H::Object>;
  { h.from(c) } -> std::convertible_to<typename H::Arrow>;
  { h.to(c) } -> std::convertible_to<typename H::Arrow>;
  { h.unit(x) } -> std::convertible_to<typename H::Arrow>;
  { h.unit_cell(a) } -> std::convertible_to<typename H::Cell>;
  { h.compose(a, a) } -> std::convertible_to<typename H::Arrow>;
  { h.hcompose(c, c) } -> std::convertible_to<typename H::Cell>;
  { h.vcompose(c, c) } -> std::convertible_to<typename H::Cell>;
  { h.inverse(c) } -> std::convertible_to<std::optional<typename H::Cell>>;
  { h.fill_outer_first(a, a) } -> std::convertible_to<std::optional<std::pair<typename H::Arrow, typename H::Cell>>>;
  { h.fill_outer_last(a, a) } -> std::convertible_to<std::optional<std::pair<typename H::Arrow, typename H::Cell>>>;
  { h.factor_right(a, a, a, c) } -> std::convertible_to<std::optional<typename H::Cell>>;
  { h.factor_left(a, a, a, c) } -> std::convertible_to<std::optional<typename H::Cell>>;
};

using EdgeKey = std::array<int, 2>;      // {j, i}, j > i
using TriangleKey = std::array<int, 3>;  // {k, j, i}, k > j > i

inline std::string key_string(const EdgeKey& e) { return tuple_string({std::to_string(e[0]), std::to_string(e[1])}); }
inline std::string key_string(const TriangleKey& t) {
  return tuple_string({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
}

/// Labels of an n-simplex; partial when used for horns and filtration stages.
template <TwoCategoryHandle H>
struct Simplex {
  using Object = typename H::Object;
  using Arrow = typename H::Arrow;
  using Cell = typename H::Cell;

  std::size_t n = 0;
  std::vector<Object> vertices;
  std::map<EdgeKey, Arrow> edges;
  std::map<TriangleKey, Cell> triangles;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// An n-simplex with the data of the k-th face removed.
template <TwoCategoryHandle H>
struct Horn {
  std::size_t n = 0;
  std::size_t k = 0;
  Simplex<H> data;

  friend bool operator==(const Horn&, const Horn&) = default;
};

/// The part of an n-simplex over F_k: edges (j, i) with j < n or i >= k and
/// triangles (c, b, a) with c < n or a >= k.
template <TwoCategoryHandle H>
struct FiltrationStage {
  std::size_t n = 0;
  std::size_t k = 0;
  Simplex<H> data;

  friend bool operator==(const FiltrationStage&, const FiltrationStage&) = default;
};

/// u_{j,i} for j >= i; the unit arrow when j == i.
template <TwoCategoryHandle H>
typename H::Arrow arrow_at(const H& h, const Simplex<H>& s, int j, int i) {
  if (j == i) return h.unit(s.vertices.at(std::size_t(i)));
  auto it = s.edges.find(EdgeKey{j, i});
  if (it == s.edges.end()) throw InvalidInput("simplex has no edge " + key_string(EdgeKey{j, i}));
  return it->second;
}

template <TwoCategoryHandle H>
bool has_arrow(const Simplex<H>& s, int j, int i) {
  return j == i || s.edges.count(EdgeKey{j, i}) > 0;
}

/// u_{k,j,i} for k >= j >= i; a unit cell when two indices agree.
template <TwoCategoryHandle H>
typename H::Cell cell_at(const H& h, const Simplex<H>& s, int k, int j, int i) {
  if (k == j || j == i) return h.unit_cell(arrow_at(h, s, k, i));
  auto it = s.triangles.find(TriangleKey{k, j, i});
  if (it == s.triangles.end()) throw InvalidInput("simplex has no triangle " + key_string(TriangleKey{k, j, i}));
  return it->second;
}

template <TwoCategoryHandle H>
bool has_cell(const Simplex<H>& s, int k, int j, int i) {
  if (k == j || j == i) return has_arrow(s, k, i);
  return s.triangles.count(TriangleKey{k, j, i}) > 0;
}

template <TwoCategoryHandle H>
typename H::Cell whisker_left(const H& h, const typename H::Arrow& g, const typename H::Cell& c) {
  return h.hcompose(h.unit_cell(g), c);
}

template <TwoCategoryHandle H>
typename H::Cell whisker_right(const H& h, const typename H::Cell& c, const typename H::Arrow& f) {
  return h.hcompose(c, h.unit_cell(f));
}

/// Both sides of the tetrahedron equation for l > k > j > i.
template <TwoCategoryHandle H>
std::pair<typename H::Cell, typename H::Cell> tetrahedron_sides(const H& h, const Simplex<H>& s, int l, int k, int j,
                                                                int i) {
  auto lhs = h.vcompose(whisker_left(h, arrow_at(h, s, l, k), cell_at(h, s, k, j, i)), cell_at(h, s, l, k, i));
  auto rhs = h.vcompose(whisker_right(h, cell_at(h, s, l, k, j), arrow_at(h, s, j, i)), cell_at(h, s, l, j, i));
  return {std::move(lhs), std::move(rhs)};
}

/// Checks the labels that are present. With `complete`, missing labels are
/// violations too. Tetrahedra are checked only when all their labels exist
/// and their triangles have correct endpoints.
template <TwoCategoryHandle H>
Report validate_labels(const H& h, const Simplex<H>& s, bool complete) {
  Report r;
  const int n = int(s.n);
  if (s.vertices.size() != s.n + 1) {
    r.push_back({"simplex shape", "vertices", "expected " + std::to_string(n + 1) + " vertices"});
    return r;
  }
  for (const auto& [key, a] : s.edges)
    if (key[0] <= key[1] || key[1] < 0 || key[0] > n)
      r.push_back({"simplex shape", "edge " + key_string(key), "index out of range"});
  for (const auto& [key, c] : s.triangles)
    if (!(key[0] > key[1] && key[1] > key[2]) || key[2] < 0 || key[0] > n)
      r.push_back({"simplex shape", "triangle " + key_string(key), "index out of range"});
  if (!r.empty()) return r;

  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      if (!has_arrow(s, j, i)) {
        if (complete) r.push_back({"simplex shape", "edge " + key_string(EdgeKey{j, i}), "missing"});
        continue;
      }
      const auto& a = s.edges.at(EdgeKey{j, i});
      if (!(h.source(a) == s.vertices[std::size_t(i)]) || !(h.target(a) == s.vertices[std::size_t(j)]))
        r.push_back({"edge endpoints", "edge " + key_string(EdgeKey{j, i}), "arrow does not join the vertices"});
      if constexpr (requires { h.arrow_defect(a); })
        if (auto why = h.arrow_defect(a)) r.push_back({"arrow validity", "edge " + key_string(EdgeKey{j, i}), *why});
    }
  if (!r.empty()) return r;

  std::map<TriangleKey, bool> good;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        const TriangleKey key{k, j, i};
        if (!s.triangles.count(key)) {
          if (complete) r.push_back({"simplex shape", "triangle " + key_string(key), "missing"});
          continue;
        }
        if (!has_arrow(s, k, i) || !has_arrow(s, k, j) || !has_arrow(s, j, i)) {
          r.push_back({"simplex shape", "triangle " + key_string(key), "edges of the triangle are missing"});
          continue;
        }
        const auto& c = s.triangles.at(key);
        const bool ok = h.from(c) == arrow_at(h, s, k, i) &&
                        h.to(c) == h.compose(arrow_at(h, s, k, j), arrow_at(h, s, j, i));
        if (!ok)
          r.push_back({"triangle endpoints", "triangle " + key_string(key),
                       "2-cell is not u_{k,i} => u_{k,j} o u_{j,i}"});
        if constexpr (requires { h.cell_defect(c); })
          if (ok)
            if (auto why = h.cell_defect(c)) r.push_back({"2-cell validity", "triangle " + key_string(key), *why});
        good[key] = ok;
      }
  if (!r.empty()) return r;

  for (int l = 0; l <= n; ++l)
    for (int k = 0; k < l; ++k)
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < j; ++i) {
          if (!good.count({k, j, i}) || !good.count({l, k, i}) || !good.count({l, k, j}) || !good.count({l, j, i}))
            continue;
          const auto [lhs, rhs] = tetrahedron_sides(h, s, l, k, j, i);
          if (!(lhs == rhs))
            r.push_back({"tetrahedron equation",
                         "tetrahedron " + tuple_string({std::to_string(l), std::to_string(k), std::to_string(j),
                                                        std::to_string(i)}),
                         ""});
        }
  return r;
}

template <TwoCategoryHandle H>
Report validate_simplex(const H& h, const Simplex<H>& s) {
  return validate_labels(h, s, true);
}

template <TwoCategoryHandle H>
Report validate_partial(const H& h, const Simplex<H>& s) {
  return validate_labels(h, s, false);
}

/// Reindexes labels along an order-preserving map old index = idx(new index);
/// degenerate requests are served by arrow_at / cell_at.
template <TwoCategoryHandle H>
Simplex<H> reindex(const H& h, const Simplex<H>& s, std::size_t new_n, const std::function<int(int)>& idx) {
  Simplex<H> out;
  out.n = new_n;
  for (int a = 0; a <= int(new_n); ++a) out.vertices.push_back(s.vertices.at(std::size_t(idx(a))));
  for (int j = 0; j <= int(new_n); ++j)
    for (int i = 0; i < j; ++i)
      if (has_arrow(s, idx(j), idx(i))) out.edges.emplace(EdgeKey{j, i}, arrow_at(h, s, idx(j), idx(i)));
  for (int k = 0; k <= int(new_n); ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i)
        if (has_cell(s, idx(k), idx(j), idx(i)))
          out.triangles.emplace(TriangleKey{k, j, i}, cell_at(h, s, idx(k), idx(j), idx(i)));
  return out;
}

/// d_m: deletes vertex m.
template <TwoCategoryHandle H>
Simplex<H> face(const H& h, const Simplex<H>& s, std::size_t m) {
  if (s.n == 0 || m > s.n) throw InvalidInput("face index out of range");
  return reindex(h, s, s.n - 1, [m](int a) { return a < int(m) ? a : a + 1; });
}

/// s_m: repeats vertex m.
template <TwoCategoryHandle H>
Simplex<H> degeneracy(const H& h, const Simplex<H>& s, std::size_t m) {
  if (m > s.n) throw InvalidInput("degeneracy index out of range");
  return reindex(h, s, s.n + 1, [m](int a) { return a <= int(m) ? a : a - 1; });
}

template <TwoCategoryHandle H>
std::vector<Simplex<H>> boundary(const H& h, const Simplex<H>& s) {
  std::vector<Simplex<H>> out;
  for (std::size_t m = 0; m <= s.n; ++m) out.push_back(face(h, s, m));
  return out;
}

/// The horn obtained by deleting the data that lies only in face d_k.
template <TwoCategoryHandle H>
Horn<H> horn_of(const Simplex<H>& s, std::size_t k) {
  if (s.n < 2 || k > s.n) throw InvalidInput("horns need n >= 2 and 0 <= k <= n");
  Horn<H> out{s.n, k, s};
  if (s.n == 2) {
    std::vector<int> rest;
    for (int a = 0; a <= 2; ++a)
      if (a != int(k)) rest.push_back(a);
    out.data.edges.erase(EdgeKey{rest[1], rest[0]});
    out.data.triangles.clear();
  } else if (s.n == 3) {
    std::vector<int> rest;
    for (int a = 3; a >= 0; --a)
      if (a != int(k)) rest.push_back(a);
    out.data.triangles.erase(TriangleKey{rest[0], rest[1], rest[2]});
  }
  return out;
}

/// Horn data is well formed: present labels validate and the missing ones are
/// exactly those of the k-th face interior.
template <TwoCategoryHandle H>
Report validate_horn(const H& h, const Horn<H>& hn) {
  Report r = validate_partial(h, hn.data);
  if (hn.data.n != hn.n) r.push_back({"horn shape", "horn", "dimension mismatch"});
  if (hn.n < 2 || hn.k > hn.n) r.push_back({"horn shape", "horn", "needs n >= 2 and 0 <= k <= n"});
  if (!r.empty()) return r;
  const int n = int(hn.n), k = int(hn.k);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < j; ++i)
      if (!has_arrow(hn.data, j, i) && !(n == 2 && j != k && i != k))
        r.push_back({"horn shape", "edge " + key_string(EdgeKey{j, i}), "missing"});
  for (int c = 0; c <= n; ++c)
    for (int b = 0; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (!hn.data.triangles.count({c, b, a}) && n > 2 && !(n == 3 && c != k && b != k && a != k))
          r.push_back({"horn shape", "triangle " + key_string(TriangleKey{c, b, a}), "missing"});
  return r;
}

namespace nerve_detail {

template <TwoCategoryHandle H>
typename H::Cell must_invert(const H& h, const typename H::Cell& c) {
  auto inv = h.inverse(c);
  if (!inv) throw NoFiller("a 2-cell needed by the filler is not invertible");
  return *inv;
}

}  // namespace nerve_detail

/// Fills a horn. Inner 2-horns compose; outer 2-horns use the handle's
/// filler hooks; 3-horns solve the tetrahedron equation for the missing
/// triangle; for n >= 4 the horn already holds the whole 2-skeleton.
template <TwoCategoryHandle H>
Simplex<H> fill_horn(const H& h, const Horn<H>& hn) {
  if (auto r = validate_horn(h, hn); !r.empty()) throw InvalidInput("invalid horn: " + r.front().message());
  Simplex<H> s = hn.data;
  using nerve_detail::must_invert;
  if (hn.n == 2) {
    if (hn.k == 1) {
      auto u20 = h.compose(s.edges.at({2, 1}), s.edges.at({1, 0}));
      s.triangles.emplace(TriangleKey{2, 1, 0}, h.unit_cell(u20));
      s.edges.emplace(EdgeKey{2, 0}, std::move(u20));
    } else if (hn.k == 0) {
      auto f = h.fill_outer_first(s.edges.at({1, 0}), s.edges.at({2, 0}));
      if (!f) throw NoFiller("no filler for the (2,0)-horn");
      s.edges.emplace(EdgeKey{2, 1}, f->first);
      s.triangles.emplace(TriangleKey{2, 1, 0}, f->second);
    } else {
      auto f = h.fill_outer_last(s.edges.at({2, 0}), s.edges.at({2, 1}));
      if (!f) throw NoFiller("no filler for the (2,2)-horn");
      s.edges.emplace(EdgeKey{1, 0}, f->first);
      s.triangles.emplace(TriangleKey{2, 1, 0}, f->second);
    }
  } else if (hn.n == 3) {
    auto A = [&](int j, int i) { return arrow_at(h, s, j, i); };
    auto C = [&](int k, int j, int i) { return cell_at(h, s, k, j, i); };
    switch (hn.k) {
      case 0: {
        // (u321 o u10) = (u32 o u210) . u320 . u310^-1
        auto theta = h.vcompose(h.vcompose(whisker_left(h, A(3, 2), C(2, 1, 0)), C(3, 2, 0)),
                                must_invert(h, C(3, 1, 0)));
        auto c = h.factor_right(A(3, 1), h.compose(A(3, 2), A(2, 1)), A(1, 0), theta);
        if (!c) throw NoFiller("no 2-cell factors through precomposition for the (3,0)-horn");
        s.triangles.emplace(TriangleKey{3, 2, 1}, *c);
        break;
      }
      case 1: {
        auto c = h.vcompose(h.vcompose(must_invert(h, whisker_left(h, A(3, 2), C(2, 1, 0))),
                                       whisker_right(h, C(3, 2, 1), A(1, 0))),
                            C(3, 1, 0));
        s.triangles.emplace(TriangleKey{3, 2, 0}, c);
        break;
      }
      case 2: {
        auto c = h.vcompose(h.vcompose(must_invert(h, whisker_right(h, C(3, 2, 1), A(1, 0))),
                                       whisker_left(h, A(3, 2), C(2, 1, 0))),
                            C(3, 2, 0));
        s.triangles.emplace(TriangleKey{3, 1, 0}, c);
        break;
      }
      default: {
        // u32 o u210 = (u321 o u10) . u310 . u320^-1
        auto theta = h.vcompose(h.vcompose(whisker_right(h, C(3, 2, 1), A(1, 0)), C(3, 1, 0)),
                                must_invert(h, C(3, 2, 0)));
        auto c = h.factor_left(A(3, 2), A(2, 0), h.compose(A(2, 1), A(1, 0)), theta);
        if (!c) throw NoFiller("no 2-cell factors through postcomposition for the (3,3)-horn");
        s.triangles.emplace(TriangleKey{2, 1, 0}, *c);
        break;
      }
    }
  }
  if (auto r = validate_simplex(h, s); !r.empty()) {
    if (hn.n >= 4) throw Incompatible("horn does not extend: " + r.front().message());
    throw NoFiller("constructed filler fails: " + r.front().message());
  }
  return s;
}

/// Glues n + 1 faces into labels of an n-simplex; throws Incompatible when
/// two faces disagree.
template <TwoCategoryHandle H>
Simplex<H> glue_faces(const H& h, const std::vector<Simplex<H>>& faces) {
  (void)h;
  if (faces.size() < 3) throw InvalidInput("gluing needs at least three faces");
  const std::size_t n = faces.size() - 1;
  Simplex<H> s;
  s.n = n;
  s.vertices.resize(n + 1);
  std::vector<bool> seen(n + 1, false);
  auto local = [](int a, int m) { return a < m ? a : a - 1; };
  for (std::size_t m = 0; m <= n; ++m) {
    const auto& f = faces[m];
    if (f.n != n - 1 || f.vertices.size() != n) throw InvalidInput("face " + std::to_string(m) + " has the wrong dimension");
    for (int a = 0; a <= int(n); ++a) {
      if (a == int(m)) continue;
      const auto& v = f.vertices[std::size_t(local(a, int(m)))];
      if (!seen[std::size_t(a)]) {
        s.vertices[std::size_t(a)] = v;
        seen[std::size_t(a)] = true;
      } else if (!(s.vertices[std::size_t(a)] == v)) {
        throw Incompatible("faces disagree on vertex " + std::to_string(a));
      }
    }
    for (int j = 0; j <= int(n); ++j)
      for (int i = 0; i < j; ++i) {
        if (j == int(m) || i == int(m)) continue;
        auto it = f.edges.find(EdgeKey{local(j, int(m)), local(i, int(m))});
        if (it == f.edges.end()) throw InvalidInput("face " + std::to_string(m) + " is missing an edge");
        auto [pos, fresh] = s.edges.emplace(EdgeKey{j, i}, it->second);
        if (!fresh && !(pos->second == it->second))
          throw Incompatible("faces disagree on edge " + key_string(EdgeKey{j, i}));
      }
    for (int c = 0; c <= int(n); ++c)
      for (int b = 0; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          if (c == int(m) || b == int(m) || a == int(m)) continue;
          auto it = f.triangles.find(TriangleKey{local(c, int(m)), local(b, int(m)), local(a, int(m))});
          if (it == f.triangles.end()) throw InvalidInput("face " + std::to_string(m) + " is missing a triangle");
          auto [pos, fresh] = s.triangles.emplace(TriangleKey{c, b, a}, it->second);
          if (!fresh && !(pos->second == it->second))
            throw Incompatible("faces disagree on triangle " + key_string(TriangleKey{c, b, a}));
        }
  }
  return s;
}

/// The unique n-simplex (n >= 4) with the given boundary.
template <TwoCategoryHandle H>
Simplex<H> coskeletal_extend(const H& h, const std::vector<Simplex<H>>& faces) {
  if (faces.size() < 5) throw InvalidInput("coskeletal extension needs n >= 4");
  for (std::size_t m = 0; m < faces.size(); ++m)
    if (auto r = validate_simplex(h, faces[m]); !r.empty())
      throw Incompatible("face " + std::to_string(m) + " is not a simplex: " + r.front().message());
  Simplex<H> s = glue_faces(h, faces);
  if (auto r = validate_simplex(h, s); !r.empty()) throw Incompatible(r.front().message());
  return s;
}

template <TwoCategoryHandle H>
FiltrationStage<H> strip(const Simplex<H>& s, std::size_t k) {
  if (s.n == 0 || k >= s.n) throw InvalidInput("filtration stage must satisfy 0 <= k < n");
  const int n = int(s.n), kk = int(k);
  FiltrationStage<H> out{s.n, k, {}};
  out.data.n = s.n;
  out.data.vertices = s.vertices;
  for (const auto& [key, a] : s.edges)
    if (key[0] < n || key[1] >= kk) out.data.edges.emplace(key, a);
  for (const auto& [key, c] : s.triangles)
    if (key[0] < n || key[2] >= kk) out.data.triangles.emplace(key, c);
  return out;
}

/// Extends a stage at k + 1 to the stage at k, given the triangle (n, k+1, k).
/// The new edge u_{n,k} is the source of alpha and
///   u_{n,l,k} = (u_{n,l} o u_{l,k+1,k})^-1 . (u_{n,l,k+1} o u_{k+1,k}) . u_{n,k+1,k}.
template <TwoCategoryHandle H>
FiltrationStage<H> reconstruct(const H& h, const FiltrationStage<H>& stage, const typename H::Cell& alpha) {
  if (stage.k == 0) throw InvalidInput("stage 0 is already the whole simplex");
  const int n = int(stage.n), k = int(stage.k) - 1;
  Simplex<H> s = stage.data;
  if (!(h.to(alpha) == h.compose(arrow_at(h, s, n, k + 1), arrow_at(h, s, k + 1, k))))
    throw InvalidInput("reconstruct: target of the 2-cell is not u_{n,k+1} o u_{k+1,k}");
  const auto u_nk = h.from(alpha);
  if (!(h.source(u_nk) == s.vertices[std::size_t(k)]) || !(h.target(u_nk) == s.vertices[std::size_t(n)]))
    throw InvalidInput("reconstruct: source of the 2-cell does not join the vertices");
  s.edges.insert_or_assign(EdgeKey{n, k}, u_nk);
  s.triangles.insert_or_assign(TriangleKey{n, k + 1, k}, alpha);
  for (int l = k + 2; l < n; ++l) {
    auto lhs_inv = nerve_detail::must_invert(h, whisker_left(h, arrow_at(h, s, n, l), cell_at(h, s, l, k + 1, k)));
    auto c = h.vcompose(h.vcompose(lhs_inv, whisker_right(h, cell_at(h, s, n, l, k + 1), arrow_at(h, s, k + 1, k))),
                        alpha);
    s.triangles.insert_or_assign(TriangleKey{n, l, k}, std::move(c));
  }
  if (auto r = validate_partial(h, s); !r.empty()) throw Incompatible("reconstruction fails: " + r.front().message());
  return FiltrationStage<H>{stage.n, std::size_t(k), std::move(s)};
}

/// Rebuilds the simplex from the top stage (n - 1) and the triangles
/// (n, k+1, k) for k = n-2 down to 0, given in that order.
template <TwoCategoryHandle H>
Simplex<H> reconstruct_all(const H& h, FiltrationStage<H> stage, const std::vector<typename H::Cell>& alphas) {
  for (const auto& a : alphas) stage = reconstruct(h, stage, a);
  if (stage.k != 0) throw InvalidInput("reconstruct_all: not enough 2-cells");
  return stage.data;
}

/// The six faces of the cube of 2-cells attached to a 4-simplex. Vertices of
/// the cube are subsets S of {1,2,3}, labelled by the composite along
/// 0 -> S -> 4; an edge inserts one vertex using a whiskered triangle.
struct CubeFaces {
  std::array<bool, 6> commutes{};
  static constexpr std::array<const char*, 6> names{"1 absent (face d1)",  "1 present (face d0)",
                                                    "2 absent (face d2)",  "2 present (interchange)",
                                                    "3 absent (face d3)",  "3 present (face d4)"};
  int failures() const {
    int c = 0;
    for (bool b : commutes) c += b ? 0 : 1;
    return c;
  }
};

template <TwoCategoryHandle H>
CubeFaces cube_faces(const H& h, const Simplex<H>& s) {
  if (s.n != 4) throw InvalidInput("cube faces are defined for 4-simplices");
  auto path_of = [](int mask) {
    std::vector<int> p{0};
    for (int v = 1; v <= 3; ++v)
      if (mask & (1 << (v - 1))) p.push_back(v);
    p.push_back(4);
    return p;
  };
  auto composite = [&](const std::vector<int>& p, std::size_t from_idx, std::size_t to_idx) {
    auto a = h.unit(s.vertices[std::size_t(p[from_idx])]);
    for (std::size_t t = from_idx; t < to_idx; ++t) a = h.compose(arrow_at(h, s, p[t + 1], p[t]), a);
    return a;
  };
  // Edge of the cube inserting vertex v into the path of `mask`.
  auto edge = [&](int mask, int v) {
    const auto p = path_of(mask);
    std::size_t pos = 0;
    while (p[pos + 1] < v) ++pos;  // p[pos] < v < p[pos + 1]
    const int a = p[pos], b = p[pos + 1];
    auto c = cell_at(h, s, b, v, a);
    c = h.hcompose(c, h.unit_cell(composite(p, 0, pos)));
    c = h.hcompose(h.unit_cell(composite(p, pos + 1, p.size() - 1)), c);
    return c;
  };
  CubeFaces out;
  int idx = 0;
  for (int fixed = 1; fixed <= 3; ++fixed)
    for (int present = 0; present <= 1; ++present) {
      std::vector<int> others;
      for (int v = 1; v <= 3; ++v)
        if (v != fixed) others.push_back(v);
      const int base = present ? (1 << (fixed - 1)) : 0;
      const int i = others[0], j = others[1];
      const int bi = 1 << (i - 1), bj = 1 << (j - 1);
      auto p1 = h.vcompose(edge(base | bi, j), edge(base, i));
      auto p2 = h.vcompose(edge(base | bj, i), edge(base, j));
      out.commutes[std::size_t(idx++)] = p1 == p2;
    }
  return out;
}

/// All n-simplices of the nerve of a finite table handle, built by extending
/// (n-1)-simplices by a last vertex and pruning with the tetrahedron equation.
template <TwoCategoryHandle H>
std::vector<Simplex<H>> enumerate_nerve(const H& h, std::size_t n) {
  std::vector<Simplex<H>> level;
  for (auto x : h.objects()) {
    Simplex<H> s;
    s.n = 0;
    s.vertices = {x};
    level.push_back(std::move(s));
  }
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Simplex<H>> next;
    const int M = int(m);
    std::vector<TriangleKey> tri_order;
    for (int k = 1; k < M; ++k)
      for (int i = 0; i < k; ++i) tri_order.push_back({M, k, i});
    for (const auto& base : level) {
      for (auto v : h.objects()) {
        Simplex<H> s = base;
        s.n = m;
        s.vertices.push_back(v);
        // Choose edges (m, i) for i = 0 .. m-1, then triangles in tri_order.
        std::function<void(int)> choose_edge;
        std::function<void(std::size_t)> choose_triangle;
        choose_triangle = [&](std::size_t t) {
          if (t == tri_order.size()) {
            next.push_back(s);
            return;
          }
          const auto [c, b, a] = tri_order[t];
          const auto target = h.compose(arrow_at(h, s, c, b), arrow_at(h, s, b, a));
          for (auto cell : h.cells_between(arrow_at(h, s, c, a), target)) {
            s.triangles[{c, b, a}] = cell;
            bool ok = true;
            // Tetrahedra (m, b, a, i) become checkable once (m, b, a) is set.
            for (int i = 0; i < a && ok; ++i) {
              const auto [lhs, rhs] = tetrahedron_sides(h, s, c, b, a, i);
              ok = lhs == rhs;
            }
            if (ok) choose_triangle(t + 1);
          }
          s.triangles.erase({c, b, a});
        };
        choose_edge = [&](int i) {
          if (i == M) {
            choose_triangle(0);
            return;
          }
          for (auto a : h.arrows_between(s.vertices[std::size_t(i)], v)) {
            s.edges[{M, i}] = a;
            choose_edge(i + 1);
          }
          s.edges.erase({M, i});
        };
        choose_edge(0);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace gl2
