#include "gl2/groupoid.hpp"

#include <algorithm>
#include <numeric>

namespace gl2 {

int FinGroupoid::object_index(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) throw InvalidInput("groupoid has no object \"" + name + "\"");
  return int(it - objects.begin());
}

int FinGroupoid::arrow_index(const std::string& name) const {
  auto it = std::find(arrows.begin(), arrows.end(), name);
  if (it == arrows.end()) throw InvalidInput("groupoid has no arrow \"" + name + "\"");
  return int(it - arrows.begin());
}

std::vector<std::pair<int, int>> FinGroupoid::composable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < int(num_arrows()); ++h)
    for (int g = 0; g < int(num_arrows()); ++g)
      if (composable(h, g)) out.emplace_back(h, g);
  return out;
}

std::vector<FinGroupoid::Triple> FinGroupoid::composable_triples() const {
  std::vector<Triple> out;
  for (auto [h, g] : composable_pairs())
    for (int f = 0; f < int(num_arrows()); ++f)
      if (composable(g, f)) out.push_back({h, g, f});
  return out;
}

Report verify_groupoid(const FinGroupoid& g) {
  Report r;
  const std::size_t no = g.num_objects(), na = g.num_arrows();
  auto in_range = [](int v, std::size_t n) { return v >= 0 && std::size_t(v) < n; };
  if (g.src.size() != na || g.tgt.size() != na || g.inv.size() != na || g.comp.size() != na * na ||
      g.unit.size() != no) {
    r.push_back({"table shape", "groupoid", "table sizes disagree with object and arrow counts"});
    return r;
  }
  for (std::size_t a = 0; a < na; ++a)
    if (!in_range(g.src[a], no) || !in_range(g.tgt[a], no) || !in_range(g.inv[a], na))
      r.push_back({"table range", g.arrows[a], "endpoint or inverse out of range"});
  for (std::size_t x = 0; x < no; ++x)
    if (!in_range(g.unit[x], na)) r.push_back({"table range", g.objects[x], "unit out of range"});
  if (!r.empty()) return r;

  for (int h = 0; h < int(na); ++h)
    for (int f = 0; f < int(na); ++f) {
      const int c = g.compose(h, f);
      const auto where = tuple_string({g.arrows[std::size_t(h)], g.arrows[std::size_t(f)]});
      if (!g.composable(h, f)) {
        if (c != -1) r.push_back({"composition domain", where, "defined for a non-composable pair"});
        continue;
      }
      if (!in_range(c, na)) {
        r.push_back({"composition domain", where, "undefined for a composable pair"});
        continue;
      }
      if (g.src[std::size_t(c)] != g.src[std::size_t(f)] || g.tgt[std::size_t(c)] != g.tgt[std::size_t(h)])
        r.push_back({"composition endpoints", where, "composite has wrong endpoints"});
    }
  if (!r.empty()) return r;

  for (std::size_t x = 0; x < no; ++x) {
    const int u = g.unit[x];
    if (g.src[std::size_t(u)] != int(x) || g.tgt[std::size_t(u)] != int(x))
      r.push_back({"unit endpoints", g.objects[x], "unit is not an endomorphism"});
  }
  for (int f = 0; f < int(na); ++f) {
    const int us = g.unit[std::size_t(g.src[std::size_t(f)])], ut = g.unit[std::size_t(g.tgt[std::size_t(f)])];
    if (g.compose(f, us) != f || g.compose(ut, f) != f)
      r.push_back({"unit law", g.arrows[std::size_t(f)], ""});
    const int i = g.inv[std::size_t(f)];
    if (g.src[std::size_t(i)] != g.tgt[std::size_t(f)] || g.tgt[std::size_t(i)] != g.src[std::size_t(f)] ||
        g.compose(i, f) != us || g.compose(f, i) != ut)
      r.push_back({"inverse law", g.arrows[std::size_t(f)], ""});
  }
  for (auto t : g.composable_triples())
    if (g.compose(g.compose(t.h, t.g), t.f) != g.compose(t.h, g.compose(t.g, t.f)))
      r.push_back({"associativity",
                   tuple_string({g.arrows[std::size_t(t.h)], g.arrows[std::size_t(t.g)], g.arrows[std::size_t(t.f)]}),
                   ""});
  return r;
}

FinGroupoid pair_groupoid(const std::vector<std::string>& points) {
  const std::size_t n = points.size();
  if (n == 0) throw InvalidInput("pair groupoid of an empty set");
  FinGroupoid g;
  g.objects = points;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      g.arrows.push_back(points[y] + "<-" + points[x]);
      g.src.push_back(int(x));
      g.tgt.push_back(int(y));
      g.inv.push_back(int(x * n + y));
    }
  for (std::size_t x = 0; x < n; ++x) g.unit.push_back(int(x * n + x));
  g.comp.assign(n * n * n * n, -1);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) g.comp[(z * n + y) * n * n + (y * n + x)] = int(z * n + x);
  return g;
}

FinGroupoid pair_groupoid(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  return pair_groupoid(pts);
}

FinGroupoid action_groupoid(const FiniteGroup& group, std::size_t set_size, const std::vector<int>& action) {
  const std::size_t k = group.order, s = set_size;
  if (s == 0) throw InvalidInput("action on an empty set");
  if (action.size() != k * s) throw InvalidInput("action table must have |G| * |X| entries");
  auto act = [&](int a, int x) { return action[std::size_t(a) * s + std::size_t(x)]; };
  for (int v : action)
    if (v < 0 || std::size_t(v) >= s) throw InvalidInput("action table value out of range");
  for (std::size_t x = 0; x < s; ++x)
    if (act(0, int(x)) != int(x)) throw InvalidInput("action law e.x = x fails at x = " + std::to_string(x));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t x = 0; x < s; ++x)
        if (act(group.mul(int(a), int(b)), int(x)) != act(int(a), act(int(b), int(x))))
          throw InvalidInput("action law (ab).x = a.(b.x) fails at (" + group.element_names[a] + "," +
                             group.element_names[b] + "," + std::to_string(x) + ")");
  FinGroupoid g;
  for (std::size_t x = 0; x < s; ++x) g.objects.push_back("x" + std::to_string(x));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t x = 0; x < s; ++x) {
      g.arrows.push_back(group.element_names[a] + "@x" + std::to_string(x));
      g.src.push_back(int(x));
      g.tgt.push_back(act(int(a), int(x)));
      g.inv.push_back(group.inverse(int(a)) * int(s) + act(int(a), int(x)));
    }
  for (std::size_t x = 0; x < s; ++x) g.unit.push_back(int(x));
  const std::size_t na = k * s;
  g.comp.assign(na * na, -1);
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t x = 0; x < s; ++x) {
      const int y = act(int(b), int(x));
      for (std::size_t a = 0; a < k; ++a)
        g.comp[(a * s + std::size_t(y)) * na + (b * s + x)] = group.mul(int(a), int(b)) * int(s) + int(x);
    }
  return g;
}

FinGroupoid translation_groupoid(const FiniteGroup& group) {
  return action_groupoid(group, group.order, group.table);
}

FinGroupoid one_object_groupoid(const FiniteGroup& group) {
  return action_groupoid(group, 1, std::vector<int>(group.order, 0));
}

PairProjection projection_to_pair(const FinGroupoid& g) {
  PairProjection p{pair_groupoid(g.objects), {}};
  const std::size_t n = g.num_objects();
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    p.on_arrows.push_back(g.tgt[a] * int(n) + g.src[a]);
  std::vector<int> on_objects(n);
  std::iota(on_objects.begin(), on_objects.end(), 0);
  if (!is_functor(g, p.pair, on_objects, p.on_arrows)) throw Error("projection to the pair groupoid is not a functor");
  return p;
}

bool is_functor(const FinGroupoid& a, const FinGroupoid& b, const std::vector<int>& on_objects,
                const std::vector<int>& on_arrows) {
  if (on_objects.size() != a.num_objects() || on_arrows.size() != a.num_arrows()) return false;
  for (std::size_t f = 0; f < a.num_arrows(); ++f) {
    const int bf = on_arrows[f];
    if (b.src[std::size_t(bf)] != on_objects[std::size_t(a.src[f])] ||
        b.tgt[std::size_t(bf)] != on_objects[std::size_t(a.tgt[f])])
      return false;
  }
  for (std::size_t x = 0; x < a.num_objects(); ++x)
    if (on_arrows[std::size_t(a.unit[x])] != b.unit[std::size_t(on_objects[x])]) return false;
  for (auto [h, g] : a.composable_pairs())
    if (on_arrows[std::size_t(a.compose(h, g))] != b.compose(on_arrows[std::size_t(h)], on_arrows[std::size_t(g)]))
      return false;
  return true;
}

std::vector<bool> projection_image(const FinGroupoid& g) {
  const std::size_t n = g.num_objects();
  std::vector<bool> hit(n * n, false);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) hit[std::size_t(g.tgt[a]) * n + std::size_t(g.src[a])] = true;
  return hit;
}

std::vector<std::vector<int>> components(const FinGroupoid& g) {
  const std::size_t n = g.num_objects();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != -1) continue;
    std::vector<int> comp{int(x)};
    label[x] = int(out.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t a = 0; a < g.num_arrows(); ++a)
        if (g.src[a] == comp[i] && label[std::size_t(g.tgt[a])] == -1) {
          label[std::size_t(g.tgt[a])] = int(out.size());
          comp.push_back(g.tgt[a]);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Chain> nerve1(const FinGroupoid& g, std::size_t n) {
  std::vector<Chain> level;
  for (std::size_t x = 0; x < g.num_objects(); ++x) level.push_back({int(x), {}});
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Chain> next;
    for (const auto& c : level) {
      const int end = c.arrows.empty() ? c.base : g.tgt[std::size_t(c.arrows.back())];
      for (std::size_t a = 0; a < g.num_arrows(); ++a)
        if (g.src[a] == end) {
          Chain e = c;
          e.arrows.push_back(int(a));
          next.push_back(std::move(e));
        }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<int> vertices(const FinGroupoid& g, const Chain& c) {
  std::vector<int> v{c.base};
  for (int a : c.arrows) v.push_back(g.tgt[std::size_t(a)]);
  return v;
}

Chain face(const FinGroupoid& g, const Chain& c, std::size_t i) {
  const std::size_t n = c.arrows.size();
  if (n == 0 || i > n) throw InvalidInput("face index out of range");
  Chain out;
  if (i == 0) {
    out.base = g.tgt[std::size_t(c.arrows[0])];
    out.arrows.assign(c.arrows.begin() + 1, c.arrows.end());
  } else if (i == n) {
    out.base = c.base;
    out.arrows.assign(c.arrows.begin(), c.arrows.end() - 1);
  } else {
    out.base = c.base;
    for (std::size_t k = 0; k < n; ++k) {
      if (k + 1 == i) {
        out.arrows.push_back(g.compose(c.arrows[k + 1], c.arrows[k]));
        ++k;
      } else {
        out.arrows.push_back(c.arrows[k]);
      }
    }
  }
  return out;
}

Chain degeneracy(const FinGroupoid& g, const Chain& c, std::size_t j) {
  if (j > c.arrows.size()) throw InvalidInput("degeneracy index out of range");
  const auto v = vertices(g, c);
  Chain out = c;
  out.arrows.insert(out.arrows.begin() + std::ptrdiff_t(j), g.unit[std::size_t(v[j])]);
  return out;
}

Report verify_simplicial_identities(const FinGroupoid& g, std::size_t max_level) {
  Report r;
  auto where = [](const char* id, std::size_t n, std::size_t i, std::size_t j) {
    return std::string(id) + "level " + std::to_string(n) + " (i,j)=(" + std::to_string(i) + "," +
           std::to_string(j) + ")";
  };
  for (std::size_t n = 0; n <= max_level; ++n)
    for (const auto& c : nerve1(g, n)) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (face(g, face(g, c, j), i) != face(g, face(g, c, i), j - 1))
              r.push_back({"simplicial identity d_i d_j = d_{j-1} d_i", where("", n, i, j), ""});
      // s_i s_j = s_{j+1} s_i for i <= j
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (degeneracy(g, degeneracy(g, c, j), i) != degeneracy(g, degeneracy(g, c, i), j + 1))
            r.push_back({"simplicial identity s_i s_j = s_{j+1} s_i", where("", n, i, j), ""});
      // d_i s_j
      for (std::size_t j = 0; j <= n; ++j) {
        const Chain s = degeneracy(g, c, j);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          Chain expected;
          if (i < j)
            expected = degeneracy(g, face(g, c, i), j - 1);
          else if (i == j || i == j + 1)
            expected = c;
          else
            expected = degeneracy(g, face(g, c, i - 1), j);
          if (face(g, s, i) != expected) r.push_back({"simplicial identity d_i s_j", where("", n, i, j), ""});
        }
      }
    }
  return r;
}

}  // namespace gl2
