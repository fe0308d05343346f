#include "gl2/ruth.hpp"

#include <string>

namespace gl2 {

namespace {

std::string arrow_where(const FinGroupoid& g, int a) { return "arrow " + g.arrows[std::size_t(a)]; }
std::string object_where(const FinGroupoid& g, int x) { return "object " + g.objects[std::size_t(x)]; }
std::string pair_where(const FinGroupoid& g, int h, int k) {
  return "pair " + tuple_string({g.arrows[std::size_t(h)], g.arrows[std::size_t(k)]});
}
std::string triple_where(const FinGroupoid& g, int h, int k, int f) {
  return "triple " + tuple_string({g.arrows[std::size_t(h)], g.arrows[std::size_t(k)], g.arrows[std::size_t(f)]});
}

bool has_shape(const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; }

bool unital_pair(const FinGroupoid& g, int h, int k) { return g.is_unit(h) || g.is_unit(k); }

Report ruth_shape(const Ruth2& r) {
  Report out;
  const FinGroupoid& g = r.g;
  if (r.v.points() != g.objects) {
    out.push_back({"shape", "bundle", "bundle points must be the groupoid objects in order"});
    return out;
  }
  if (r.d.size() != g.num_objects() || r.rho1.size() != g.num_arrows() || r.rho0.size() != g.num_arrows()) {
    out.push_back({"shape", "ruth", "one differential per object and one rho per arrow are required"});
    return out;
  }
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    auto [d1, d0] = r.v.dims(x);
    if (!has_shape(r.d[x], d0, d1)) out.push_back({"shape", object_where(g, int(x)), "differential is not V1 -> V0"});
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    auto [x1, x0] = r.v.dims(std::size_t(g.src[a]));
    auto [y1, y0] = r.v.dims(std::size_t(g.tgt[a]));
    if (!has_shape(r.rho1[a], y1, x1) || !has_shape(r.rho0[a], y0, x0))
      out.push_back({"shape", arrow_where(g, int(a)), "rho does not map the source fiber to the target fiber"});
  }
  const auto pairs = g.composable_pairs();
  if (r.gamma.size() != pairs.size())
    out.push_back({"shape", "curvature", "gamma must be given on exactly the composable pairs"});
  for (auto [h, k] : pairs) {
    auto it = r.gamma.find({h, k});
    if (it == r.gamma.end()) {
      out.push_back({"shape", pair_where(g, h, k), "missing gamma"});
      continue;
    }
    const std::size_t z1 = r.v.dims(std::size_t(g.tgt[std::size_t(h)])).first;
    const std::size_t x0 = r.v.dims(std::size_t(g.src[std::size_t(k)])).second;
    if (!has_shape(it->second, z1, x0)) out.push_back({"shape", pair_where(g, h, k), "gamma is not V0 -> V1"});
  }
  return out;
}

void check_cocycle(const Ruth2& r, Report& out) {
  const FinGroupoid& g = r.g;
  for (auto [h, k] : g.composable_pairs())
    for (int f = 0; f < int(g.num_arrows()); ++f) {
      if (!g.composable(k, f)) continue;
      // rho1(h) gamma(k,f) - gamma(hk,f) + gamma(h,kf) - gamma(h,k) rho0(f) = 0
      const Matrix lhs = r.rho1[std::size_t(h)] * r.gamma.at({k, f}) - r.gamma.at({g.compose(h, k), f}) +
                         r.gamma.at({h, g.compose(k, f)}) - r.gamma.at({h, k}) * r.rho0[std::size_t(f)];
      if (!lhs.is_zero()) out.push_back({"cocycle equation", triple_where(g, h, k, f), ""});
    }
}

Report prefixed(const Report& r, const std::string& prefix) {
  Report out;
  for (const auto& v : r) out.push_back({v.rule, prefix + " " + v.where, v.detail});
  return out;
}

void append(Report& to, const Report& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace

GLObject Ruth2::object(int x) const { return v.object(g.objects[std::size_t(x)], d[std::size_t(x)]); }

GLArrow Ruth2::arrow(int a) const {
  return GLArrow{object(g.src[std::size_t(a)]), object(g.tgt[std::size_t(a)]), rho1[std::size_t(a)],
                 rho0[std::size_t(a)]};
}

Report verify_ruth(const Ruth2& r) {
  Report out = ruth_shape(r);
  if (!out.empty()) return out;
  const FinGroupoid& g = r.g;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t x = std::size_t(g.src[a]), y = std::size_t(g.tgt[a]);
    if (!(r.d[y] * r.rho1[a] == r.rho0[a] * r.d[x])) {
      out.push_back({"chain condition", arrow_where(g, int(a)), "d_y rho1 != rho0 d_x"});
      continue;
    }
    if (!is_quasi_iso(r.arrow(int(a)).chain_map()))
      out.push_back({"quasi-isomorphism condition", arrow_where(g, int(a)), *arrow_defect(r.arrow(int(a)))});
  }
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    const std::size_t u = std::size_t(g.unit[x]);
    auto [d1, d0] = r.v.dims(x);
    if (!(r.rho1[u] == Matrix::identity(d1)) || !(r.rho0[u] == Matrix::identity(d0)))
      out.push_back({"unit normalization", object_where(g, int(x)), "rho of the unit arrow is not the identity"});
  }
  for (auto [h, k] : g.composable_pairs()) {
    const Matrix& gam = r.gamma.at({h, k});
    if (unital_pair(g, h, k) && !gam.is_zero())
      out.push_back({"unit normalization", pair_where(g, h, k), "gamma at a unit is not zero"});
    const std::size_t hk = std::size_t(g.compose(h, k));
    const std::size_t x = std::size_t(g.src[std::size_t(k)]), z = std::size_t(g.tgt[std::size_t(h)]);
    if (!(gam * r.d[x] == r.rho1[hk] - r.rho1[std::size_t(h)] * r.rho1[std::size_t(k)]))
      out.push_back({"curvature homotopy equation", pair_where(g, h, k), "gamma d != rho1(hg) - rho1(h) rho1(g)"});
    if (!(r.d[z] * gam == r.rho0[hk] - r.rho0[std::size_t(h)] * r.rho0[std::size_t(k)]))
      out.push_back({"curvature homotopy equation", pair_where(g, h, k), "d gamma != rho0(hg) - rho0(h) rho0(g)"});
  }
  check_cocycle(r, out);
  return out;
}

Report cocycle_failures(const Ruth2& r) {
  Report out = ruth_shape(r);
  if (!out.empty()) return out;
  check_cocycle(r, out);
  return out;
}

Report filter_rule(const Report& r, const std::string& rule) {
  Report out;
  for (const auto& v : r)
    if (v.rule == rule) out.push_back(v);
  return out;
}

Report verify_pseudofunctor(const PseudoFunctorGL& p) {
  Report out;
  const FinGroupoid& g = p.g;
  if (!(p.F.source == from_groupoid(g)) || p.v.points() != g.objects || p.F.on_objects.size() != g.num_objects()) {
    out.push_back({"functor shape", "pseudo-functor", "source or bundle does not match the groupoid"});
    return out;
  }
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    const GLObject& o = p.F.on_objects[x];
    if (o.point != g.objects[x] || std::pair{o.fiber.dim1, o.fiber.dim0} != p.v.dims(x))
      out.push_back({"base point compatibility", object_where(g, int(x)), "image is not a fiber over the object"});
  }
  if (!out.empty()) return out;
  append(out, verify_lax_functor(GLHandle{}, p.F));
  return out;
}

Report coherence_failures(const PseudoFunctorGL& p) {
  return filter_rule(verify_pseudofunctor(p), "coherence of the structure cells");
}

PseudoFunctorGL ruth_to_pseudofunctor_unchecked(const Ruth2& r) {
  if (auto s = ruth_shape(r); !s.empty()) throw InvalidInput("ruth shape: " + s.front().message());
  const FinGroupoid& g = r.g;
  PseudoFunctorGL p{g, r.v, {}};
  p.F.source = from_groupoid(g);
  for (std::size_t x = 0; x < g.num_objects(); ++x) p.F.on_objects.push_back(r.object(int(x)));
  for (std::size_t a = 0; a < g.num_arrows(); ++a) p.F.on_arrows.push_back(r.arrow(int(a)));
  for (std::size_t a = 0; a < g.num_arrows(); ++a) p.F.on_cells.push_back(GL2Cell::unit(p.F.on_arrows[a]));
  for (auto [h, k] : g.composable_pairs()) {
    const GLArrow& ah = p.F.on_arrows[std::size_t(h)];
    const GLArrow& ak = p.F.on_arrows[std::size_t(k)];
    GLArrow to{ak.src, ah.dst, ah.a1 * ak.a1, ah.a0 * ak.a0};
    p.F.structure.emplace(std::pair{h, k}, GL2Cell{p.F.on_arrows[std::size_t(g.compose(h, k))], to, r.gamma.at({h, k})});
  }
  return p;
}

PseudoFunctorGL ruth_to_pseudofunctor(const Ruth2& r) {
  if (auto v = verify_ruth(r); !v.empty()) throw InvalidInput("not a representation up to homotopy: " + v.front().message());
  return ruth_to_pseudofunctor_unchecked(r);
}

Ruth2 pseudofunctor_to_ruth(const PseudoFunctorGL& p) {
  if (auto v = verify_pseudofunctor(p); !v.empty()) throw InvalidInput("not a normal pseudo-functor: " + v.front().message());
  Ruth2 r{p.g, p.v, {}, {}, {}, {}};
  for (const auto& o : p.F.on_objects) r.d.push_back(o.fiber.d);
  for (const auto& a : p.F.on_arrows) {
    r.rho1.push_back(a.a1);
    r.rho0.push_back(a.a0);
  }
  for (const auto& [key, cell] : p.F.structure) r.gamma.emplace(key, cell.R);
  return r;
}

Report verify_pseudo_rep(const PseudoRep& p) {
  Report out;
  const FinGroupoid& g = p.g;
  if (p.dims.size() != g.num_objects() || p.rho.size() != g.num_arrows()) {
    out.push_back({"shape", "pseudo-representation", "one dimension per object and one map per arrow are required"});
    return out;
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    if (!has_shape(p.rho[a], p.dims[std::size_t(g.tgt[a])], p.dims[std::size_t(g.src[a])]))
      out.push_back({"shape", arrow_where(g, int(a)), "rho does not map the source fiber to the target fiber"});
  if (!out.empty()) return out;
  for (std::size_t x = 0; x < g.num_objects(); ++x)
    if (!(p.rho[std::size_t(g.unit[x])] == Matrix::identity(p.dims[x])))
      out.push_back({"unit normalization", object_where(g, int(x)), "rho of the unit arrow is not the identity"});
  return out;
}

Ruth2 double_pseudo_rep(const PseudoRep& p) {
  if (auto v = verify_pseudo_rep(p); !v.empty()) throw InvalidInput("not a pseudo-representation: " + v.front().message());
  const FinGroupoid& g = p.g;
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (std::size_t e : p.dims) dims.emplace_back(e, e);
  Ruth2 r{g, GradedBundle(g.objects, dims), {}, p.rho, p.rho, {}};
  for (std::size_t e : p.dims) r.d.push_back(Matrix::identity(e));
  for (auto [h, k] : g.composable_pairs())
    r.gamma.emplace(std::pair{h, k}, p.rho[std::size_t(g.compose(h, k))] - p.rho[std::size_t(h)] * p.rho[std::size_t(k)]);
  return r;
}

PseudoRep lines_projection_pseudo_rep(const std::vector<std::vector<Rational>>& lines) {
  if (lines.empty()) throw InvalidInput("lines: at least one line is required");
  const std::size_t m = lines.front().size();
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != m || m == 0) throw InvalidInput("lines: all vectors must have the same positive length");
    if (dot(lines[i], lines[i]) == 0) throw InvalidInput("lines: vector " + std::to_string(i) + " is zero");
    names.push_back("l" + std::to_string(i));
  }
  PseudoRep p{pair_groupoid(names), std::vector<std::size_t>(lines.size(), 1), {}};
  const std::size_t n = lines.size();
  p.rho.resize(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const Rational c = dot(lines[x], lines[y]);
      if (c == 0) throw OrthogonalPair("lines " + names[x] + " and " + names[y] + " are orthogonal");
      // proj_y(v_x) = (v_x . v_y / v_y . v_y) v_y
      const Rational q = c / dot(lines[y], lines[y]);
      p.rho[std::size_t(p.g.arrow_index(names[y] + "<-" + names[x]))] = Matrix::scalar(q);
    }
  return p;
}

std::vector<HomologyDims> pointwise_homology(const Ruth2& r) {
  std::vector<HomologyDims> out;
  for (std::size_t x = 0; x < r.d.size(); ++x) out.push_back(homology(r.object(int(x)).fiber));
  return out;
}

bool is_acyclic(const Ruth2& r) {
  for (const auto& h : pointwise_homology(r))
    if (h.h1 != 0 || h.h0 != 0) return false;
  return true;
}

Report verify_morphism(const RuthMorphism& m) {
  Report out = prefixed(verify_ruth(m.src), "source");
  append(out, prefixed(verify_ruth(m.dst), "target"));
  if (!filter_rule(out, "shape").empty()) return out;
  const FinGroupoid& g = m.src.g;
  if (!(g == m.dst.g)) {
    out.push_back({"morphism shape", "morphism", "source and target live over different groupoids"});
    return out;
  }
  if (m.theta1.size() != g.num_objects() || m.theta0.size() != g.num_objects() || m.mu.size() != g.num_arrows()) {
    out.push_back({"morphism shape", "morphism", "one theta per object and one mu per arrow are required"});
    return out;
  }
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    auto [s1, s0] = m.src.v.dims(x);
    auto [t1, t0] = m.dst.v.dims(x);
    if (!has_shape(m.theta1[x], t1, s1) || !has_shape(m.theta0[x], t0, s0))
      out.push_back({"morphism shape", object_where(g, int(x)), "theta does not map source fiber to target fiber"});
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t x0 = m.src.v.dims(std::size_t(g.src[a])).second;
    const std::size_t y1 = m.dst.v.dims(std::size_t(g.tgt[a])).first;
    if (!has_shape(m.mu[a], y1, x0)) out.push_back({"morphism shape", arrow_where(g, int(a)), "mu is not V0 -> V1'"});
  }
  if (!out.empty()) return out;

  const Ruth2& s = m.src;
  const Ruth2& t = m.dst;
  for (std::size_t x = 0; x < g.num_objects(); ++x)
    if (!(m.theta0[x] * s.d[x] == t.d[x] * m.theta1[x]))
      out.push_back({"chain map condition", object_where(g, int(x)), "theta0 d != d' theta1"});
  for (std::size_t x = 0; x < g.num_objects(); ++x)
    if (!m.mu[std::size_t(g.unit[x])].is_zero())
      out.push_back({"unit normalization", object_where(g, int(x)), "mu of the unit arrow is not zero"});
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t x = std::size_t(g.src[a]), y = std::size_t(g.tgt[a]);
    if (!(m.mu[a] * s.d[x] == m.theta1[y] * s.rho1[a] - t.rho1[a] * m.theta1[x]))
      out.push_back({"morphism equation in degree 1", arrow_where(g, int(a)), "mu d != theta1 rho1 - rho1' theta1"});
    if (!(t.d[y] * m.mu[a] == m.theta0[y] * s.rho0[a] - t.rho0[a] * m.theta0[x]))
      out.push_back({"morphism equation in degree 0", arrow_where(g, int(a)), "d' mu != theta0 rho0 - rho0' theta0"});
  }
  for (auto [h, k] : g.composable_pairs()) {
    const std::size_t x = std::size_t(g.src[std::size_t(k)]), z = std::size_t(g.tgt[std::size_t(h)]);
    const std::size_t hk = std::size_t(g.compose(h, k));
    const Matrix sum = m.theta1[z] * s.gamma.at({h, k}) + m.mu[std::size_t(h)] * s.rho0[std::size_t(k)] +
                       t.rho1[std::size_t(h)] * m.mu[std::size_t(k)] - m.mu[hk] - t.gamma.at({h, k}) * m.theta0[x];
    if (!sum.is_zero()) out.push_back({"morphism curvature equation", pair_where(g, h, k), ""});
  }
  return out;
}

bool is_quasi_iso_morphism(const RuthMorphism& m) {
  if (!verify_morphism(m).empty()) return false;
  for (std::size_t x = 0; x < m.theta1.size(); ++x)
    if (!is_quasi_iso(ChainMap2{m.src.object(int(x)).fiber, m.dst.object(int(x)).fiber, m.theta1[x], m.theta0[x]}))
      return false;
  return true;
}

RuthMorphism identity_morphism(const Ruth2& r) {
  RuthMorphism m{r, r, {}, {}, {}};
  for (std::size_t x = 0; x < r.g.num_objects(); ++x) {
    auto [d1, d0] = r.v.dims(x);
    m.theta1.push_back(Matrix::identity(d1));
    m.theta0.push_back(Matrix::identity(d0));
  }
  for (std::size_t a = 0; a < r.g.num_arrows(); ++a) {
    const std::size_t x0 = r.v.dims(std::size_t(r.g.src[a])).second;
    const std::size_t y1 = r.v.dims(std::size_t(r.g.tgt[a])).first;
    m.mu.push_back(Matrix::zero(y1, x0));
  }
  return m;
}

RuthMorphism transport(const Ruth2& r, const std::vector<Matrix>& theta1, const std::vector<Matrix>& theta0,
                       const std::vector<Matrix>& mu) {
  if (auto s = ruth_shape(r); !s.empty()) throw InvalidInput("ruth shape: " + s.front().message());
  const FinGroupoid& g = r.g;
  if (theta1.size() != g.num_objects() || theta0.size() != g.num_objects() || mu.size() != g.num_arrows())
    throw InvalidInput("transport: one theta per object and one mu per arrow are required");
  std::vector<Matrix> inv1, inv0;
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    inv1.push_back(inverse(theta1[x]));
    inv0.push_back(inverse(theta0[x]));
  }
  Ruth2 t{g, r.v, {}, {}, {}, {}};
  for (std::size_t x = 0; x < g.num_objects(); ++x) t.d.push_back(theta0[x] * r.d[x] * inv1[x]);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t x = std::size_t(g.src[a]), y = std::size_t(g.tgt[a]);
    t.rho1.push_back((theta1[y] * r.rho1[a] - mu[a] * r.d[x]) * inv1[x]);
    t.rho0.push_back((theta0[y] * r.rho0[a] - t.d[y] * mu[a]) * inv0[x]);
  }
  for (auto [h, k] : g.composable_pairs()) {
    const std::size_t x = std::size_t(g.src[std::size_t(k)]), z = std::size_t(g.tgt[std::size_t(h)]);
    const std::size_t hk = std::size_t(g.compose(h, k));
    const Matrix sum = theta1[z] * r.gamma.at({h, k}) + mu[std::size_t(h)] * r.rho0[std::size_t(k)] +
                       t.rho1[std::size_t(h)] * mu[std::size_t(k)] - mu[hk];
    t.gamma.emplace(std::pair{h, k}, sum * inv0[x]);
  }
  return RuthMorphism{r, std::move(t), theta1, theta0, mu};
}

Report verify_lax_equivalence(const LaxEquivalenceGL& e) {
  Report out = prefixed(verify_pseudofunctor(e.src), "source");
  append(out, prefixed(verify_pseudofunctor(e.dst), "target"));
  if (!out.empty()) return out;
  if (!(e.src.g == e.dst.g)) {
    out.push_back({"transformation shape", "lax transformation", "functors live over different groupoids"});
    return out;
  }
  append(out, verify_lax_transformation(GLHandle{}, e.src.F, e.dst.F, e.T));
  return out;
}

LaxEquivalenceGL morphism_to_lax_unchecked(const RuthMorphism& m) {
  LaxEquivalenceGL e{ruth_to_pseudofunctor_unchecked(m.src), ruth_to_pseudofunctor_unchecked(m.dst), {}};
  const FinGroupoid& g = m.src.g;
  if (!(g == m.dst.g) || m.theta1.size() != g.num_objects() || m.theta0.size() != g.num_objects() ||
      m.mu.size() != g.num_arrows())
    throw InvalidInput("morphism shape: components do not match the groupoid");
  for (std::size_t x = 0; x < g.num_objects(); ++x)
    e.T.on_objects.push_back(GLArrow{e.src.F.on_objects[x], e.dst.F.on_objects[x], m.theta1[x], m.theta0[x]});
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const GLArrow& Hx = e.T.on_objects[std::size_t(g.src[a])];
    const GLArrow& Hy = e.T.on_objects[std::size_t(g.tgt[a])];
    const GLArrow& phi = e.src.F.on_arrows[a];
    const GLArrow& psi = e.dst.F.on_arrows[a];
    GLArrow from{phi.src, Hy.dst, Hy.a1 * phi.a1, Hy.a0 * phi.a0};
    GLArrow to{Hx.src, psi.dst, psi.a1 * Hx.a1, psi.a0 * Hx.a0};
    e.T.on_arrows.push_back(GL2Cell{std::move(from), std::move(to), m.mu[a]});
  }
  return e;
}

LaxEquivalenceGL morphism_to_lax_equivalence(const RuthMorphism& m) {
  if (auto v = verify_morphism(m); !v.empty()) throw InvalidInput("not a morphism: " + v.front().message());
  for (std::size_t x = 0; x < m.theta1.size(); ++x)
    GLArrow::make(m.src.object(int(x)), m.dst.object(int(x)), m.theta1[x], m.theta0[x]);
  return morphism_to_lax_unchecked(m);
}

RuthMorphism lax_equivalence_to_morphism(const LaxEquivalenceGL& e) {
  if (auto v = verify_lax_equivalence(e); !v.empty())
    throw InvalidInput("not a lax equivalence: " + v.front().message());
  RuthMorphism m{pseudofunctor_to_ruth(e.src), pseudofunctor_to_ruth(e.dst), {}, {}, {}};
  for (const auto& H : e.T.on_objects) {
    m.theta1.push_back(H.a1);
    m.theta0.push_back(H.a0);
  }
  for (const auto& c : e.T.on_arrows) m.mu.push_back(c.R);
  return m;
}

}  // namespace gl2
