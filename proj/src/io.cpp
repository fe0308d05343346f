#include "gl2/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gl2 {

namespace {

void check_fields(const Json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                  const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) throw ParseError(where + ": missing field \"" + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
}

const Json& array_at(const Json& j, const char* key, const std::string& where) {
  const Json& a = j.at(key);
  if (!a.is_array()) throw ParseError(where + ": \"" + key + "\" must be an array");
  return a;
}

std::string string_at(const Json& j, const char* key, const std::string& where) {
  const Json& s = j.at(key);
  if (!s.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string");
  return s.get<std::string>();
}

std::string as_string(const Json& s, const std::string& where) {
  if (!s.is_string()) throw ParseError(where + ": expected a string");
  return s.get<std::string>();
}

std::size_t size_at(const Json& j, const char* key, const std::string& where) {
  const Json& s = j.at(key);
  if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
    throw ParseError(where + ": \"" + key + "\" must be a non-negative integer");
  return s.get<std::size_t>();
}

std::vector<std::string> string_list(const Json& j, const char* key, const std::string& where) {
  std::vector<std::string> out;
  for (const auto& s : array_at(j, key, where)) out.push_back(as_string(s, where + "." + key));
  return out;
}

template <std::size_t N>
std::array<int, N> int_tuple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) throw ParseError(where + ": expected " + std::to_string(N) + " integers");
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number_integer()) throw ParseError(where + ": expected integers");
    out[i] = j[i].get<int>();
  }
  return out;
}

// Name -> index, rejecting duplicates.
std::map<std::string, int> index_names(const std::vector<std::string>& names, const std::string& where) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], int(i)).second) throw ParseError(where + ": duplicate name \"" + names[i] + "\"");
  return out;
}

int lookup(const std::map<std::string, int>& idx, const std::string& name, const std::string& where) {
  auto it = idx.find(name);
  if (it == idx.end()) throw ParseError(where + ": unknown name \"" + name + "\"");
  return it->second;
}

// Reads a list of records keyed by the name field `key`, one per name, in
// index order.
std::vector<const Json*> keyed_records(const Json& list, const char* key, const std::map<std::string, int>& idx,
                                       const std::string& where) {
  if (!list.is_array()) throw ParseError(where + ": expected an array");
  std::vector<const Json*> out(idx.size(), nullptr);
  for (const auto& rec : list) {
    if (!rec.is_object() || !rec.contains(key)) throw ParseError(where + ": record without \"" + key + "\"");
    const std::string name = as_string(rec.at(key), where);
    const int i = lookup(idx, name, where);
    if (out[std::size_t(i)]) throw ParseError(where + ": duplicate record for \"" + name + "\"");
    out[std::size_t(i)] = &rec;
  }
  for (const auto& [name, i] : idx)
    if (!out[std::size_t(i)]) throw ParseError(where + ": missing record for \"" + name + "\"");
  return out;
}

Json pair_json(const FinGroupoid& g, int h, int k) {
  return Json::array({g.arrows[std::size_t(h)], g.arrows[std::size_t(k)]});
}

// Composable pair (h, g) named in j.
std::pair<int, int> pair_from_json(const Json& j, const FinGroupoid& g, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": a pair needs two arrow names");
  const int h = g.arrow_index(as_string(j[0], where)), k = g.arrow_index(as_string(j[1], where));
  if (h < 0 || k < 0) throw ParseError(where + ": unknown arrow in pair");
  if (!g.composable(h, k)) throw ParseError(where + ": pair is not composable");
  return {h, k};
}

// Records keyed by composable pairs, each pair exactly once.
std::map<std::pair<int, int>, const Json*> pair_records(const Json& list, const FinGroupoid& g, const std::string& where) {
  if (!list.is_array()) throw ParseError(where + ": expected an array");
  std::map<std::pair<int, int>, const Json*> out;
  for (const auto& rec : list) {
    if (!rec.is_object() || !rec.contains("pair")) throw ParseError(where + ": record without \"pair\"");
    auto key = pair_from_json(rec.at("pair"), g, where);
    if (!out.emplace(key, &rec).second) throw ParseError(where + ": duplicate pair");
  }
  if (out.size() != g.composable_pairs().size()) throw ParseError(where + ": every composable pair needs a record");
  return out;
}

Json gl_object_json(const GLObject& o) {
  return Json{{"point", o.point}, {"dim1", o.fiber.dim1}, {"dim0", o.fiber.dim0}, {"d", matrix_to_json(o.fiber.d)}};
}

GLObject gl_object_from_json(const Json& j, const std::string& where, std::initializer_list<const char*> extra = {}) {
  std::vector<const char*> req{"point", "dim1", "dim0", "d"};
  req.insert(req.end(), extra.begin(), extra.end());
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> known(req.begin(), req.end());
  for (const char* k : req)
    if (!j.contains(k)) throw ParseError(where + ": missing field \"" + std::string(k) + "\"");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
  const std::size_t d1 = size_at(j, "dim1", where), d0 = size_at(j, "dim0", where);
  return GLObject{string_at(j, "point", where), Fiber2(d1, d0, matrix_from_json(j.at("d"), d0, d1, where + ".d"))};
}

}  // namespace

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  check_fields(j, {"kind", "version", "payload"}, {}, "document");
  const std::string version = string_at(j, "version", "document");
  if (version != kFormatVersion) throw ParseError("document: unsupported version \"" + version + "\"");
  return Document{string_at(j, "kind", "document"), j.at("payload")};
}

std::string render_document(const std::string& kind, const Json& payload) {
  return Json{{"kind", kind}, {"version", kFormatVersion}, {"payload", payload}}.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = j[i][k];
      if (e.is_string())
        m(i, k) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer())
        m(i, k) = parse_rational(std::to_string(e.get<long long>()));
      else
        throw ParseError(where + ": entries must be \"p/q\" strings");
    }
  }
  return m;
}

Json groupoid_to_json(const FinGroupoid& g) {
  Json arrows = Json::array(), comp = Json::array();
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    arrows.push_back({{"name", g.arrows[a]},
                      {"source", g.objects[std::size_t(g.src[a])]},
                      {"target", g.objects[std::size_t(g.tgt[a])]}});
  for (auto [h, k] : g.composable_pairs()) {
    const int c = g.compose(h, k);
    if (c >= 0) comp.push_back(Json::array({g.arrows[std::size_t(h)], g.arrows[std::size_t(k)], g.arrows[std::size_t(c)]}));
  }
  Json units = Json::object();
  for (std::size_t x = 0; x < g.num_objects(); ++x) units[g.objects[x]] = g.arrows[std::size_t(g.unit[x])];
  return Json{{"objects", g.objects}, {"arrows", arrows}, {"units", units}, {"compose", comp}};
}

FinGroupoid groupoid_from_json(const Json& j) {
  const std::string w = "groupoid";
  check_fields(j, {"objects", "arrows", "units", "compose"}, {}, w);
  FinGroupoid g;
  g.objects = string_list(j, "objects", w);
  const auto oidx = index_names(g.objects, w + ".objects");
  for (const auto& a : array_at(j, "arrows", w)) {
    check_fields(a, {"name", "source", "target"}, {}, w + ".arrows");
    g.arrows.push_back(string_at(a, "name", w + ".arrows"));
    g.src.push_back(lookup(oidx, string_at(a, "source", w + ".arrows"), w + ".arrows"));
    g.tgt.push_back(lookup(oidx, string_at(a, "target", w + ".arrows"), w + ".arrows"));
  }
  const auto aidx = index_names(g.arrows, w + ".arrows");
  const std::size_t na = g.num_arrows();
  g.comp.assign(na * na, -1);
  for (const auto& t : array_at(j, "compose", w)) {
    if (!t.is_array() || t.size() != 3) throw ParseError(w + ".compose: entries are [h, g, h g]");
    const int h = lookup(aidx, as_string(t[0], w), w), k = lookup(aidx, as_string(t[1], w), w);
    const int c = lookup(aidx, as_string(t[2], w), w);
    int& slot = g.comp[std::size_t(h) * na + std::size_t(k)];
    if (slot != -1) throw ParseError(w + ".compose: duplicate entry");
    slot = c;
  }
  const Json& units = j.at("units");
  if (!units.is_object() || units.size() != g.num_objects()) throw ParseError(w + ".units: one unit per object");
  g.unit.assign(g.num_objects(), -1);
  for (const auto& [obj, arrow] : units.items())
    g.unit[std::size_t(lookup(oidx, obj, w + ".units"))] = lookup(aidx, as_string(arrow, w + ".units"), w + ".units");
  g.inv.assign(na, -1);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      if (g.src[b] == g.tgt[a] && g.tgt[b] == g.src[a] && g.comp[b * na + a] == g.unit[std::size_t(g.src[a])] &&
          g.comp[a * na + b] == g.unit[std::size_t(g.tgt[a])]) {
        g.inv[a] = int(b);
        break;
      }
  return g;
}

Json bundle_to_json(const GradedBundle& v) {
  Json fibers = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    fibers.push_back({{"point", v.points()[i]}, {"dim1", v.dims(i).first}, {"dim0", v.dims(i).second}});
  return Json{{"fibers", fibers}};
}

GradedBundle bundle_from_json(const Json& j) {
  const std::string w = "bundle";
  check_fields(j, {"fibers"}, {}, w);
  std::vector<std::string> points;
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (const auto& f : array_at(j, "fibers", w)) {
    check_fields(f, {"point", "dim1", "dim0"}, {}, w + ".fibers");
    points.push_back(string_at(f, "point", w));
    dims.emplace_back(size_at(f, "dim1", w), size_at(f, "dim0", w));
  }
  index_names(points, w + ".fibers");
  return GradedBundle(points, dims);
}

Json ruth_to_json(const Ruth2& r) {
  const FinGroupoid& g = r.g;
  Json fibers = Json::array(), arrows = Json::array(), curv = Json::array();
  for (std::size_t x = 0; x < g.num_objects(); ++x) fibers.push_back(gl_object_json(r.object(int(x))));
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    arrows.push_back({{"arrow", g.arrows[a]}, {"rho1", matrix_to_json(r.rho1[a])}, {"rho0", matrix_to_json(r.rho0[a])}});
  for (const auto& [key, m] : r.gamma) curv.push_back({{"pair", pair_json(g, key.first, key.second)}, {"gamma", matrix_to_json(m)}});
  return Json{{"groupoid", groupoid_to_json(g)}, {"fibers", fibers}, {"arrows", arrows}, {"curvature", curv}};
}

Ruth2 ruth_from_json(const Json& j) {
  const std::string w = "ruth";
  check_fields(j, {"groupoid", "fibers", "arrows", "curvature"}, {}, w);
  Ruth2 r;
  r.g = groupoid_from_json(j.at("groupoid"));
  const FinGroupoid& g = r.g;
  const auto& fibers = array_at(j, "fibers", w);
  if (fibers.size() != g.num_objects()) throw ParseError(w + ".fibers: one fiber per object, in object order");
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    GLObject o = gl_object_from_json(fibers[x], w + ".fibers");
    if (o.point != g.objects[x]) throw ParseError(w + ".fibers: fiber " + std::to_string(x) + " is not over " + g.objects[x]);
    dims.emplace_back(o.fiber.dim1, o.fiber.dim0);
    r.d.push_back(o.fiber.d);
  }
  r.v = GradedBundle(g.objects, dims);
  const auto aidx = index_names(g.arrows, w);
  for (std::size_t a = 0; const Json* rec : keyed_records(array_at(j, "arrows", w), "arrow", aidx, w + ".arrows")) {
    const std::string wa = w + ".arrows." + g.arrows[a];
    check_fields(*rec, {"arrow", "rho1", "rho0"}, {}, wa);
    auto [x1, x0] = dims[std::size_t(g.src[a])];
    auto [y1, y0] = dims[std::size_t(g.tgt[a])];
    r.rho1.push_back(matrix_from_json(rec->at("rho1"), y1, x1, wa + ".rho1"));
    r.rho0.push_back(matrix_from_json(rec->at("rho0"), y0, x0, wa + ".rho0"));
    ++a;
  }
  for (const auto& [key, rec] : pair_records(array_at(j, "curvature", w), g, w + ".curvature")) {
    check_fields(*rec, {"pair", "gamma"}, {}, w + ".curvature");
    const std::size_t z1 = dims[std::size_t(g.tgt[std::size_t(key.first)])].first;
    const std::size_t x0 = dims[std::size_t(g.src[std::size_t(key.second)])].second;
    r.gamma.emplace(key, matrix_from_json(rec->at("gamma"), z1, x0, w + ".curvature.gamma"));
  }
  return r;
}

Json functor_to_json(const PseudoFunctorGL& p) {
  const FinGroupoid& g = p.g;
  Json objects = Json::array(), arrows = Json::array(), structure = Json::array();
  for (std::size_t x = 0; x < p.F.on_objects.size(); ++x) {
    Json o = gl_object_json(p.F.on_objects[x]);
    o["object"] = g.objects[x];
    objects.push_back(std::move(o));
  }
  for (std::size_t a = 0; a < p.F.on_arrows.size(); ++a)
    arrows.push_back({{"arrow", g.arrows[a]},
                      {"a1", matrix_to_json(p.F.on_arrows[a].a1)},
                      {"a0", matrix_to_json(p.F.on_arrows[a].a0)}});
  for (const auto& [key, c] : p.F.structure)
    structure.push_back({{"pair", pair_json(g, key.first, key.second)}, {"R", matrix_to_json(c.R)}});
  return Json{{"groupoid", groupoid_to_json(g)}, {"objects", objects}, {"arrows", arrows}, {"structure", structure}};
}

PseudoFunctorGL functor_from_json(const Json& j) {
  const std::string w = "functor";
  check_fields(j, {"groupoid", "objects", "arrows", "structure"}, {}, w);
  PseudoFunctorGL p;
  p.g = groupoid_from_json(j.at("groupoid"));
  const FinGroupoid& g = p.g;
  p.F.source = from_groupoid(g);
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  const auto oidx = index_names(g.objects, w);
  for (const Json* rec : keyed_records(array_at(j, "objects", w), "object", oidx, w + ".objects")) {
    p.F.on_objects.push_back(gl_object_from_json(*rec, w + ".objects", {"object"}));
    dims.emplace_back(p.F.on_objects.back().fiber.dim1, p.F.on_objects.back().fiber.dim0);
  }
  p.v = GradedBundle(g.objects, dims);
  const auto aidx = index_names(g.arrows, w);
  for (std::size_t a = 0; const Json* rec : keyed_records(array_at(j, "arrows", w), "arrow", aidx, w + ".arrows")) {
    const std::string wa = w + ".arrows." + g.arrows[a];
    check_fields(*rec, {"arrow", "a1", "a0"}, {}, wa);
    const GLObject& x = p.F.on_objects[std::size_t(g.src[a])];
    const GLObject& y = p.F.on_objects[std::size_t(g.tgt[a])];
    p.F.on_arrows.push_back(GLArrow{x, y, matrix_from_json(rec->at("a1"), y.fiber.dim1, x.fiber.dim1, wa + ".a1"),
                                    matrix_from_json(rec->at("a0"), y.fiber.dim0, x.fiber.dim0, wa + ".a0")});
    ++a;
  }
  for (const auto& a : p.F.on_arrows) p.F.on_cells.push_back(GL2Cell::unit(a));
  for (const auto& [key, rec] : pair_records(array_at(j, "structure", w), g, w + ".structure")) {
    check_fields(*rec, {"pair", "R"}, {}, w + ".structure");
    const GLArrow& ah = p.F.on_arrows[std::size_t(key.first)];
    const GLArrow& ak = p.F.on_arrows[std::size_t(key.second)];
    GLArrow to{ak.src, ah.dst, ah.a1 * ak.a1, ah.a0 * ak.a0};
    Matrix R = matrix_from_json(rec->at("R"), ah.dst.fiber.dim1, ak.src.fiber.dim0, w + ".structure.R");
    p.F.structure.emplace(key, GL2Cell{p.F.on_arrows[std::size_t(g.compose(key.first, key.second))], std::move(to),
                                       std::move(R)});
  }
  return p;
}

Json pseudo_rep_to_json(const PseudoRep& p) {
  Json dims = Json::array(), arrows = Json::array();
  for (std::size_t x = 0; x < p.dims.size(); ++x) dims.push_back({{"object", p.g.objects[x]}, {"dim", p.dims[x]}});
  for (std::size_t a = 0; a < p.rho.size(); ++a)
    arrows.push_back({{"arrow", p.g.arrows[a]}, {"rho", matrix_to_json(p.rho[a])}});
  return Json{{"groupoid", groupoid_to_json(p.g)}, {"dims", dims}, {"arrows", arrows}};
}

PseudoRep pseudo_rep_from_json(const Json& j) {
  const std::string w = "pseudo-rep";
  check_fields(j, {"groupoid", "dims", "arrows"}, {}, w);
  PseudoRep p;
  p.g = groupoid_from_json(j.at("groupoid"));
  for (const Json* rec : keyed_records(array_at(j, "dims", w), "object", index_names(p.g.objects, w), w + ".dims")) {
    check_fields(*rec, {"object", "dim"}, {}, w + ".dims");
    p.dims.push_back(size_at(*rec, "dim", w + ".dims"));
  }
  for (std::size_t a = 0;
       const Json* rec : keyed_records(array_at(j, "arrows", w), "arrow", index_names(p.g.arrows, w), w + ".arrows")) {
    check_fields(*rec, {"arrow", "rho"}, {}, w + ".arrows");
    p.rho.push_back(matrix_from_json(rec->at("rho"), p.dims[std::size_t(p.g.tgt[a])], p.dims[std::size_t(p.g.src[a])],
                                     w + ".arrows." + p.g.arrows[a]));
    ++a;
  }
  return p;
}

Json morphism_to_json(const RuthMorphism& m) {
  const FinGroupoid& g = m.src.g;
  Json comps = Json::array(), homs = Json::array();
  for (std::size_t x = 0; x < m.theta1.size(); ++x)
    comps.push_back({{"object", g.objects[x]}, {"theta1", matrix_to_json(m.theta1[x])}, {"theta0", matrix_to_json(m.theta0[x])}});
  for (std::size_t a = 0; a < m.mu.size(); ++a) homs.push_back({{"arrow", g.arrows[a]}, {"mu", matrix_to_json(m.mu[a])}});
  return Json{{"source", ruth_to_json(m.src)}, {"target", ruth_to_json(m.dst)}, {"components", comps}, {"homotopies", homs}};
}

RuthMorphism morphism_from_json(const Json& j) {
  const std::string w = "morphism";
  check_fields(j, {"source", "target", "components", "homotopies"}, {}, w);
  RuthMorphism m{ruth_from_json(j.at("source")), ruth_from_json(j.at("target")), {}, {}, {}};
  const FinGroupoid& g = m.src.g;
  if (!(g == m.dst.g)) throw ParseError(w + ": source and target must share the groupoid");
  for (std::size_t x = 0;
       const Json* rec : keyed_records(array_at(j, "components", w), "object", index_names(g.objects, w), w + ".components")) {
    check_fields(*rec, {"object", "theta1", "theta0"}, {}, w + ".components");
    auto [s1, s0] = m.src.v.dims(x);
    auto [t1, t0] = m.dst.v.dims(x);
    m.theta1.push_back(matrix_from_json(rec->at("theta1"), t1, s1, w + ".components.theta1"));
    m.theta0.push_back(matrix_from_json(rec->at("theta0"), t0, s0, w + ".components.theta0"));
    ++x;
  }
  for (std::size_t a = 0;
       const Json* rec : keyed_records(array_at(j, "homotopies", w), "arrow", index_names(g.arrows, w), w + ".homotopies")) {
    check_fields(*rec, {"arrow", "mu"}, {}, w + ".homotopies");
    const std::size_t x0 = m.src.v.dims(std::size_t(g.src[a])).second;
    const std::size_t y1 = m.dst.v.dims(std::size_t(g.tgt[a])).first;
    m.mu.push_back(matrix_from_json(rec->at("mu"), y1, x0, w + ".homotopies.mu"));
    ++a;
  }
  return m;
}

Json transformation_to_json(const LaxEquivalenceGL& e) {
  const FinGroupoid& g = e.src.g;
  Json comps = Json::array(), cells = Json::array();
  for (std::size_t x = 0; x < e.T.on_objects.size(); ++x)
    comps.push_back({{"object", g.objects[x]},
                     {"a1", matrix_to_json(e.T.on_objects[x].a1)},
                     {"a0", matrix_to_json(e.T.on_objects[x].a0)}});
  for (std::size_t a = 0; a < e.T.on_arrows.size(); ++a)
    cells.push_back({{"arrow", g.arrows[a]}, {"R", matrix_to_json(e.T.on_arrows[a].R)}});
  return Json{{"source", functor_to_json(e.src)}, {"target", functor_to_json(e.dst)}, {"components", comps}, {"cells", cells}};
}

LaxEquivalenceGL transformation_from_json(const Json& j) {
  const std::string w = "transformation";
  check_fields(j, {"source", "target", "components", "cells"}, {}, w);
  LaxEquivalenceGL e{functor_from_json(j.at("source")), functor_from_json(j.at("target")), {}};
  const FinGroupoid& g = e.src.g;
  if (!(g == e.dst.g)) throw ParseError(w + ": source and target must share the groupoid");
  for (std::size_t x = 0;
       const Json* rec : keyed_records(array_at(j, "components", w), "object", index_names(g.objects, w), w + ".components")) {
    check_fields(*rec, {"object", "a1", "a0"}, {}, w + ".components");
    const GLObject& s = e.src.F.on_objects[x];
    const GLObject& t = e.dst.F.on_objects[x];
    e.T.on_objects.push_back(GLArrow{s, t, matrix_from_json(rec->at("a1"), t.fiber.dim1, s.fiber.dim1, w + ".components.a1"),
                                     matrix_from_json(rec->at("a0"), t.fiber.dim0, s.fiber.dim0, w + ".components.a0")});
    ++x;
  }
  for (std::size_t a = 0;
       const Json* rec : keyed_records(array_at(j, "cells", w), "arrow", index_names(g.arrows, w), w + ".cells")) {
    check_fields(*rec, {"arrow", "R"}, {}, w + ".cells");
    const GLArrow& Hx = e.T.on_objects[std::size_t(g.src[a])];
    const GLArrow& Hy = e.T.on_objects[std::size_t(g.tgt[a])];
    const GLArrow& phi = e.src.F.on_arrows[a];
    const GLArrow& psi = e.dst.F.on_arrows[a];
    GLArrow from{phi.src, Hy.dst, Hy.a1 * phi.a1, Hy.a0 * phi.a0};
    GLArrow to{Hx.src, psi.dst, psi.a1 * Hx.a1, psi.a0 * Hx.a0};
    Matrix R = matrix_from_json(rec->at("R"), Hy.dst.fiber.dim1, phi.src.fiber.dim0, w + ".cells.R");
    e.T.on_arrows.push_back(GL2Cell{std::move(from), std::move(to), std::move(R)});
    ++a;
  }
  return e;
}

Json twocat_to_json(const TwoCategoryDoc& d) {
  const Fin2Cat& c = d.cat;
  Json arrows = Json::array(), cells = Json::array(), comp = Json::array(), hcomp = Json::array(), vcomp = Json::array();
  for (std::size_t a = 0; a < c.num_arrows(); ++a)
    arrows.push_back({{"name", c.arrows[a]},
                      {"source", c.objects[std::size_t(c.arrow_src[a])]},
                      {"target", c.objects[std::size_t(c.arrow_tgt[a])]}});
  for (std::size_t k = 0; k < c.num_cells(); ++k)
    cells.push_back({{"name", c.cells[k]},
                     {"from", c.arrows[std::size_t(c.cell_from[k])]},
                     {"to", c.arrows[std::size_t(c.cell_to[k])]}});
  const std::size_t na = c.num_arrows(), nc = c.num_cells();
  auto emit = [](Json& out, const std::vector<int>& table, std::size_t n, const std::vector<std::string>& names) {
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t r = 0; r < n; ++r)
        if (int v = table[s * n + r]; v >= 0) out.push_back(Json::array({names[s], names[r], names[std::size_t(v)]}));
  };
  emit(comp, c.arrow_comp, na, c.arrows);
  emit(hcomp, c.cell_hcomp, nc, c.cells);
  emit(vcomp, c.cell_vcomp, nc, c.cells);
  Json ua = Json::object(), uc = Json::object();
  for (std::size_t x = 0; x < c.num_objects(); ++x) ua[c.objects[x]] = c.arrows[std::size_t(c.unit_arrow[x])];
  for (std::size_t a = 0; a < na; ++a) uc[c.arrows[a]] = c.cells[std::size_t(c.unit_cell[a])];
  Json out{{"objects", c.objects}, {"arrows", arrows}, {"cells", cells}, {"unit_arrows", ua}, {"unit_cells", uc},
           {"compose", comp}, {"hcompose", hcomp}, {"vcompose", vcomp}};
  if (d.groupoid) out["groupoid"] = true;
  return out;
}

TwoCategoryDoc twocat_from_json(const Json& j) {
  const std::string w = "two-category";
  check_fields(j, {"objects", "arrows", "cells", "unit_arrows", "unit_cells", "compose", "hcompose", "vcompose"},
               {"groupoid"}, w);
  TwoCategoryDoc d;
  if (j.contains("groupoid")) {
    if (!j.at("groupoid").is_boolean()) throw ParseError(w + ": \"groupoid\" must be a boolean");
    d.groupoid = j.at("groupoid").get<bool>();
  }
  Fin2Cat& c = d.cat;
  c.objects = string_list(j, "objects", w);
  const auto oidx = index_names(c.objects, w + ".objects");
  for (const auto& a : array_at(j, "arrows", w)) {
    check_fields(a, {"name", "source", "target"}, {}, w + ".arrows");
    c.arrows.push_back(string_at(a, "name", w));
    c.arrow_src.push_back(lookup(oidx, string_at(a, "source", w), w + ".arrows"));
    c.arrow_tgt.push_back(lookup(oidx, string_at(a, "target", w), w + ".arrows"));
  }
  const auto aidx = index_names(c.arrows, w + ".arrows");
  for (const auto& k : array_at(j, "cells", w)) {
    check_fields(k, {"name", "from", "to"}, {}, w + ".cells");
    c.cells.push_back(string_at(k, "name", w));
    c.cell_from.push_back(lookup(aidx, string_at(k, "from", w), w + ".cells"));
    c.cell_to.push_back(lookup(aidx, string_at(k, "to", w), w + ".cells"));
  }
  const auto cidx = index_names(c.cells, w + ".cells");
  auto table = [&](const char* key, const std::map<std::string, int>& idx, std::vector<int>& out) {
    const std::size_t n = idx.size();
    out.assign(n * n, -1);
    for (const auto& t : array_at(j, key, w)) {
      const std::string wt = w + "." + key;
      if (!t.is_array() || t.size() != 3) throw ParseError(wt + ": entries are [left, right, result]");
      const int s = lookup(idx, as_string(t[0], wt), wt), r = lookup(idx, as_string(t[1], wt), wt);
      int& slot = out[std::size_t(s) * n + std::size_t(r)];
      if (slot != -1) throw ParseError(wt + ": duplicate entry");
      slot = lookup(idx, as_string(t[2], wt), wt);
    }
  };
  table("compose", aidx, c.arrow_comp);
  table("hcompose", cidx, c.cell_hcomp);
  table("vcompose", cidx, c.cell_vcomp);
  auto units = [&](const char* key, const std::map<std::string, int>& from, const std::map<std::string, int>& to,
                   std::vector<int>& out) {
    const Json& u = j.at(key);
    const std::string wu = w + "." + key;
    if (!u.is_object() || u.size() != from.size()) throw ParseError(wu + ": exactly one entry per element");
    out.assign(from.size(), -1);
    for (const auto& [name, target] : u.items()) out[std::size_t(lookup(from, name, wu))] = lookup(to, as_string(target, wu), wu);
  };
  units("unit_arrows", oidx, aidx, c.unit_arrow);
  units("unit_cells", aidx, cidx, c.unit_cell);
  return d;
}

namespace {

void check_simplex_fields(const Json& j, bool table, const std::string& w) {
  if (table)
    check_fields(j, {"handle", "n", "vertices", "edges", "triangles", "category"}, {"k"}, w);
  else
    check_fields(j, {"handle", "n", "vertices", "edges", "triangles"}, {"k"}, w);
}

template <class H>
void check_keys(const Simplex<H>& s, const std::string& w) {
  const int n = int(s.n);
  if (s.vertices.size() != s.n + 1) throw ParseError(w + ": an n-simplex has n + 1 vertices");
  for (const auto& [key, a] : s.edges)
    if (!(n >= key[0] && key[0] > key[1] && key[1] >= 0)) throw ParseError(w + ": edge key " + key_string(key) + " out of range");
  for (const auto& [key, c] : s.triangles)
    if (!(n >= key[0] && key[0] > key[1] && key[1] > key[2] && key[2] >= 0))
      throw ParseError(w + ": triangle key " + key_string(key) + " out of range");
}

}  // namespace

Json gl_simplex_to_json(const Simplex<GLHandle>& s) {
  Json verts = Json::array(), edges = Json::array(), tris = Json::array();
  for (const auto& v : s.vertices) verts.push_back(gl_object_json(v));
  for (const auto& [key, a] : s.edges)
    edges.push_back({{"key", key}, {"a1", matrix_to_json(a.a1)}, {"a0", matrix_to_json(a.a0)}});
  for (const auto& [key, c] : s.triangles) tris.push_back({{"key", key}, {"R", matrix_to_json(c.R)}});
  return Json{{"handle", "gl"}, {"n", s.n}, {"vertices", verts}, {"edges", edges}, {"triangles", tris}};
}

Simplex<GLHandle> gl_simplex_from_json(const Json& j) {
  const std::string w = "simplex";
  check_simplex_fields(j, false, w);
  Simplex<GLHandle> s;
  s.n = size_at(j, "n", w);
  for (const auto& v : array_at(j, "vertices", w)) s.vertices.push_back(gl_object_from_json(v, w + ".vertices"));
  if (s.vertices.size() != s.n + 1) throw ParseError(w + ": an n-simplex has n + 1 vertices");
  for (const auto& e : array_at(j, "edges", w)) {
    check_fields(e, {"key", "a1", "a0"}, {}, w + ".edges");
    const auto key = int_tuple<2>(e.at("key"), w + ".edges.key");
    if (!(int(s.n) >= key[0] && key[0] > key[1] && key[1] >= 0))
      throw ParseError(w + ": edge key " + key_string(key) + " out of range");
    const GLObject& x = s.vertices[std::size_t(key[1])];
    const GLObject& y = s.vertices[std::size_t(key[0])];
    GLArrow a{x, y, matrix_from_json(e.at("a1"), y.fiber.dim1, x.fiber.dim1, w + ".edges.a1"),
              matrix_from_json(e.at("a0"), y.fiber.dim0, x.fiber.dim0, w + ".edges.a0")};
    if (!s.edges.emplace(key, std::move(a)).second) throw ParseError(w + ": duplicate edge " + key_string(key));
  }
  for (const auto& t : array_at(j, "triangles", w)) {
    check_fields(t, {"key", "R"}, {}, w + ".triangles");
    const auto key = int_tuple<3>(t.at("key"), w + ".triangles.key");
    if (!(int(s.n) >= key[0] && key[0] > key[1] && key[1] > key[2] && key[2] >= 0))
      throw ParseError(w + ": triangle key " + key_string(key) + " out of range");
    const auto ki = s.edges.find({key[0], key[2]}), kj = s.edges.find({key[0], key[1]}), ji = s.edges.find({key[1], key[2]});
    if (ki == s.edges.end() || kj == s.edges.end() || ji == s.edges.end())
      throw ParseError(w + ": triangle " + key_string(key) + " needs its three edges");
    GLArrow to{ji->second.src, kj->second.dst, kj->second.a1 * ji->second.a1, kj->second.a0 * ji->second.a0};
    Matrix R = matrix_from_json(t.at("R"), to.dst.fiber.dim1, to.src.fiber.dim0, w + ".triangles.R");
    if (!s.triangles.emplace(key, GL2Cell{ki->second, std::move(to), std::move(R)}).second)
      throw ParseError(w + ": duplicate triangle " + key_string(key));
  }
  return s;
}

Json table_simplex_to_json(const Fin2Cat& c, const Simplex<TableHandle>& s) {
  Json verts = Json::array(), edges = Json::array(), tris = Json::array();
  for (int v : s.vertices) verts.push_back(c.objects[std::size_t(v)]);
  for (const auto& [key, a] : s.edges) edges.push_back({{"key", key}, {"arrow", c.arrows[std::size_t(a)]}});
  for (const auto& [key, k] : s.triangles) tris.push_back({{"key", key}, {"cell", c.cells[std::size_t(k)]}});
  return Json{{"handle", "table"},   {"n", s.n},           {"vertices", verts},
              {"edges", edges},      {"triangles", tris},  {"category", twocat_to_json(TwoCategoryDoc{c, false})}};
}

Simplex<TableHandle> table_simplex_from_json(const Json& j, const Fin2Cat& c) {
  const std::string w = "simplex";
  check_simplex_fields(j, true, w);
  const auto oidx = index_names(c.objects, w), aidx = index_names(c.arrows, w), cidx = index_names(c.cells, w);
  Simplex<TableHandle> s;
  s.n = size_at(j, "n", w);
  for (const auto& v : array_at(j, "vertices", w)) s.vertices.push_back(lookup(oidx, as_string(v, w), w + ".vertices"));
  for (const auto& e : array_at(j, "edges", w)) {
    check_fields(e, {"key", "arrow"}, {}, w + ".edges");
    const auto key = int_tuple<2>(e.at("key"), w + ".edges.key");
    if (!s.edges.emplace(key, lookup(aidx, string_at(e, "arrow", w), w + ".edges")).second)
      throw ParseError(w + ": duplicate edge " + key_string(key));
  }
  for (const auto& t : array_at(j, "triangles", w)) {
    check_fields(t, {"key", "cell"}, {}, w + ".triangles");
    const auto key = int_tuple<3>(t.at("key"), w + ".triangles.key");
    if (!s.triangles.emplace(key, lookup(cidx, string_at(t, "cell", w), w + ".triangles")).second)
      throw ParseError(w + ": duplicate triangle " + key_string(key));
  }
  check_keys(s, w);
  return s;
}

}  // namespace gl2
