// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "gl2/io.hpp"
#include "gl2/lax.hpp"
#include "gl2/random.hpp"
#include "gl2/ruth.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gl2;
namespace fs = std::filesystem;

namespace {

const GLHandle kGL;

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

std::string summary(const Tally& t) {
  std::string s = std::to_string(t.cases) + " checks, " + std::to_string(t.failures) + " failures";
  if (t.failures) s += " (first: " + t.first + ")";
  return s;
}

// Homotopy equations evaluated with the triple-loop product.
bool homotopy_oracle(const ChainMap2& from, const ChainMap2& to, const Matrix& R) {
  return oracle::product(R, from.src.d) == from.a1 - to.a1 && oracle::product(from.dst.d, R) == from.a0 - to.a0;
}

// Quasi-isomorphism through minor ranks of the hand-assembled cone.
bool quasi_iso_oracle(const ChainMap2& m) {
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

bool cocycle_oracle(const Ruth2& r) {
  const auto& g = r.g;
  for (auto [h, k] : g.composable_pairs())
    for (int f = 0; f < int(g.num_arrows()); ++f) {
      if (!g.composable(k, f)) continue;
      Matrix sum = oracle::product(r.rho1[std::size_t(h)], r.gamma.at({k, f})) - r.gamma.at({g.compose(h, k), f}) +
                   r.gamma.at({h, g.compose(k, f)}) - oracle::product(r.gamma.at({h, k}), r.rho0[std::size_t(f)]);
      if (!sum.is_zero()) return false;
    }
  return true;
}

FiberShape random_shape(Rng& rng, std::size_t max_dim) {
  return FiberShape{std::size_t(rng.uniform(0, 1)), std::size_t(rng.uniform(0, 1)), max_dim};
}

// ---------------------------------------------------------------------------

std::string criterion1(Tally& t) {
  Rng rng(1001);
  std::size_t positives = 0;
  while (t.cases < 1500) {
    ChainMap2 m;
    if (rng.coin(0.4)) {
      FiberShape s = random_shape(rng, 4);
      auto px = random_presented_fiber(rng, s), py = random_presented_fiber(rng, s);
      m = random_gl_arrow(rng, "x", px, "y", py).chain_map();
    } else {
      auto dim = [&] { return std::size_t(rng.uniform(0, 4)); };
      std::size_t a = dim(), b = dim(), c = dim(), e = dim();
      Fiber2 x = random_fiber(rng, a, b, std::size_t(rng.uniform(0, int(std::min(a, b)))));
      Fiber2 y = random_fiber(rng, c, e, std::size_t(rng.uniform(0, int(std::min(c, e)))));
      m = random_chain_map(rng, x, y);
    }
    const bool q = kernel_condition(m) && image_condition(m) && m.src.euler() == m.dst.euler();
    const auto hx = homology(m.src), hy = homology(m.dst);
    const auto ind = induced_homology_maps(m);
    const bool homology_iso = hx == hy && is_invertible(ind.h1) && is_invertible(ind.h0);
    const bool agree = q == is_quasi_iso(m) && q == homology_iso && q == is_cone_exact(m) && q == quasi_iso_oracle(m);
    t.check(agree, "chain map " + m.a1.str() + " " + m.a0.str());
    positives += q;
  }
  return std::to_string(positives) + " quasi-isomorphisms among them";
}

std::string criterion2(Tally& t) {
  Rng rng(1002);
  while (t.cases < 1200) {
    FiberShape s = random_shape(rng, 3);
    auto px = random_presented_fiber(rng, s), py = random_presented_fiber(rng, s), pz = random_presented_fiber(rng, s);
    GLArrow f = random_gl_arrow(rng, "x", px, "y", py);
    GLArrow g = random_gl_arrow(rng, "y", py, "z", pz);
    GL2Cell r = random_cell_from(rng, f), r2 = random_cell_from(rng, r.to);
    GL2Cell s1 = random_cell_from(rng, g), s2 = random_cell_from(rng, s1.to);
    const GL2Cell lhs = hcompose(vcompose(s2, s1), vcompose(r2, r));
    const GL2Cell rhs = vcompose(hcompose(s2, r2), hcompose(s1, r));
    // Whiskering formula: (S o Q) has R = S f''.a0 + g.a1 Q.
    const Matrix expected = oracle::product(s1.R + s2.R, r2.to.a0) + oracle::product(g.a1, r.R + r2.R);
    t.check(lhs == rhs && lhs.R == expected &&
                homotopy_oracle(compose(g, f).chain_map(), compose(s2.to, r2.to).chain_map(), expected),
            "interchange square");
  }
  return "exact equality of both sides and the whiskering formula";
}

std::string criterion3(Tally& t) {
  Rng rng(1003);
  std::size_t arrows = 0, horns0 = 0, horns2 = 0;
  for (int i = 0; i < 600; ++i) {
    FiberShape s = random_shape(rng, 3);
    auto px = random_presented_fiber(rng, s), py = random_presented_fiber(rng, s), pz = random_presented_fiber(rng, s);
    GLArrow f = random_gl_arrow(rng, "x", px, "y", py);
    auto q = quasi_inverse(f);
    const auto idx = GLArrow::identity(f.src).chain_map(), idy = GLArrow::identity(f.dst).chain_map();
    t.check(quasi_iso_oracle(q.inverse.chain_map()) && q.eta.to == compose(q.inverse, f) &&
                q.eps.to == compose(f, q.inverse) && homotopy_oracle(idx, q.eta.to.chain_map(), q.eta.R) &&
                homotopy_oracle(idy, q.eps.to.chain_map(), q.eps.R),
            "quasi-inverse");
    ++arrows;

    GLArrow gamma = random_gl_arrow(rng, "x", px, "z", pz);
    auto h0 = fill_horn20(f, gamma);
    t.check(quasi_iso_oracle(h0.arrow.chain_map()) && h0.cell.from == gamma && h0.cell.to == compose(h0.arrow, f) &&
                homotopy_oracle(gamma.chain_map(), compose(h0.arrow, f).chain_map(), h0.cell.R),
            "(2,0)-horn");
    ++horns0;

    GLArrow beta = random_gl_arrow(rng, "y", py, "z", pz);
    auto h2 = fill_horn22(gamma, beta);
    t.check(quasi_iso_oracle(h2.arrow.chain_map()) && h2.cell.from == gamma && h2.cell.to == compose(beta, h2.arrow) &&
                homotopy_oracle(gamma.chain_map(), compose(beta, h2.arrow).chain_map(), h2.cell.R),
            "(2,2)-horn");
    ++horns2;
  }
  return std::to_string(arrows) + " quasi-inverses, " + std::to_string(horns0) + " (2,0)-horns, " +
         std::to_string(horns2) + " (2,2)-horns";
}

template <class H>
void check_fillers(Tally& t, const H& h, const Simplex<H>& s, const std::string& label) {
  for (std::size_t k = 0; k <= s.n; ++k) {
    auto hn = horn_of(s, k);
    auto f = fill_horn(h, hn);
    t.check(validate_simplex(h, f).empty() && horn_of(f, k) == hn && f == s,
            label + " (" + std::to_string(s.n) + "," + std::to_string(k) + ")-horn");
  }
}

std::string criterion4(Tally& t) {
  std::size_t cubes = 0, perturbed = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto d = delooping(cyclic_group(n));
    TableHandle th(d.cat);
    for (const auto& s : enumerate_nerve(th, 3)) check_fillers(t, th, s, "Z/" + std::to_string(n));
    auto level4 = enumerate_nerve(th, 4);
    for (std::size_t i = 0; i < level4.size(); i += (n <= 3 ? 1 : 97)) {
      check_fillers(t, th, level4[i], "Z/" + std::to_string(n));
      t.check(cube_faces(th, level4[i]).failures() == 0, "cube of a delooping simplex");
      ++cubes;
    }
  }
  Rng rng(1004);
  for (int i = 0; i < 40; ++i) {
    auto s3 = random_gl_simplex(rng, 3, random_shape(rng, 3));
    check_fillers(t, kGL, s3, "GL");
  }
  for (int i = 0; i < 120; ++i) {
    auto s = random_gl_simplex(rng, 4, FiberShape{1, std::size_t(rng.uniform(0, 1)), 3});
    check_fillers(t, kGL, s, "GL");
    t.check(cube_faces(kGL, s).failures() == 0, "cube of a GL simplex");
    ++cubes;
    // Perturb-and-compare: a second labelling differs from s somewhere in
    // every horn, and five commuting cube faces never leave the sixth broken.
    auto bad = s;
    auto it = std::next(bad.triangles.begin(), rng.uniform(0, int(bad.triangles.size()) - 1));
    if (!support::perturb_triangle(bad, it->first)) continue;
    ++perturbed;
    ++cubes;
    t.check(cube_faces(kGL, bad).failures() != 1, "cube with exactly one failing face");
    t.check(!validate_simplex(kGL, bad).empty(), "perturbed 4-simplex still validates");
    for (std::size_t k = 0; k <= 4; ++k) t.check(horn_of(bad, k) != horn_of(s, k), "second filler of a 4-horn");
  }
  return std::to_string(cubes) + " cubes, " + std::to_string(perturbed) + " perturbed 4-simplices";
}

template <class H>
void check_filtration(Tally& t, const H& h, const Simplex<H>& s) {
  const int n = int(s.n);
  bool ok = strip(s, 0).data == s;
  for (int k = 0; k + 1 < n; ++k)
    ok = ok && reconstruct(h, strip(s, std::size_t(k + 1)), s.triangles.at({n, k + 1, k})) == strip(s, std::size_t(k));
  if (n >= 2) {
    std::vector<typename H::Cell> alphas;
    for (int k = n - 2; k >= 0; --k) alphas.push_back(s.triangles.at({n, k + 1, k}));
    ok = ok && reconstruct_all(h, strip(s, std::size_t(n - 1)), alphas) == s;
  }
  t.check(ok, "filtration round trip at n = " + std::to_string(n));
}

std::string criterion5(Tally& t) {
  Rng rng(1005);
  std::size_t gl = 0, table = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int i = 0; i < 40; ++i, ++gl) check_filtration(t, kGL, random_gl_simplex(rng, n, random_shape(rng, 3)));
  for (auto cat : {crossed_module_2groupoid(cyclic_group(4), {0, 2}).cat, delooping(cyclic_group(3)).cat,
                   chaotic_2groupoid(boolean_monoid()).cat}) {
    TableHandle th(cat);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto all = enumerate_nerve(th, n);
      for (std::size_t i = 0; i < all.size(); i += std::max<std::size_t>(1, all.size() / 15), ++table)
        check_filtration(t, th, all[i]);
    }
  }
  return std::to_string(gl) + " GL(V) simplices, " + std::to_string(table) + " table simplices";
}

std::vector<std::string> wheres(const Report& r) {
  std::vector<std::string> out;
  for (const auto& v : r) out.push_back(v.where);
  return out;
}

std::string criterion6(Tally& t) {
  Rng rng(1006);
  const std::vector<FinGroupoid> bases{pair_groupoid(3), translation_groupoid(cyclic_group(3))};
  std::size_t valid = 0, perturbed = 0, nonempty = 0;
  for (int i = 0; i < 300; ++i) {
    const FinGroupoid& g = bases[std::size_t(i % 2)];
    Ruth2 r = random_ruth(rng, g, 2);
    auto p = ruth_to_pseudofunctor(r);
    auto m = random_transport(rng, r);
    auto e = morphism_to_lax_equivalence(m);
    t.check(verify_ruth(r).empty() && cocycle_oracle(r) && verify_pseudofunctor(p).empty() &&
                verify_morphism(m).empty() && verify_lax_equivalence(e).empty(),
            "random instance is valid");
    t.check(pseudofunctor_to_ruth(p) == r && ruth_to_pseudofunctor(pseudofunctor_to_ruth(p)) == p,
            "ruth / pseudo-functor round trip");
    t.check(lax_equivalence_to_morphism(e) == m && morphism_to_lax_equivalence(lax_equivalence_to_morphism(e)) == e,
            "morphism / lax equivalence round trip");
    ++valid;

    // Perturb gamma at a non-unit pair and compare the two reports.
    Ruth2 bad = r;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [key, mat] : bad.gamma)
      if (!g.is_unit(key.first) && !g.is_unit(key.second) && !mat.empty()) pairs.push_back(key);
    if (pairs.empty()) continue;
    auto& gm = bad.gamma.at(pairs[std::size_t(rng.uniform(0, int(pairs.size()) - 1))]);
    gm(std::size_t(rng.uniform(0, int(gm.rows()) - 1)), std::size_t(rng.uniform(0, int(gm.cols()) - 1))) +=
        rng.coin() ? 1 : -2;
    const Report cocycle = filter_rule(verify_ruth(bad), "cocycle equation");
    const Report coherence = coherence_failures(ruth_to_pseudofunctor_unchecked(bad));
    t.check(wheres(cocycle) == wheres(coherence) && cocycle == cocycle_failures(bad) &&
                cocycle.empty() == cocycle_oracle(bad),
            "cocycle and coherence reports disagree");
    ++perturbed;
    nonempty += !cocycle.empty();
  }
  return std::to_string(valid) + " valid instances, " + std::to_string(perturbed) + " perturbed (" +
         std::to_string(nonempty) + " with failing triples)";
}

std::string criterion7(Tally& t) {
  Rng rng(1007);
  const std::vector<std::vector<std::vector<Rational>>> line_sets{
      {{1, 0}, {1, 1}, {2, 1}}, {{1, 0}, {1, 1}, {1, 2}, {3, 1}}, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
  for (const auto& lines : line_sets) {
    PseudoRep p = lines_projection_pseudo_rep(lines);
    for (std::size_t x = 0; x < lines.size(); ++x)
      for (std::size_t y = 0; y < lines.size(); ++y) {
        Rational dot = 0, norm = 0;
        for (std::size_t c = 0; c < lines[x].size(); ++c) {
          dot += lines[x][c] * lines[y][c];
          norm += lines[y][c] * lines[y][c];
        }
        const int a = p.g.arrow_index("l" + std::to_string(y) + "<-l" + std::to_string(x));
        t.check(p.rho[std::size_t(a)] == Matrix{{dot / norm}}, "projection scalar");
      }
    Ruth2 r = double_pseudo_rep(p);
    t.check(verify_ruth(r).empty() && is_acyclic(r) && cocycle_oracle(r), "doubling of a lines projection");
  }
  std::size_t randoms = 0;
  const std::vector<FinGroupoid> bases{pair_groupoid(3), translation_groupoid(cyclic_group(3)),
                                       action_groupoid(cyclic_group(2), 3, {0, 1, 2, 1, 0, 2})};
  for (int i = 0; i < 120; ++i, ++randoms) {
    Ruth2 r = double_pseudo_rep(random_pseudo_rep(rng, bases[std::size_t(i % 3)], 2));
    t.check(verify_ruth(r).empty() && is_acyclic(r) && cocycle_oracle(r), "doubling of a random pseudo-rep");
  }
  return std::to_string(line_sets.size()) + " line configurations, " + std::to_string(randoms) +
         " random pseudo-representations";
}

LaxFunctor<TableHandle> identity_functor(const Fin2Cat& c) {
  LaxFunctor<TableHandle> F{c, {}, {}, {}, {}};
  for (int x = 0; x < int(c.num_objects()); ++x) F.on_objects.push_back(x);
  for (int a = 0; a < int(c.num_arrows()); ++a) F.on_arrows.push_back(a);
  for (int k = 0; k < int(c.num_cells()); ++k) F.on_cells.push_back(k);
  for (auto [g, f] : lax_detail::composable_pairs(c))
    F.structure.emplace(std::pair{g, f}, c.unit_cell[std::size_t(c.compose(g, f))]);
  return F;
}

std::string criterion8(Tally& t, const fs::path& corpus) {
  std::size_t fixtures = 0;
  // Table fixtures: identity functors and normalized cocycles into deloopings.
  std::vector<Fin2Cat> cats{crossed_module_2groupoid(cyclic_group(4), {0, 2}).cat,
                            chaotic_2groupoid(boolean_monoid()).cat, from_groupoid(pair_groupoid(2)),
                            delooping_table(boolean_monoid())};
  for (std::size_t n = 1; n <= 4; ++n) cats.push_back(delooping(cyclic_group(n)).cat);
  for (const auto& c : cats) {
    TableHandle th(c);
    auto F = identity_functor(c);
    auto S = lax_to_simplicial(th, F);
    t.check(verify_simplicial_map(th, S, 3).empty() && simplicial_to_lax(th, S, 3) == F, "identity functor");
    LaxTransformation<TableHandle> T{F.on_arrows, {}};
    T.on_objects.clear();
    for (int x = 0; x < int(c.num_objects()); ++x) T.on_objects.push_back(c.unit_arrow[std::size_t(x)]);
    for (int a = 0; a < int(c.num_arrows()); ++a) T.on_arrows.push_back(c.unit_cell[std::size_t(a)]);
    t.check(verify_lax_transformation(th, F, F, T).empty() &&
                homotopy_to_lax_transformation(th, F, F, lax_transformation_to_homotopy(th, F, T)) == T,
            "identity transformation");
    ++fixtures;
  }
  Fin2Cat z2 = from_groupoid(one_object_groupoid(cyclic_group(2)));
  for (std::size_t n = 2; n <= 6; ++n) {
    Fin2Cat target = delooping(cyclic_group(n)).cat;
    TableHandle th(target);
    for (int v = 0; v < int(n); ++v) {
      LaxFunctor<TableHandle> F{z2, {0}, {0, 0}, {0, 0}, {}};
      for (auto [g, f] : lax_detail::composable_pairs(z2)) F.structure.emplace(std::pair{g, f}, g == 1 && f == 1 ? v : 0);
      auto S = lax_to_simplicial(th, F);
      t.check(simplicial_to_lax(th, S) == F, "cocycle functor");
      ++fixtures;
    }
  }
  // GL fixtures from the corpus.
  for (const char* name : {"functor_pair3.json", "functor_doubling_lines.json"}) {
    auto p = functor_from_json(parse_document(read_text_file((corpus / name).string())).payload);
    auto S = lax_to_simplicial(kGL, p.F);
    t.check(verify_simplicial_map(kGL, S, 4).empty() && simplicial_to_lax(kGL, S, 3) == p.F, name);
    ++fixtures;
  }
  {
    auto e = transformation_from_json(
        parse_document(read_text_file((corpus / "transformation_transport.json").string())).payload);
    auto D = lax_transformation_to_homotopy(kGL, e.src.F, e.T);
    t.check(homotopy_to_lax_transformation(kGL, e.src.F, e.dst.F, D) == e.T, "corpus transformation");
    ++fixtures;
  }
  // Random lax equivalences: H_f = upper . lower^-1 inverts the forward translation.
  Rng rng(1008);
  std::size_t randoms = 0;
  for (int i = 0; i < 110; ++i, ++randoms) {
    Ruth2 r = random_ruth(rng, i % 2 ? pair_groupoid(3) : translation_groupoid(cyclic_group(3)), 2);
    auto e = morphism_to_lax_equivalence(random_transport(rng, r));
    auto D = lax_transformation_to_homotopy(kGL, e.src.F, e.T);
    auto D2 = random_homotopy_data(rng, e.src.F, e.T);
    t.check(homotopy_to_lax_transformation(kGL, e.src.F, e.dst.F, D) == e.T &&
                homotopy_to_lax_transformation(kGL, e.src.F, e.dst.F, D2) == e.T &&
                verify_homotopy_squares(kGL, e.src.F, e.dst.F, D2).empty(),
            "random lax equivalence");
  }
  return std::to_string(fixtures) + " finite fixtures, " + std::to_string(randoms) + " random lax equivalences";
}

struct RunResult {
  int status = -1;
  std::string output;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

RunResult run_cli(const std::vector<std::string>& args, const fs::path& cwd) {
  std::string cmd = "cd " + quote(cwd.string()) + " && " + quote(GL2_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string criterion9(Tally& t, const fs::path& corpus) {
  const Json manifest = Json::parse(read_text_file((corpus / "manifest.json").string()));
  for (const auto& e : manifest.at("entries")) {
    const auto args = e.at("args").get<std::vector<std::string>>();
    const auto res = run_cli(args, corpus);
    std::string label;
    for (const auto& a : args) label += a + " ";
    t.check(res.status == e.at("exit").get<int>() &&
                res.output.find(e.at("contains").get<std::string>()) != std::string::npos,
            label + "-> exit " + std::to_string(res.status) + ": " + res.output.substr(0, 200));
  }
  // Round trips through the CLI are byte-identical.
  const fs::path tmp = fs::temp_directory_path() / ("gl2_acceptance_" + std::to_string(getpid()));
  fs::create_directories(tmp);
  for (const auto& rt : manifest.at("round_trips")) {
    const std::string file = rt.at("file"), once = (tmp / "once.json").string(), twice = (tmp / "twice.json").string();
    const auto a = run_cli({"convert", rt.at("direction"), file, "--out", once}, corpus);
    const auto b = run_cli({"convert", rt.at("back"), once, "--out", twice}, corpus);
    const auto v = run_cli({"verify", once}, corpus);
    t.check(a.status == 0 && b.status == 0 && v.status == 0 &&
                read_text_file(twice) == read_text_file((corpus / file).string()),
            "round trip of " + file);
  }
  // Generated documents verify.
  const std::vector<std::vector<std::string>> gens{{"pair", "--n", "4"},
                                                   {"action", "--group", "S3"},
                                                   {"delooping", "--group", "Z2"},
                                                   {"delooping", "--group", "Z2xZ4"},
                                                   {"lines-projection", "--lines", "1,0;1,1;2,1"},
                                                   {"doubling", "--lines", "1,0;1,1;2,1"}};
  for (const auto& g : gens) {
    const std::string out = (tmp / "generated.json").string();
    std::vector<std::string> args{"generate"};
    args.insert(args.end(), g.begin(), g.end());
    args.insert(args.end(), {"--out", out});
    const auto a = run_cli(args, corpus);
    const auto v = run_cli({"verify", out}, corpus);
    t.check(a.status == 0 && v.status == 0, "generate " + g[0]);
  }
  fs::remove_all(tmp);
  return std::to_string(manifest.at("entries").size()) + " corpus commands";
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path corpus = argc > 1 ? fs::path(argv[1]) : fs::path(GL2_CORPUS_DIR);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::function<std::string(Tally&)>>> criteria{
      {"quasi-isomorphism criterion, homology maps and cone exactness agree", criterion1},
      {"interchange law in GL(V)", criterion2},
      {"quasi-inverses and outer 2-horn fillers", criterion3},
      {"horn fillers, uniqueness and the cube property", criterion4},
      {"filtration strip and reconstruct round trips", criterion5},
      {"representations and pseudo-functors; cocycle vs coherence", criterion6},
      {"doubling of pseudo-representations", criterion7},
      {"lax/simplicial and homotopy/transformation dictionary", [&](Tally& t) { return criterion8(t, corpus); }},
      {"CLI contract on the fixture corpus", [&](Tally& t) { return criterion9(t, corpus); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criteria[i].second(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t.failures == 0 && t.cases > 0;
    if (i == 0 && secs >= 30.0) ok = false;
    all = all && ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
         << summary(t);
    if (!detail.empty()) line << "; " << detail;
    line << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << std::fixed << total << " s" << std::endl;
  return all ? 0 : 1;
}
