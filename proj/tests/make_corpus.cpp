// Writes the CLI fixture corpus: valid documents and deliberately broken
// variants. Run as `make_corpus DIR`; manifest.json in DIR is maintained by hand.

#include <algorithm>
#include <iostream>

#include "gl2/io.hpp"
#include "gl2/random.hpp"
#include "support.hpp"

using namespace gl2;

namespace {

std::string dir;

void emit(const std::string& name, const std::string& kind, const Json& payload) {
  write_text_file(dir + "/" + name, render_document(kind, payload));
}

Json horn_json(const Simplex<GLHandle>& s, std::size_t k) {
  Json j = gl_simplex_to_json(horn_of(s, k).data);
  j["k"] = k;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus DIR\n";
    return 2;
  }
  dir = argv[1];
  Rng rng(2024);

  // Representations up to homotopy and their pseudo-functors.
  Ruth2 r = random_ruth(rng, pair_groupoid(3), 2);
  emit("ruth_pair3.json", "ruth", ruth_to_json(r));
  emit("functor_pair3.json", "functor", functor_to_json(ruth_to_pseudofunctor(r)));
  // Nonzero homology in both degrees everywhere, so central shifts exist.
  Ruth2 rt;
  std::vector<HomologyDims> hom;
  do {
    rt = random_ruth(rng, translation_groupoid(cyclic_group(3)), 2);
    hom = pointwise_homology(rt);
  } while (!std::all_of(hom.begin(), hom.end(), [](const HomologyDims& h) { return h.h1 > 0 && h.h0 > 0; }));
  emit("ruth_translation_z3.json", "ruth", ruth_to_json(rt));

  // A cycle added to gamma keeps its homotopy equations and breaks the cocycle.
  Ruth2 bad_gamma = rt;
  const std::pair<int, int> pair{4, 3};  // 1 -> 2 after 0 -> 1 in the translation groupoid
  auto& gm = bad_gamma.gamma.at(pair);
  gm = gm + *support::central_shift(rt.object(rt.g.src[3]), rt.object(rt.g.tgt[4]));
  emit("bad_ruth_gamma.json", "ruth", ruth_to_json(bad_gamma));
  Ruth2 bad_chain = r;
  bad_chain.rho1[std::size_t(r.g.arrow_index("p2<-p0"))](0, 0) += 1;
  emit("bad_ruth_chain.json", "ruth", ruth_to_json(bad_chain));

  auto bad_functor = ruth_to_pseudofunctor(rt);
  auto& sc = bad_functor.F.structure.at(pair);
  sc = support::shifted(sc, *support::central_shift(sc.from.src, sc.from.dst));
  emit("bad_functor_structure.json", "functor", functor_to_json(bad_functor));

  // Morphisms and lax equivalences.
  RuthMorphism m = random_transport(rng, rt);
  emit("morphism_transport.json", "morphism", morphism_to_json(m));
  emit("transformation_transport.json", "transformation", transformation_to_json(morphism_to_lax_equivalence(m)));
  RuthMorphism bad_m = m;
  bad_m.mu[4](0, 0) += 1;
  emit("bad_morphism_mu.json", "morphism", morphism_to_json(bad_m));
  auto bad_t = morphism_to_lax_equivalence(m);
  for (std::size_t a = 0; a < rt.g.num_arrows(); ++a) {
    if (rt.g.is_unit(int(a))) continue;
    auto& cell = bad_t.T.on_arrows[a];
    if (auto z = support::central_shift(cell.from.src, cell.from.dst)) {
      cell = support::shifted(cell, *z);
      break;
    }
  }
  // Valid, but theta = 0 is not a quasi-isomorphism when homology is nonzero.
  RuthMorphism zero{rt, rt, {}, {}, {}};
  for (int x = 0; x < int(rt.g.num_objects()); ++x) {
    zero.theta1.push_back(Matrix::zero(rt.d[std::size_t(x)].cols(), rt.d[std::size_t(x)].cols()));
    zero.theta0.push_back(Matrix::zero(rt.d[std::size_t(x)].rows(), rt.d[std::size_t(x)].rows()));
  }
  for (std::size_t a = 0; a < rt.g.num_arrows(); ++a)
    zero.mu.push_back(Matrix::zero(rt.d[std::size_t(rt.g.tgt[a])].cols(), rt.d[std::size_t(rt.g.src[a])].rows()));
  emit("morphism_zero.json", "morphism", morphism_to_json(zero));
  emit("bad_transformation_prism.json", "transformation", transformation_to_json(bad_t));

  // Simplices and horns in GL(V).
  Simplex<GLHandle> s3 = random_gl_simplex(rng, 3, {1, 1, 3});
  Simplex<GLHandle> s4 = random_gl_simplex(rng, 4, {1, 0, 3});
  emit("simplex_gl3.json", "simplex", gl_simplex_to_json(s3));
  emit("simplex_gl4.json", "simplex", gl_simplex_to_json(s4));
  emit("horn_gl3_0.json", "horn", horn_json(s3, 0));
  emit("horn_gl3_3.json", "horn", horn_json(s3, 3));
  emit("horn_gl2_2.json", "horn", horn_json(face(GLHandle{}, s3, 1), 2));
  auto bad_s3 = s3;
  support::perturb_triangle(bad_s3, {3, 1, 0});
  emit("bad_simplex_gl3.json", "simplex", gl_simplex_to_json(bad_s3));
  Json bad_horn = horn_json(s3, 1);
  bad_horn["triangles"].erase(0);
  emit("bad_horn_missing_triangle.json", "horn", bad_horn);

  // Table 2-categories.
  Fin2Cat cm = crossed_module_2groupoid(cyclic_group(4), {0, 2}).cat;
  emit("twocat_crossed_module.json", "two-category", twocat_to_json({cm, true}));
  TableHandle th(cm);
  emit("simplex_table3.json", "simplex", table_simplex_to_json(cm, enumerate_nerve(th, 3).at(17)));
  emit("bad_twocat_s3.json", "two-category", twocat_to_json({delooping_table(symmetric3()), true}));
  emit("bad_twocat_boolean.json", "two-category", twocat_to_json({delooping_table(boolean_monoid()), true}));
  emit("twocat_boolean.json", "two-category", twocat_to_json({delooping_table(boolean_monoid()), false}));

  // Plain groupoids, bundles and pseudo-representations.
  FinGroupoid g = pair_groupoid(3);
  const int a10 = g.arrow_index("p1<-p0"), a21 = g.arrow_index("p2<-p1");
  g.comp[std::size_t(a21) * g.num_arrows() + std::size_t(a10)] = g.arrow_index("p2<-p2");
  emit("bad_groupoid_composite.json", "groupoid", groupoid_to_json(g));
  emit("bundle.json", "bundle", bundle_to_json(GradedBundle({"a", "b"}, {{1, 2}, {2, 1}})));
  PseudoRep p = lines_projection_pseudo_rep({{1, 0}, {1, 1}});
  p.rho[std::size_t(p.g.unit[0])] = Matrix{{2}};
  emit("bad_pseudo_rep_unit.json", "pseudo-rep", pseudo_rep_to_json(p));
  return 0;
}
