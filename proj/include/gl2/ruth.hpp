#pragma once

// 2-term representations up to homotopy (RUTHs) of finite groupoids, their
// morphisms, and the translation to normal pseudo-functors into GL(V).

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gl2/gl.hpp"
#include "gl2/groupoid.hpp"
#include "gl2/lax.hpp"
#include "gl2/twocat.hpp"

namespace gl2 {

/// (d, rho1, rho0, gamma) over g. gamma(h, g) : V0 at src(g) -> V1 at tgt(h)
/// is keyed by composable pairs (h, g).
struct Ruth2 {
  FinGroupoid g;
  GradedBundle v;  // points are the objects of g, in order
  std::vector<Matrix> d;
  std::vector<Matrix> rho1, rho0;
  std::map<std::pair<int, int>, Matrix> gamma;

  /// Object of GL(V) at x; no checks beyond the bundle dimensions.
  GLObject object(int x) const;
  /// (rho1, rho0) of arrow a as an unchecked GL arrow.
  GLArrow arrow(int a) const;

  friend bool operator==(const Ruth2&, const Ruth2&) = default;
};

/// Every violated RUTH equation. Rules: "shape", "chain condition",
/// "quasi-isomorphism condition", "unit normalization",
/// "curvature homotopy equation", "cocycle equation".
Report verify_ruth(const Ruth2& r);
/// The "cocycle equation" entries alone, computed on shape-valid data even
/// when other equations fail.
Report cocycle_failures(const Ruth2& r);

/// A normal pseudo-functor from g (as a 2-category with unit cells only)
/// into GL(v), with base points respected.
struct PseudoFunctorGL {
  FinGroupoid g;
  GradedBundle v;
  LaxFunctor<GLHandle> F;

  friend bool operator==(const PseudoFunctorGL&, const PseudoFunctorGL&) = default;
};

Report verify_pseudofunctor(const PseudoFunctorGL& p);
/// The "coherence of the structure cells" entries alone.
Report coherence_failures(const PseudoFunctorGL& p);

/// phi0(x) = d, phi1(g) = (rho1, rho0), phi11(h, g) = gamma(h, g). Throws
/// InvalidInput naming the first violated equation.
PseudoFunctorGL ruth_to_pseudofunctor(const Ruth2& r);
/// The same assembly without verification; throws only on shape errors.
PseudoFunctorGL ruth_to_pseudofunctor_unchecked(const Ruth2& r);
Ruth2 pseudofunctor_to_ruth(const PseudoFunctorGL& p);

/// Linear maps rho(g) : E_x -> E_y with rho(id) = id; composition is not required.
struct PseudoRep {
  FinGroupoid g;
  std::vector<std::size_t> dims;
  std::vector<Matrix> rho;

  friend bool operator==(const PseudoRep&, const PseudoRep&) = default;
};

Report verify_pseudo_rep(const PseudoRep& p);
/// d = id, rho1 = rho0 = rho, gamma(h, g) = rho(h g) - rho(h) rho(g).
Ruth2 double_pseudo_rep(const PseudoRep& p);
/// Over the pair groupoid of the lines (points "l0", "l1", ...), rho from
/// line x to line y is the orthogonal projection in the bases v_x, v_y.
/// Throws OrthogonalPair for orthogonal lines, InvalidInput for zero or
/// mismatched vectors.
PseudoRep lines_projection_pseudo_rep(const std::vector<std::vector<Rational>>& lines);

std::vector<HomologyDims> pointwise_homology(const Ruth2& r);
bool is_acyclic(const Ruth2& r);

/// theta : src -> dst per object and mu(g) : V0 at x -> V1' at y per arrow.
struct RuthMorphism {
  Ruth2 src;
  Ruth2 dst;
  std::vector<Matrix> theta1, theta0;
  std::vector<Matrix> mu;

  friend bool operator==(const RuthMorphism&, const RuthMorphism&) = default;
};

/// Rules: "morphism shape", "chain map condition", "unit normalization",
/// "morphism equation in degree 1", "morphism equation in degree 0",
/// "morphism curvature equation"; violations of the endpoints are prefixed
/// with "source" or "target".
Report verify_morphism(const RuthMorphism& m);
bool is_quasi_iso_morphism(const RuthMorphism& m);
RuthMorphism identity_morphism(const Ruth2& r);

/// Transports r along theta1, theta0 (invertible per object) and mu, giving
/// the morphism r -> r' whose target r' is determined by the morphism equations.
RuthMorphism transport(const Ruth2& r, const std::vector<Matrix>& theta1, const std::vector<Matrix>& theta0,
                       const std::vector<Matrix>& mu);

/// A lax transformation between the pseudo-functors of two RUTHs.
struct LaxEquivalenceGL {
  PseudoFunctorGL src;
  PseudoFunctorGL dst;
  LaxTransformation<GLHandle> T;

  friend bool operator==(const LaxEquivalenceGL&, const LaxEquivalenceGL&) = default;
};

Report verify_lax_equivalence(const LaxEquivalenceGL& e);
/// H_x = (theta1, theta0), H_g = mu as H_y phi(g) => psi(g) H_x. Throws
/// InvalidInput for an invalid morphism and NotQuasiIso when some theta is
/// not a quasi-isomorphism.
LaxEquivalenceGL morphism_to_lax_equivalence(const RuthMorphism& m);
/// The assembly alone; only shapes are checked.
LaxEquivalenceGL morphism_to_lax_unchecked(const RuthMorphism& m);
RuthMorphism lax_equivalence_to_morphism(const LaxEquivalenceGL& e);

/// Entries of a report with the given rule.
Report filter_rule(const Report& r, const std::string& rule);

}  // namespace gl2
