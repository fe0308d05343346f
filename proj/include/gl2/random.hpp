#pragma once

// Seeded random generators for matrices, GL(V) data, simplices and RUTHs.
// Entries are small rationals so that exact arithmetic stays cheap.

#include <cstdint>
#include <random>
#include <vector>

#include "gl2/gl.hpp"
#include "gl2/nerve.hpp"
#include "gl2/ruth.hpp"

namespace gl2 {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  /// An integer in [-2, 2], halved with probability 1/4.
  Rational small();
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, std::size_t n);
/// A differential of the given rank, spread by random changes of basis.
Fiber2 random_fiber(Rng& rng, std::size_t dim1, std::size_t dim0, std::size_t rank);
/// A random element of the space of chain maps src -> dst.
ChainMap2 random_chain_map(Rng& rng, const Fiber2& src, const Fiber2& dst);

/// A fiber isomorphic to (h1 -> 0) + (h0) + c copies of id, recorded with
/// the change of basis: d = q0 * standard * q1^-1.
struct PresentedFiber {
  std::size_t h1 = 0, h0 = 0, c = 0;
  Matrix q1, q0;
  Fiber2 fiber;
};
PresentedFiber random_presented_fiber(Rng& rng, std::size_t h1, std::size_t h0, std::size_t c);
/// A random quasi-isomorphism x -> y (the homology dimensions must agree):
/// an isomorphism on homology, anything on the contractible parts, then a
/// random homotopy shift.
GLArrow random_gl_arrow(Rng& rng, const std::string& xp, const PresentedFiber& x, const std::string& yp,
                        const PresentedFiber& y);
/// A random cell into b, resp. out of a.
GL2Cell random_cell_into(Rng& rng, const GLArrow& b);
GL2Cell random_cell_from(Rng& rng, const GLArrow& a);

/// Homology (h1, h0) and contractible sizes bounded so that both fiber
/// dimensions stay <= max_dim.
struct FiberShape {
  std::size_t h1, h0, max_dim;
};
PresentedFiber random_presented_fiber(Rng& rng, const FiberShape& shape);
/// A valid n-simplex of the nerve of GL(V) with vertices "p0", "p1", ...,
/// built by extending a random face through the filtration stages.
Simplex<GLHandle> random_gl_simplex(Rng& rng, std::size_t n, const FiberShape& shape);

/// Identity on units, random elsewhere; dims constant on components.
PseudoRep random_pseudo_rep(Rng& rng, const FinGroupoid& g, std::size_t max_dim);
/// A strict representation with d = A D B^-1, rho1 = B_y B_x^-1, rho0 = A_y A_x^-1.
Ruth2 random_strict_ruth(Rng& rng, const FinGroupoid& g, std::size_t max_dim);
/// Random invertible theta and random mu (zero on units).
RuthMorphism random_transport(Rng& rng, const Ruth2& r);
/// A strict or doubled RUTH transported along a random morphism.
Ruth2 random_ruth(Rng& rng, const FinGroupoid& g, std::size_t max_dim);
/// theta arbitrary per object, mu(g) = theta_y rho(g) - rho'(g) theta_x.
RuthMorphism random_doubling_morphism(Rng& rng, const PseudoRep& p, const PseudoRep& q);

/// Square data with random diagonals for a lax transformation.
HomotopyData<GLHandle> random_homotopy_data(Rng& rng, const LaxFunctor<GLHandle>& phi,
                                            const LaxTransformation<GLHandle>& T);

}  // namespace gl2
