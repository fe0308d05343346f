#pragma once

// Finite groupoids given by composition tables, and their nerves.

#include <cstddef>
#include <string>
#include <vector>

#include "gl2/error.hpp"
#include "gl2/group.hpp"

namespace gl2 {

/// Objects and arrows are indices. comp[h * arrows + g] is h g when
/// src(h) == tgt(g) and -1 otherwise.
struct FinGroupoid {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt;
  std::vector<int> comp;
  std::vector<int> unit;  // object -> identity arrow
  std::vector<int> inv;

  std::size_t num_objects() const { return objects.size(); }
  std::size_t num_arrows() const { return arrows.size(); }
  int compose(int h, int g) const { return comp[std::size_t(h) * arrows.size() + std::size_t(g)]; }
  bool composable(int h, int g) const { return src[std::size_t(h)] == tgt[std::size_t(g)]; }
  bool is_unit(int a) const { return unit[std::size_t(src[std::size_t(a)])] == a; }
  int object_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  /// Composable pairs (h, g) with src(h) == tgt(g), in lexicographic order.
  std::vector<std::pair<int, int>> composable_pairs() const;
  struct Triple {
    int h, g, f;
  };
  std::vector<Triple> composable_triples() const;

  friend bool operator==(const FinGroupoid&, const FinGroupoid&) = default;
};

/// Every violated category or groupoid law.
Report verify_groupoid(const FinGroupoid& g);

/// Arrows (y, x) named "y<-x"; arrow index = y * n + x.
FinGroupoid pair_groupoid(const std::vector<std::string>& points);
FinGroupoid pair_groupoid(std::size_t n);
/// action[g * set_size + x] = g.x. Arrows (g, x) : x -> g.x, index g * set_size + x.
/// Throws InvalidInput when the table is not a left action.
FinGroupoid action_groupoid(const FiniteGroup& group, std::size_t set_size, const std::vector<int>& action);
/// Group acting on itself by left translation.
FinGroupoid translation_groupoid(const FiniteGroup& group);
/// Group as a one-object groupoid.
FinGroupoid one_object_groupoid(const FiniteGroup& group);

/// The functor a -> (tgt a, src a) into the pair groupoid on the same objects.
struct PairProjection {
  FinGroupoid pair;
  std::vector<int> on_arrows;
};
PairProjection projection_to_pair(const FinGroupoid& g);
bool is_functor(const FinGroupoid& a, const FinGroupoid& b, const std::vector<int>& on_objects,
                const std::vector<int>& on_arrows);
/// Which arrows of the pair groupoid lie in the image of the projection.
std::vector<bool> projection_image(const FinGroupoid& g);
/// Orbits (connected components) of the groupoid, each as a sorted object list.
std::vector<std::vector<int>> components(const FinGroupoid& g);

/// An n-simplex of the nerve: arrows a_1 .. a_n with src(a_{i+1}) == tgt(a_i)
/// starting at `base`. For n == 0 only `base` matters.
struct Chain {
  int base = 0;
  std::vector<int> arrows;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

std::vector<Chain> nerve1(const FinGroupoid& g, std::size_t n);
/// d_i for 0 <= i <= n: drops the first / last arrow or composes a pair.
Chain face(const FinGroupoid& g, const Chain& c, std::size_t i);
/// s_j for 0 <= j <= n: inserts the identity at vertex j.
Chain degeneracy(const FinGroupoid& g, const Chain& c, std::size_t j);
/// Vertex objects x_0 .. x_n of a chain.
std::vector<int> vertices(const FinGroupoid& g, const Chain& c);
/// Checks all simplicial identities on every chain of levels <= max_level.
Report verify_simplicial_identities(const FinGroupoid& g, std::size_t max_level);

}  // namespace gl2
