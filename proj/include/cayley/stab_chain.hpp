#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cayley/bigint.hpp"
#include "cayley/permutation.hpp"

namespace cayley {

/// Deterministic Schreier-Sims stabilizer chain.
///
/// Level i stores a base point b_i, the strong generators fixing b_0..b_{i-1},
/// the basic orbit of b_i and a transversal u_x with u_x(b_i) = x. New base
/// points are the smallest point moved by the residue that needed them, unless
/// a base prefix was requested.
class StabChain {
 public:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;                 // BFS order, orbit[0] == base
    std::vector<std::int32_t> orbit_slot;     // point -> index in orbit, or -1
    std::vector<Permutation> transversal;     // parallel to orbit
  };

  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  /// Strips p through the chain starting at `from_level`. Returns the residue
  /// and the level where it dropped out (levels().size() if it passed all).
  std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from_level = 0) const;
  bool contains(const Permutation& p) const;

  /// Strong generators of the pointwise stabilizer of the first `depth` base
  /// points.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;

 private:
  // Inserts g into the generator sets of levels first..drop.
  void add_generator(std::size_t first, std::size_t drop, const Permutation& g);
  void extend_orbit(Level& level, std::size_t first_new_gen, std::size_t& first_new_point);
  Level make_level(Point base) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace cayley
