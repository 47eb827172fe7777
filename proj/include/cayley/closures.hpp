#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cayley/perm_group.hpp"

namespace cayley {

/// Largest degree accepted for k-tuple work: 64 for k = 3, 256 for k = 2.
std::size_t default_degree_budget(unsigned arity);

/// A colouring of the k-tuples of {0..n-1}. Tuple (x_0, ..., x_{k-1}) has
/// code x_0 n^{k-1} + ... + x_{k-1}. Colours are renumbered on construction
/// so that colour c first appears before colour c + 1 in code order.
class ColoredStructure {
 public:
  ColoredStructure(std::size_t degree, unsigned arity, std::vector<std::uint32_t> colors);

  std::size_t degree() const { return degree_; }
  unsigned arity() const { return arity_; }
  const std::vector<std::uint32_t>& colors() const { return colors_; }
  std::size_t num_colors() const { return num_colors_; }
  std::size_t num_tuples() const { return colors_.size(); }

  std::uint64_t encode(std::span<const Point> tuple) const;
  std::vector<Point> decode(std::uint64_t code) const;
  std::uint32_t color(std::span<const Point> tuple) const { return colors_[encode(tuple)]; }

  friend bool operator==(const ColoredStructure&, const ColoredStructure&) = default;

 private:
  std::size_t degree_;
  unsigned arity_;
  std::vector<std::uint32_t> colors_;
  std::size_t num_colors_ = 0;
};

/// Orbits of G on k-tuples. Throws BudgetExceeded if the degree is over
/// `max_degree` (0 selects default_degree_budget(k)).
ColoredStructure orbit_coloring(const PermGroup& g, unsigned k, std::size_t max_degree = 0);

/// p preserves the colour of every tuple. Throws InvalidArgument on degree mismatch.
bool is_automorphism(const ColoredStructure& s, const Permutation& p);

/// Statistics from the last automorphism search, for transcripts.
struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t refinements = 0;
};

/// Aut(S) by individualization-refinement backtracking.
PermGroup automorphisms(const ColoredStructure& s, std::size_t max_degree = 0,
                        SearchStats* stats = nullptr);

PermGroup k_closure(const PermGroup& g, unsigned k, std::size_t max_degree = 0);
bool is_k_closed(const PermGroup& g, unsigned k, std::size_t max_degree = 0);

}  // namespace cayley
