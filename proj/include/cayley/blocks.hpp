#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayley/perm_group.hpp"

namespace cayley {

using Cell = std::vector<Point>;

/// A partition of {0..n-1} into cells of equal size. Cells are sorted and
/// ordered by their smallest point, so equality is structural.
class BlockSystem {
 public:
  /// Throws InvalidArgument unless `cells` is a partition into equal cells.
  BlockSystem(std::size_t degree, std::vector<Cell> cells);

  static BlockSystem singletons(std::size_t degree);
  static BlockSystem universal(std::size_t degree);
  /// From a point -> cell-label map (labels arbitrary).
  static BlockSystem from_labels(std::span<const std::size_t> labels);

  std::size_t degree() const { return degree_; }
  std::size_t block_size() const { return cells_.front().size(); }
  std::size_t num_blocks() const { return cells_.size(); }
  const std::vector<Cell>& blocks() const { return cells_; }
  const Cell& block(std::size_t i) const { return cells_[i]; }
  std::size_t block_of(Point x) const { return owner_[x]; }
  bool is_trivial() const { return num_blocks() == degree_ || num_blocks() == 1; }

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.cells_ == b.cells_; }
  friend auto operator<=>(const BlockSystem& a, const BlockSystem& b) { return a.cells_ <=> b.cells_; }

 private:
  std::size_t degree_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> owner_;
};

/// True iff every generator maps every cell onto a cell.
bool is_invariant(const PermGroup& g, const BlockSystem& b);

/// The smallest block system of a transitive G in which a and b share a block.
BlockSystem minimal_block_containing(const PermGroup& g, Point a, Point b);

/// Block system generated by putting all of `points` in one block.
BlockSystem block_system_generated_by(const PermGroup& g, std::span<const Point> points);

/// Nontrivial block systems minimal under refinement, sorted.
std::vector<BlockSystem> all_minimal_block_systems(const PermGroup& g);

/// Every block system of a transitive G (trivial ones included), sorted; the
/// closure of the minimal-block systems of (0, x) under joins.
std::vector<BlockSystem> all_block_systems(const PermGroup& g);

/// Orbits of a normal subgroup N of G as a block system of G.
BlockSystem orbit_block_system(const PermGroup& g, const PermGroup& n);

/// fix_G(B), the kernel of the action on blocks. The default picks the kernel
/// route for large groups and element filtering for small ones.
PermGroup fix_blocks(const PermGroup& g, const BlockSystem& b, std::uint64_t cap = kDefaultCap);
PermGroup fix_blocks_by_kernel(const PermGroup& g, const BlockSystem& b);
PermGroup fix_blocks_by_filter(const PermGroup& g, const BlockSystem& b,
                               std::uint64_t cap = kDefaultCap);

/// Permutation induced by g on the block indices.
Permutation block_permutation(const BlockSystem& b, const Permutation& g);

/// G^B together with the homomorphism g -> g^B.
struct BlockAction {
  BlockSystem blocks;
  PermGroup image;
  Permutation operator()(const Permutation& g) const { return block_permutation(blocks, g); }
};
BlockAction action_on_blocks(const PermGroup& g, const BlockSystem& b);

/// Some g in G with block_permutation(b, g) == on_blocks, or none if
/// on_blocks is not in G^B.
std::optional<Permutation> block_preimage(const PermGroup& g, const BlockSystem& b,
                                          const Permutation& on_blocks);

/// The stabilizer of the partition in S_n: S_k wr S_m for m cells of size k.
PermGroup partition_stabilizer(const BlockSystem& b);

/// Setwise stabilizer of the block `cell`.
PermGroup block_stabilizer(const PermGroup& g, const BlockSystem& b, std::size_t block_index);

/// G_{B}^B, relabelled 0..|B|-1 in increasing point order. `cell` must be a
/// block of G.
PermGroup block_restriction(const PermGroup& g, std::span<const Point> cell);

struct BlockClassification {
  bool is_block_system = false;
  bool is_normal = false;
};
/// Checks invariance under G and normality (fix_G(B) transitive on every
/// block). Throws InvalidArgument for a malformed partition.
BlockClassification classify_block_system(const PermGroup& g, const std::vector<Cell>& partition,
                                          std::uint64_t cap = kDefaultCap);

/// B <= C: every cell of B lies inside a cell of C.
bool refines(const BlockSystem& b, const BlockSystem& c);
/// C/B on the block indices of B. Throws InvalidArgument unless refines(B, C).
BlockSystem quotient_system(const BlockSystem& c, const BlockSystem& b);
/// Inverse of quotient_system: cells of `on_blocks` (a partition of B's block
/// indices) expanded to points.
BlockSystem lift_system(const BlockSystem& on_blocks, const BlockSystem& b);

struct TowerCheck {
  /// Strictly nested chain of block systems of G.
  bool m_step = false;
  /// m_step and every system is normal.
  bool normal = false;
  /// Starts at the singletons and ends with one block.
  bool full = false;
  std::vector<std::size_t> ratios;
  /// First index i at which B_{i-1} < B_i fails, or at which B_i is not a
  /// block system of G.
  std::optional<std::size_t> broken_at;
};
/// Checks B_0 < B_1 < ... < B_m for G and reports block-size ratios.
TowerCheck verify_tower(const PermGroup& g, const std::vector<BlockSystem>& tower,
                        std::uint64_t cap = kDefaultCap);

}  // namespace cayley
