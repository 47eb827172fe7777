#include "cayley/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cayley/error.hpp"
#include "cayley/subgroups.hpp"

namespace cayley {

BlockSystem::BlockSystem(std::size_t degree, std::vector<Cell> cells)
    : degree_(degree), cells_(std::move(cells)), owner_(degree, degree) {
  if (cells_.empty()) throw InvalidArgument("block system has no cells");
  for (auto& c : cells_) std::sort(c.begin(), c.end());
  std::sort(cells_.begin(), cells_.end());
  const std::size_t size = cells_.front().size();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].empty() || cells_[i].size() != size)
      throw InvalidArgument("block system cells must be nonempty and of equal size");
    for (Point x : cells_[i]) {
      if (x >= degree || owner_[x] != degree)
        throw InvalidArgument("block system cells must partition the point set");
      owner_[x] = i;
    }
  }
  if (size * cells_.size() != degree)
    throw InvalidArgument("block system cells must cover the point set");
}

BlockSystem BlockSystem::singletons(std::size_t degree) {
  std::vector<Cell> cells;
  for (Point x = 0; x < degree; ++x) cells.push_back({x});
  return BlockSystem(degree, std::move(cells));
}

BlockSystem BlockSystem::universal(std::size_t degree) {
  Cell all(degree);
  std::iota(all.begin(), all.end(), Point{0});
  return BlockSystem(degree, {std::move(all)});
}

BlockSystem BlockSystem::from_labels(std::span<const std::size_t> labels) {
  std::map<std::size_t, Cell> by_label;
  for (std::size_t x = 0; x < labels.size(); ++x) by_label[labels[x]].push_back(static_cast<Point>(x));
  std::vector<Cell> cells;
  for (auto& [label, cell] : by_label) cells.push_back(std::move(cell));
  return BlockSystem(labels.size(), std::move(cells));
}

bool is_invariant(const PermGroup& g, const BlockSystem& b) {
  if (g.degree() != b.degree()) throw InvalidArgument("degree mismatch");
  for (const auto& x : g.generators())
    for (const auto& cell : b.blocks()) {
      std::size_t target = b.block_of(x(cell.front()));
      for (Point y : cell)
        if (b.block_of(x(y)) != target) return false;
    }
  return true;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller root so class representatives are deterministic.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

void require_transitive(const PermGroup& g, const char* what) {
  if (!g.is_transitive()) throw InvalidArgument(std::string(what) + ": group is not transitive");
}

}  // namespace

BlockSystem block_system_generated_by(const PermGroup& g, std::span<const Point> points) {
  require_transitive(g, "block_system_generated_by");
  UnionFind uf(g.degree());
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (uf.unite(points[0], points[i])) queue.emplace_back(points[0], points[i]);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [a, b] = queue[q];
    for (const auto& x : g.generators()) {
      std::size_t u = x(static_cast<Point>(a)), v = x(static_cast<Point>(b));
      if (uf.find(u) != uf.find(v)) {
        queue.emplace_back(uf.find(u), uf.find(v));
        uf.unite(u, v);
      }
    }
  }
  std::vector<std::size_t> labels(g.degree());
  for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = uf.find(x);
  return BlockSystem::from_labels(labels);
}

BlockSystem minimal_block_containing(const PermGroup& g, Point a, Point b) {
  if (a == b) throw InvalidArgument("minimal_block_containing: points must differ");
  if (a >= g.degree() || b >= g.degree()) throw InvalidArgument("point out of range");
  const Point pts[] = {a, b};
  return block_system_generated_by(g, pts);
}

bool refines(const BlockSystem& b, const BlockSystem& c) {
  if (b.degree() != c.degree()) throw InvalidArgument("refines: degree mismatch");
  for (const auto& cell : b.blocks()) {
    std::size_t target = c.block_of(cell.front());
    for (Point x : cell)
      if (c.block_of(x) != target) return false;
  }
  return true;
}

std::vector<BlockSystem> all_minimal_block_systems(const PermGroup& g) {
  require_transitive(g, "all_minimal_block_systems");
  std::vector<BlockSystem> candidates;
  for (Point x = 1; x < g.degree(); ++x) {
    BlockSystem s = minimal_block_containing(g, 0, x);
    if (s.num_blocks() == 1) continue;
    if (std::find(candidates.begin(), candidates.end(), s) == candidates.end())
      candidates.push_back(std::move(s));
  }
  std::vector<BlockSystem> out;
  for (const auto& s : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const BlockSystem& t) {
      return !(t == s) && refines(t, s);
    });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  require_transitive(g, "all_block_systems");
  std::set<BlockSystem> found{BlockSystem::singletons(g.degree())};
  std::vector<BlockSystem> work;
  for (Point x = 1; x < g.degree(); ++x) {
    BlockSystem s = minimal_block_containing(g, 0, x);
    if (found.insert(s).second) work.push_back(s);
  }
  // Close under joins with the minimal systems of (0, x).
  std::vector<BlockSystem> atoms = work;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& atom : atoms) {
      if (refines(atom, work[i])) continue;
      std::vector<Point> pts = work[i].block(work[i].block_of(0));
      const auto& other = atom.block(atom.block_of(0));
      pts.insert(pts.end(), other.begin(), other.end());
      BlockSystem joined = block_system_generated_by(g, pts);
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  return {found.begin(), found.end()};
}

BlockSystem orbit_block_system(const PermGroup& g, const PermGroup& n) {
  if (!is_normal_in(n, g)) throw InvalidArgument("orbit_block_system: N is not normal in G");
  return BlockSystem(g.degree(), n.orbits());
}

Permutation block_permutation(const BlockSystem& b, const Permutation& g) {
  if (g.degree() != b.degree()) throw InvalidArgument("block_permutation: degree mismatch");
  std::vector<Point> images(b.num_blocks());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<Point>(b.block_of(g(b.block(i).front())));
  return Permutation(std::move(images));
}

namespace {

// G acting on points and block indices simultaneously, on n + m points.
std::vector<Permutation> extended_generators(const PermGroup& g, const BlockSystem& b) {
  if (!is_invariant(g, b)) throw InvalidArgument("partition is not invariant under the group");
  const std::size_t n = g.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> images(n + b.num_blocks());
    for (std::size_t i = 0; i < n; ++i) images[i] = x(static_cast<Point>(i));
    Permutation on_blocks = block_permutation(b, x);
    for (std::size_t i = 0; i < b.num_blocks(); ++i)
      images[n + i] = static_cast<Point>(n + on_blocks(static_cast<Point>(i)));
    gens.emplace_back(std::move(images));
  }
  return gens;
}

std::vector<Permutation> truncate(std::span<const Permutation> gens, std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& x : gens)
    out.emplace_back(std::vector<Point>(x.images().begin(), x.images().begin() + n));
  return out;
}

}  // namespace

PermGroup fix_blocks_by_kernel(const PermGroup& g, const BlockSystem& b) {
  const std::size_t n = g.degree();
  std::vector<Point> prefix(b.num_blocks());
  std::iota(prefix.begin(), prefix.end(), static_cast<Point>(n));
  PermGroup ext = PermGroup::with_base(n + b.num_blocks(), extended_generators(g, b), prefix);
  return PermGroup(n, truncate(ext.chain().stabilizer_generators(b.num_blocks()), n));
}

PermGroup fix_blocks_by_filter(const PermGroup& g, const BlockSystem& b, std::uint64_t cap) {
  if (!is_invariant(g, b)) throw InvalidArgument("partition is not invariant under the group");
  std::vector<Permutation> kept;
  for (auto& x : g.enumerate_elements(cap)) {
    bool fixes = std::all_of(b.blocks().begin(), b.blocks().end(), [&](const Cell& c) {
      return b.block_of(x(c.front())) == b.block_of(c.front());
    });
    if (fixes) kept.push_back(std::move(x));
  }
  return subgroup_from_elements(g.degree(), kept);
}

PermGroup fix_blocks(const PermGroup& g, const BlockSystem& b, std::uint64_t cap) {
  if (g.order() <= BigInt(std::min<std::uint64_t>(cap, 5000))) return fix_blocks_by_filter(g, b, cap);
  return fix_blocks_by_kernel(g, b);
}

BlockAction action_on_blocks(const PermGroup& g, const BlockSystem& b) {
  if (!is_invariant(g, b)) throw InvalidArgument("partition is not invariant under the group");
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(block_permutation(b, x));
  return BlockAction{b, PermGroup(b.num_blocks(), std::move(gens))};
}

PermGroup block_stabilizer(const PermGroup& g, const BlockSystem& b, std::size_t block_index) {
  const std::size_t n = g.degree();
  const Point prefix[] = {static_cast<Point>(n + block_index)};
  PermGroup ext = PermGroup::with_base(n + b.num_blocks(), extended_generators(g, b), prefix);
  return PermGroup(n, truncate(ext.chain().stabilizer_generators(1), n));
}

std::optional<Permutation> block_preimage(const PermGroup& g, const BlockSystem& b,
                                          const Permutation& on_blocks) {
  const std::size_t n = g.degree(), m = b.num_blocks();
  if (on_blocks.degree() != m) throw InvalidArgument("block permutation has the wrong degree");
  std::vector<Point> prefix(m);
  std::iota(prefix.begin(), prefix.end(), static_cast<Point>(n));
  PermGroup ext = PermGroup::with_base(n + m, extended_generators(g, b), prefix);
  const auto& levels = ext.chain().levels();
  // wanted[j]: required image of block point n + j under the rest of the product.
  std::vector<Point> wanted(m);
  for (std::size_t j = 0; j < m; ++j) wanted[j] = static_cast<Point>(n + on_blocks(static_cast<Point>(j)));
  Permutation product(n + m);
  for (std::size_t i = 0; i < m && i < levels.size(); ++i) {
    const auto& level = levels[i];
    std::int32_t slot = level.orbit_slot[wanted[i]];
    if (slot < 0) return std::nullopt;
    const Permutation& u = level.transversal[static_cast<std::size_t>(slot)];
    product = product * u;
    Permutation back = u.inverse();
    for (auto& w : wanted) w = back(w);
  }
  for (std::size_t j = 0; j < m; ++j)
    if (wanted[j] != n + j) return std::nullopt;
  return truncate(std::span<const Permutation>(&product, 1), n).front();
}

PermGroup partition_stabilizer(const BlockSystem& b) {
  const std::size_t n = b.degree(), k = b.block_size(), m = b.num_blocks();
  const auto& cells = b.blocks();
  std::vector<Permutation> gens;
  if (k > 1) {
    gens.push_back(Permutation::from_cycles(n, std::vector<std::vector<Point>>{cells[0]}));
    gens.push_back(Permutation::from_cycles(n, std::vector<std::vector<Point>>{{cells[0][0], cells[0][1]}}));
  }
  if (m > 1) {
    std::vector<Point> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), Point{0});
    for (std::size_t i = 0; i < k; ++i) {
      swap[cells[0][i]] = cells[1][i];
      swap[cells[1][i]] = cells[0][i];
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < k; ++i) cycle[cells[j][i]] = cells[(j + 1) % m][i];
    gens.emplace_back(std::move(swap));
    gens.emplace_back(std::move(cycle));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup block_restriction(const PermGroup& g, std::span<const Point> cell) {
  if (cell.empty()) throw InvalidArgument("block_restriction: empty cell");
  BlockSystem b = block_system_generated_by(g, cell);
  std::vector<Point> sorted(cell.begin(), cell.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t index = b.block_of(sorted.front());
  if (b.block(index) != sorted) throw InvalidArgument("block_restriction: cell is not a block");
  return restrict_to(block_stabilizer(g, b, index), sorted);
}

BlockClassification classify_block_system(const PermGroup& g, const std::vector<Cell>& partition,
                                          std::uint64_t cap) {
  BlockSystem b(g.degree(), partition);
  BlockClassification out;
  out.is_block_system = is_invariant(g, b);
  if (!out.is_block_system) return out;
  PermGroup kernel = fix_blocks(g, b, cap);
  auto orbits = kernel.orbits();
  out.is_normal = orbits.size() == b.num_blocks();
  return out;
}

BlockSystem quotient_system(const BlockSystem& c, const BlockSystem& b) {
  if (!refines(b, c)) throw InvalidArgument("quotient_system: B does not refine C");
  std::vector<std::size_t> labels(b.num_blocks());
  for (std::size_t i = 0; i < b.num_blocks(); ++i) labels[i] = c.block_of(b.block(i).front());
  return BlockSystem::from_labels(labels);
}

BlockSystem lift_system(const BlockSystem& on_blocks, const BlockSystem& b) {
  if (on_blocks.degree() != b.num_blocks()) throw InvalidArgument("lift_system: degree mismatch");
  std::vector<std::size_t> labels(b.degree());
  for (Point x = 0; x < b.degree(); ++x) labels[x] = on_blocks.block_of(static_cast<Point>(b.block_of(x)));
  return BlockSystem::from_labels(labels);
}

TowerCheck verify_tower(const PermGroup& g, const std::vector<BlockSystem>& tower, std::uint64_t cap) {
  TowerCheck out;
  if (tower.empty()) {
    out.broken_at = 0;
    return out;
  }
  for (std::size_t i = 0; i < tower.size(); ++i) {
    const BlockSystem& s = tower[i];
    if (s.degree() != g.degree() || !is_invariant(g, s)) {
      out.broken_at = i;
      return out;
    }
    if (i > 0) {
      if (!refines(tower[i - 1], s) || tower[i - 1] == s) {
        out.broken_at = i;
        return out;
      }
      out.ratios.push_back(s.block_size() / tower[i - 1].block_size());
    }
  }
  out.m_step = true;
  out.full = tower.front().block_size() == 1 && tower.back().num_blocks() == 1;
  out.normal = std::all_of(tower.begin(), tower.end(), [&](const BlockSystem& s) {
    return classify_block_system(g, s.blocks(), cap).is_normal;
  });
  return out;
}

}  // namespace cayley
