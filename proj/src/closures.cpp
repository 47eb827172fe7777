#include "cayley/closures.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>
#include <unordered_map>

#include "cayley/error.hpp"

namespace cayley {

std::size_t default_degree_budget(unsigned arity) {
  switch (arity) {
    case 1: return 1u << 20;
    case 2: return 256;
    case 3: return 64;
    default: throw InvalidArgument("arity must be 1, 2 or 3");
  }
}

namespace {

std::uint64_t power(std::size_t n, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) out *= n;
  return out;
}

void check_budget(std::size_t degree, unsigned k, std::size_t max_degree) {
  std::size_t limit = max_degree ? max_degree : default_degree_budget(k);
  if (degree > limit)
    throw BudgetExceeded("degree " + std::to_string(degree) + " over the " + std::to_string(k) +
                         "-tuple budget of " + std::to_string(limit));
}

// Image of a tuple code under p.
std::uint64_t map_code(std::uint64_t code, const Permutation& p, std::size_t n, unsigned k) {
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k; ++i) {
    out += p(static_cast<Point>(code % n)) * scale;
    code /= n;
    scale *= n;
  }
  return out;
}

}  // namespace

ColoredStructure::ColoredStructure(std::size_t degree, unsigned arity, std::vector<std::uint32_t> colors)
    : degree_(degree), arity_(arity), colors_(std::move(colors)) {
  if (arity < 1 || arity > 3) throw InvalidArgument("arity must be 1, 2 or 3");
  if (degree == 0) throw InvalidArgument("degree must be positive");
  if (colors_.size() != power(degree, arity)) throw InvalidArgument("colour table has the wrong length");
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (auto& c : colors_) {
    auto [it, fresh] = renumber.try_emplace(c, static_cast<std::uint32_t>(renumber.size()));
    c = it->second;
  }
  num_colors_ = renumber.size();
}

std::uint64_t ColoredStructure::encode(std::span<const Point> tuple) const {
  if (tuple.size() != arity_) throw InvalidArgument("tuple length differs from arity");
  std::uint64_t code = 0;
  for (Point x : tuple) {
    if (x >= degree_) throw InvalidArgument("tuple entry out of range");
    code = code * degree_ + x;
  }
  return code;
}

std::vector<Point> ColoredStructure::decode(std::uint64_t code) const {
  std::vector<Point> out(arity_);
  for (unsigned i = arity_; i-- > 0;) {
    out[i] = static_cast<Point>(code % degree_);
    code /= degree_;
  }
  return out;
}

ColoredStructure orbit_coloring(const PermGroup& g, unsigned k, std::size_t max_degree) {
  if (k < 1 || k > 3) throw InvalidArgument("k must be 1, 2 or 3");
  std::size_t n = g.degree();
  check_budget(n, k, max_degree);
  std::uint64_t total = power(n, k);
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> colors(total, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (colors[start] != kUnset) continue;
    colors[start] = next;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : g.generators()) {
        std::uint64_t image = map_code(queue[i], s, n, k);
        if (colors[image] == kUnset) {
          colors[image] = next;
          queue.push_back(image);
        }
      }
    ++next;
  }
  return ColoredStructure(n, k, std::move(colors));
}

bool is_automorphism(const ColoredStructure& s, const Permutation& p) {
  if (p.degree() != s.degree()) throw InvalidArgument("degree mismatch");
  const auto& colors = s.colors();
  for (std::uint64_t code = 0; code < colors.size(); ++code)
    if (colors[map_code(code, p, s.degree(), s.arity())] != colors[code]) return false;
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return mix(a * 0x100000001b3ULL ^ mix(b)); }

// An ordered partition of the points: col[x] is the rank of x's cell. Ranks
// only depend on the structure, never on point labels, so refining two
// labellings related by an automorphism gives related partitions.
struct Cells {
  std::vector<std::uint32_t> col;
  std::uint32_t count = 0;
  std::uint64_t trace = 0;
};

class Refiner {
 public:
  explicit Refiner(const ColoredStructure& s) : s_(s), n_(s.degree()) {}

  std::uint64_t refinements = 0;

  // Splits cells until stable, extending the trace.
  void refine(Cells& cells) {
    std::vector<std::uint64_t> acc(n_);
    std::vector<std::tuple<std::uint32_t, std::uint64_t, Point>> keyed(n_);
    while (true) {
      ++refinements;
      accumulate(cells.col, acc);
      for (Point x = 0; x < n_; ++x) keyed[x] = {cells.col[x], mix(cells.col[x], acc[x]), x};
      std::sort(keyed.begin(), keyed.end());
      std::uint32_t rank = 0;
      std::uint64_t trace = cells.trace;
      std::uint64_t run = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && (std::get<0>(keyed[i]) != std::get<0>(keyed[i - 1]) ||
                      std::get<1>(keyed[i]) != std::get<1>(keyed[i - 1]))) {
          trace = mix(trace, mix(std::get<1>(keyed[i - 1]), run));
          ++rank;
          run = 0;
        }
        ++run;
        cells.col[std::get<2>(keyed[i])] = rank;
      }
      trace = mix(trace, mix(std::get<1>(keyed[n_ - 1]), run));
      std::uint32_t count = rank + 1;
      cells.trace = trace;
      if (count == cells.count) return;
      cells.count = count;
    }
  }

  // Gives x a cell of its own, ranked after every other cell.
  void individualize(Cells& cells, Point x) {
    cells.col[x] = cells.count;
    ++cells.count;
    cells.trace = mix(cells.trace, 0x5157ULL);
    refine(cells);
  }

 private:
  void accumulate(const std::vector<std::uint32_t>& col, std::vector<std::uint64_t>& acc) const {
    std::fill(acc.begin(), acc.end(), 0);
    const auto& c = s_.colors();
    std::size_t n = n_;
    switch (s_.arity()) {
      case 1:
        for (Point x = 0; x < n; ++x) acc[x] += mix(c[x]);
        break;
      case 2:
        for (Point x = 0; x < n; ++x)
          for (Point y = 0; y < n; ++y) {
            std::uint64_t colour = c[std::size_t{x} * n + y];
            acc[x] += mix(mix(colour, 1), col[y]);
            acc[y] += mix(mix(colour, 2), col[x]);
          }
        break;
      case 3:
        for (Point x = 0; x < n; ++x)
          for (Point y = 0; y < n; ++y) {
            const std::uint32_t* row = &c[(std::size_t{x} * n + y) * n];
            for (Point z = 0; z < n; ++z) {
              std::uint64_t colour = row[z];
              acc[x] += mix(mix(mix(colour, 1), col[y]), col[z]);
              acc[y] += mix(mix(mix(colour, 2), col[x]), col[z]);
              acc[z] += mix(mix(mix(colour, 3), col[x]), col[y]);
            }
          }
        break;
    }
  }

  const ColoredStructure& s_;
  std::size_t n_;
};

// First smallest non-singleton cell, by rank.
std::optional<std::uint32_t> target_cell(const Cells& cells) {
  std::vector<std::uint32_t> size(cells.count, 0);
  for (auto r : cells.col) ++size[r];
  std::optional<std::uint32_t> best;
  for (std::uint32_t r = 0; r < cells.count; ++r)
    if (size[r] > 1 && (!best || size[r] < size[*best])) best = r;
  return best;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const ColoredStructure& s, SearchStats& stats) : s_(s), refiner_(s), stats_(stats) {}

  std::vector<Permutation> run() {
    std::size_t n = s_.degree();
    Cells root;
    root.col.assign(n, 0);
    root.count = 1;
    refiner_.refine(root);
    path_.push_back(root);
    while (auto cell = target_cell(path_.back())) {
      const Cells& last = path_.back();
      Point b = 0;
      while (last.col[b] != *cell) ++b;
      base_.push_back(b);
      targets_.push_back(*cell);
      Cells next = last;
      refiner_.individualize(next, b);
      path_.push_back(std::move(next));
    }

    std::vector<Permutation> gens;
    for (std::size_t level = base_.size(); level-- > 0;) {
      const Cells& node = path_[level];
      auto in_orbit = orbit_flags(gens, base_[level]);
      std::vector<bool> failed(n, false);
      for (Point c = 0; c < n; ++c) {
        if (node.col[c] != targets_[level] || in_orbit[c] || failed[c]) continue;
        Cells child = node;
        refiner_.individualize(child, c);
        ++stats_.nodes;
        std::optional<Permutation> found;
        if (child.trace == path_[level + 1].trace) found = extend(child, level + 1);
        if (found) {
          gens.push_back(*found);
          in_orbit = orbit_flags(gens, base_[level]);
        } else {
          auto lost = orbit_flags(gens, c);
          for (Point x = 0; x < n; ++x)
            if (lost[x]) failed[x] = true;
        }
      }
    }
    stats_.refinements = refiner_.refinements;
    return gens;
  }

 private:
  std::vector<bool> orbit_flags(const std::vector<Permutation>& gens, Point start) const {
    std::vector<bool> seen(s_.degree(), false);
    std::vector<Point> queue{start};
    seen[start] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : gens) {
        Point y = g(queue[i]);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    return seen;
  }

  // Some automorphism whose refinement path passes through `node` at `level`.
  std::optional<Permutation> extend(const Cells& node, std::size_t level) {
    if (level == base_.size()) {
      ++stats_.leaves;
      const Cells& left = path_[level];
      std::vector<Point> by_rank(s_.degree());
      for (Point y = 0; y < s_.degree(); ++y) by_rank[node.col[y]] = y;
      std::vector<Point> images(s_.degree());
      for (Point x = 0; x < s_.degree(); ++x) images[x] = by_rank[left.col[x]];
      Permutation p(std::move(images));
      if (is_automorphism(s_, p)) return p;
      return std::nullopt;
    }
    for (Point c = 0; c < s_.degree(); ++c) {
      if (node.col[c] != targets_[level]) continue;
      Cells child = node;
      refiner_.individualize(child, c);
      ++stats_.nodes;
      if (child.trace != path_[level + 1].trace) continue;
      if (auto p = extend(child, level + 1)) return p;
    }
    return std::nullopt;
  }

  const ColoredStructure& s_;
  Refiner refiner_;
  SearchStats& stats_;
  std::vector<Cells> path_;
  std::vector<Point> base_;
  std::vector<std::uint32_t> targets_;
};

}  // namespace

PermGroup automorphisms(const ColoredStructure& s, std::size_t max_degree, SearchStats* stats) {
  check_budget(s.degree(), s.arity(), max_degree);
  SearchStats local;
  AutomorphismSearch search(s, stats ? *stats : local);
  return PermGroup(s.degree(), search.run());
}

PermGroup k_closure(const PermGroup& g, unsigned k, std::size_t max_degree) {
  return automorphisms(orbit_coloring(g, k, max_degree), max_degree);
}

bool is_k_closed(const PermGroup& g, unsigned k, std::size_t max_degree) {
  return k_closure(g, k, max_degree).order() == g.order();
}

}  // namespace cayley
