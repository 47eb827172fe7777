#include "cayley/stab_chain.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cayley/error.hpp"

namespace cayley {

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw InvalidArgument("base point out of range");
    levels_.push_back(make_level(b));
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    if (g.is_identity()) continue;
    auto [residue, drop] = sift(g);
    if (!residue.is_identity()) add_generator(0, drop, residue);
  }
}

StabChain::Level StabChain::make_level(Point base) const {
  Level level;
  level.base = base;
  level.orbit = {base};
  level.orbit_slot.assign(degree_, -1);
  level.orbit_slot[base] = 0;
  level.transversal = {Permutation(degree_)};
  return level;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base);
  return out;
}

BigInt StabChain::order() const {
  BigInt result = 1;
  for (const auto& l : levels_) result *= l.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabChain::sift(const Permutation& p,
                                                     std::size_t from_level) const {
  Permutation h = p;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    Point x = h(l.base);
    std::int32_t slot = l.orbit_slot[x];
    if (slot < 0) return {h, i};
    if (x != l.base) h = l.transversal[static_cast<std::size_t>(slot)].inverse() * h;
  }
  return {h, levels_.size()};
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).first.is_identity();
}

std::vector<Permutation> StabChain::stabilizer_generators(std::size_t depth) const {
  std::vector<Permutation> out;
  for (std::size_t i = depth; i < levels_.size(); ++i)
    out.insert(out.end(), levels_[i].generators.begin(), levels_[i].generators.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void StabChain::extend_orbit(Level& level, std::size_t first_new_gen,
                             std::size_t& first_new_point) {
  first_new_point = level.orbit.size();
  // Old points under new generators, then every new point under all generators.
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    std::size_t g0 = i < first_new_point ? first_new_gen : 0;
    for (std::size_t j = g0; j < level.generators.size(); ++j) {
      const Permutation& s = level.generators[j];
      Point y = s(level.orbit[i]);
      if (level.orbit_slot[y] >= 0) continue;
      level.orbit_slot[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(s * level.transversal[i]);
    }
  }
}

void StabChain::add_generator(std::size_t first, std::size_t drop, const Permutation& g) {
  if (drop == levels_.size()) levels_.push_back(make_level(g.smallest_moved_point()));
  for (std::size_t index = drop + 1; index-- > first;) {
    std::size_t first_new_gen = levels_[index].generators.size();
    levels_[index].generators.push_back(g);
    std::size_t first_new_point = 0;
    extend_orbit(levels_[index], first_new_gen, first_new_point);

    // Schreier generators for every (point, generator) pair not seen before.
    // Recursion only touches deeper levels but may reallocate levels_.
    for (std::size_t i = 0; i < levels_[index].orbit.size(); ++i) {
      std::size_t j0 = i < first_new_point ? first_new_gen : 0;
      for (std::size_t j = j0; j < levels_[index].generators.size(); ++j) {
        const Level& l = levels_[index];
        const Permutation& s = l.generators[j];
        Point y = s(l.orbit[i]);
        Permutation schreier = l.transversal[static_cast<std::size_t>(l.orbit_slot[y])].inverse() *
                               s * l.transversal[i];
        if (schreier.is_identity()) continue;
        auto [residue, d] = sift(schreier, index + 1);
        if (!residue.is_identity()) add_generator(index + 1, d, residue);
      }
    }
  }
}

}  // namespace cayley
