#include "cayley/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {
namespace {

std::vector<Permutation> canonical_generators(std::size_t degree, std::vector<Permutation> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw InvalidArgument("generator degree does not match group degree");
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), std::span<const Point>{}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree), generators_(canonical_generators(degree, std::move(generators))) {
  if (degree == 0) throw InvalidArgument("degree must be positive");
  chain_ = std::make_shared<const StabChain>(degree, generators_, base_prefix);
}

PermGroup PermGroup::with_base(std::size_t degree, std::vector<Permutation> generators,
                               std::span<const Point> base_prefix) {
  return PermGroup(degree, std::move(generators), base_prefix);
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  if (degree < 2) return trivial(std::max<std::size_t>(degree, 1));
  std::vector<Point> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(degree, {Permutation::from_cycles(degree, {{0, 1}}),
                            Permutation::from_cycles(degree, std::vector<std::vector<Point>>{cycle})});
}

PermGroup PermGroup::alternating(std::size_t degree) {
  if (degree < 3) return trivial(std::max<std::size_t>(degree, 1));
  std::vector<Permutation> gens;
  for (Point k = 2; k < degree; ++k) gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>((i + 1) % degree);
  return PermGroup(degree, {Permutation(std::move(images))});
}

bool PermGroup::contains_all(std::span<const Permutation> ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Permutation& p) { return contains(p); });
}

bool PermGroup::contains_group(const PermGroup& h) const {
  return h.degree() == degree_ && contains_all(h.generators());
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order() == b.order() && a.contains_group(b);
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, std::span<const Permutation> gens) {
  std::vector<std::int64_t> owner(degree, -1);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < degree; ++start) {
    if (owner[start] >= 0) continue;
    std::vector<Point> orbit{start};
    owner[start] = static_cast<std::int64_t>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : gens) {
        Point y = g(orbit[i]);
        if (owner[y] < 0) {
          owner[y] = static_cast<std::int64_t>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  for (auto& o : orbits())
    if (std::binary_search(o.begin(), o.end(), x)) return o;
  throw InvalidArgument("point out of range");
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  return orbits_of(degree_, generators_);
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

TransitivityProfile PermGroup::transitivity_profile() const {
  TransitivityProfile p;
  auto orbs = orbits();
  p.transitive = orbs.size() == 1;
  // Semiregular iff every point stabilizer is trivial iff |G| equals every
  // orbit length (orbit-stabilizer).
  BigInt n = order();
  p.semiregular = std::all_of(orbs.begin(), orbs.end(),
                              [&](const auto& o) { return BigInt(o.size()) == n; });
  p.regular = p.transitive && p.semiregular;
  return p;
}

std::vector<Permutation> PermGroup::enumerate_elements(std::uint64_t cap) const {
  if (order() > BigInt(cap))
    throw CapExceeded("group order " + order().str() + " exceeds enumeration cap " +
                      std::to_string(cap));
  std::vector<Permutation> out{Permutation(degree_)};
  const auto& levels = chain_->levels();
  // Build from the deepest level up so that the first level ends up outermost.
  for (std::size_t li = levels.size(); li-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels[li].transversal.size());
    for (const auto& u : levels[li].transversal)
      for (const auto& rest : out) next.push_back(u * rest);
    out = std::move(next);
  }
  return out;
}

ElementTable::ElementTable(const PermGroup& g, std::uint64_t cap)
    : group_(g), elements_(g.enumerate_elements(cap)) {
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    if (elements_[i].is_identity()) identity_ = i;
  }
}

std::optional<std::size_t> ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const auto& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = PermGroup(degree, gens);
  }
  return current;
}

std::vector<Permutation> reduced_generators(const PermGroup& g) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(g.degree());
  for (const auto& s : g.generators()) {
    if (current.contains(s)) continue;
    gens.push_back(s);
    current = PermGroup(g.degree(), gens);
  }
  return gens;
}

Permutation random_element(const PermGroup& g, std::mt19937_64& rng) {
  Permutation out(g.degree());
  for (const auto& level : g.chain().levels()) {
    std::uniform_int_distribution<std::size_t> pick(0, level.transversal.size() - 1);
    out = out * level.transversal[pick(rng)];
  }
  return out;
}

}  // namespace cayley
