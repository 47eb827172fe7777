#include "cayley/group_zoo.hpp"

#include <array>
#include <map>
#include <numeric>

#include "cayley/error.hpp"
#include "cayley/number_theory.hpp"

namespace cayley {

Permutation left_translation(const GroupTable& t, GroupTable::Element g) {
  std::vector<Point> images(t.order());
  for (GroupTable::Element x = 0; x < t.order(); ++x) images[x] = t.mul(g, x);
  return Permutation(std::move(images));
}

Permutation right_translation(const GroupTable& t, GroupTable::Element g) {
  std::vector<Point> images(t.order());
  GroupTable::Element inv = t.inverse(g);
  for (GroupTable::Element x = 0; x < t.order(); ++x) images[x] = t.mul(x, inv);
  return Permutation(std::move(images));
}

LabeledPermGroup regular_representation(const GroupSpec& spec, Side side) {
  auto table = GroupTable::from_spec(spec);
  std::vector<Permutation> gens;
  for (auto g : table.generators())
    gens.push_back(side == Side::left ? left_translation(table, g) : right_translation(table, g));
  return {PermGroup(table.order(), std::move(gens)), spec, side};
}

PermGroup inner_holomorph(const GroupSpec& spec) {
  auto table = GroupTable::from_spec(spec);
  std::vector<Permutation> gens;
  for (auto g : table.generators()) {
    gens.push_back(left_translation(table, g));
    gens.push_back(right_translation(table, g));
  }
  return PermGroup(table.order(), std::move(gens));
}

PermGroup frobenius_natural(std::uint64_t p, std::uint64_t n) {
  GroupSpec::frobenius(p, n).validate();
  std::uint64_t w = *smallest_root_of_unity(p, n);
  std::vector<Point> shift(p), scale(p);
  for (std::uint64_t t = 0; t < p; ++t) {
    shift[t] = static_cast<Point>((t + 1) % p);
    scale[t] = static_cast<Point>(t * w % p);
  }
  return PermGroup(p, {Permutation(std::move(shift)), Permutation(std::move(scale))});
}

Cor2Groups cor2_groups(std::uint64_t p, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  if (!is_prime(p)) throw InvalidArgument("cor2: p must be prime");
  if (n == 0 || (p - 1) % n != 0) throw InvalidArgument("cor2: n must divide p - 1");
  if (!(2 < n && n < p - 1)) throw InvalidArgument("cor2: need 2 < n < p - 1");
  if (std::gcd(a % n, n) == 1) throw InvalidArgument("cor2: a must not be a unit mod n (the map must be non-injective)");
  if (n % 2 == 0 && a % 2 != 0) throw InvalidArgument("cor2: a must be even when n is even");
  if (std::gcd(b % n, n) != 1) throw InvalidArgument("cor2: b must be a unit mod n");
  std::uint64_t diff = ((a % n) + n - (b % n)) % n;
  if (std::gcd(diff, n) != 1) throw InvalidArgument("cor2: a - b must be invertible mod n");

  auto spec = GroupSpec::frobenius(p, n);
  auto table = GroupTable::from_spec(spec);
  auto label = [&](std::uint64_t x, std::uint64_t i) { return static_cast<GroupTable::Element>(x * n + i % n); };
  auto act = [&](GroupTable::Element g, GroupTable::Element h) {
    return left_translation(table, g) * right_translation(table, h);
  };
  std::vector<Permutation> first{act(label(1, 0), label(0, 0)), act(label(0, a), label(0, b))};
  std::vector<Permutation> second{act(label(0, 0), label(1, 0)), act(label(0, b), label(0, a))};
  std::size_t degree = table.order();
  return {inner_holomorph(spec), PermGroup(degree, std::move(first)), PermGroup(degree, std::move(second))};
}

std::vector<GroupSpec> standard_corpus(std::uint64_t max_order) {
  std::vector<GroupSpec> all;
  for (std::uint64_t n = 1; n <= 24; ++n) all.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t e = 1; e <= 4; ++e) all.push_back(GroupSpec::elementary_abelian_2(e));
  all.push_back(GroupSpec::q8());
  for (std::uint64_t m = 2; m <= 12; ++m) all.push_back(GroupSpec::dihedral(m));
  for (std::uint64_t m = 1; m <= 12; ++m) all.push_back(GroupSpec::dicyclic(m));
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {3, 2}, {5, 2}, {5, 4}, {7, 2}, {7, 3}, {7, 6}, {11, 5}, {13, 3}, {13, 4}})
    all.push_back(GroupSpec::frobenius(p, n));
  for (auto [n, o, a] : std::vector<std::array<std::uint64_t, 3>>{
           {3, 2, 2}, {3, 4, 2}, {3, 8, 2}, {5, 4, 4}, {15, 2, 14}, {15, 2, 4}, {15, 4, 11}, {7, 8, 6}})
    all.push_back(GroupSpec::zn_semidirect_y(n, o, a));
  all.push_back(GroupSpec::direct_product({GroupSpec::cyclic(3), GroupSpec::q8()}));
  all.push_back(GroupSpec::direct_product({GroupSpec::cyclic(15), GroupSpec::elementary_abelian_2(2)}));
  all.push_back(GroupSpec::direct_product({GroupSpec::cyclic(5), GroupSpec::z4()}));
  all.push_back(GroupSpec::direct_product({GroupSpec::cyclic(3), GroupSpec::cyclic(3)}));
  all.push_back(GroupSpec::direct_product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}));
  all.push_back(GroupSpec::direct_product({GroupSpec::z8(), GroupSpec::cyclic(3)}));
  std::vector<GroupSpec> out;
  for (auto& s : all)
    if (s.order() <= max_order) out.push_back(s);
  return out;
}

std::uint64_t two_part_automorphism_count(const std::string& two_part) {
  static const std::map<std::string, std::uint64_t> counts{
      {"1", 1}, {"Z2", 1}, {"Z2^2", 6}, {"Z2^3", 168}, {"Z2^4", 20160}, {"Z4", 2}, {"Z8", 4}, {"Q8", 24}};
  auto it = counts.find(two_part);
  if (it == counts.end()) throw InvalidArgument("unknown 2-part " + two_part);
  return it->second;
}

}  // namespace cayley
