#include <doctest.h>

#include <random>

#include "cayley/blocks.hpp"
#include "cayley/error.hpp"
#include "cayley/group_table.hpp"
#include "cayley/group_zoo.hpp"
#include "cayley/subgroups.hpp"
#include "oracle/oracle.hpp"
#include "repro.hpp"

using namespace cayley;

namespace {

PermGroup z_regular(std::size_t n) { return PermGroup::cyclic(n); }

PermGroup d8() { return PermGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}})}); }

BlockSystem cells(std::size_t n, std::vector<Cell> c) { return BlockSystem(n, std::move(c)); }

std::vector<Cell> sorted_blocks(std::vector<BlockSystem> systems) {
  std::vector<Cell> sizes;
  for (const auto& b : systems) sizes.push_back({static_cast<Point>(b.block_size())});
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// The regular Dic3 labels with a subgroup's left cosets as blocks.
BlockSystem left_cosets(const GroupTable& t, const std::vector<GroupTable::Element>& h) {
  std::vector<std::size_t> label(t.order(), t.order());
  std::size_t next = 0;
  for (GroupTable::Element x = 0; x < t.order(); ++x) {
    if (label[x] != t.order()) continue;
    for (auto y : h) label[t.mul(x, y)] = next;
    ++next;
  }
  return BlockSystem::from_labels(label);
}

}  // namespace

TEST_CASE("block system construction") {
  BlockSystem b = cells(6, {{3, 0}, {5, 2}, {1, 4}});
  CHECK(b.blocks() == std::vector<Cell>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(b.block_of(4) == 1);
  CHECK_THROWS_AS(cells(4, {{0, 1, 2}, {3}}), InvalidArgument);
  CHECK_THROWS_AS(cells(4, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(cells(4, {{0, 1}}), InvalidArgument);
  CHECK(BlockSystem::singletons(3).num_blocks() == 3);
  CHECK(BlockSystem::universal(3).num_blocks() == 1);
}

TEST_CASE("minimal block containing a pair") {
  CHECK(minimal_block_containing(z_regular(6), 0, 3) == cells(6, {{0, 3}, {1, 4}, {2, 5}}));
  CHECK(minimal_block_containing(z_regular(6), 0, 2) == cells(6, {{0, 2, 4}, {1, 3, 5}}));
  CHECK(minimal_block_containing(PermGroup::symmetric(4), 0, 1).num_blocks() == 1);
}

TEST_CASE("all minimal block systems") {
  auto z6 = all_minimal_block_systems(z_regular(6));
  CHECK(sorted_blocks(z6) == std::vector<Cell>{{2}, {3}});
  auto z4 = all_minimal_block_systems(z_regular(4));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0] == cells(4, {{0, 2}, {1, 3}}));
  CHECK(all_minimal_block_systems(PermGroup::symmetric(4)).empty());
}

TEST_CASE("orbit block systems") {
  PermGroup v4(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(orbit_block_system(PermGroup::symmetric(4), v4).num_blocks() == 1);
  PermGroup rot2(4, {Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(orbit_block_system(d8(), rot2) == cells(4, {{0, 2}, {1, 3}}));
  PermGroup order3(6, {Permutation::from_cycles(6, {{0, 2, 4}, {1, 3, 5}})});
  CHECK(orbit_block_system(z_regular(6), order3).block_size() == 3);
}

TEST_CASE("fix_blocks") {
  BlockSystem pairs = cells(4, {{0, 2}, {1, 3}});
  PermGroup fixed = fix_blocks(d8(), pairs);
  CHECK(fixed == PermGroup(4, {Permutation::from_cycles(4, {{0, 2}}), Permutation::from_cycles(4, {{1, 3}})}));
  CHECK(fix_blocks(d8(), BlockSystem::singletons(4)).order() == 1);
  CHECK(fix_blocks(d8(), BlockSystem::universal(4)) == d8());

  // Left regular S3 with the left cosets of a non-normal subgroup of order 2.
  auto s3 = GroupSpec::dihedral(3);
  auto table = GroupTable::from_spec(s3);
  PermGroup reg = regular_representation(s3, Side::left).group;
  GroupTable::Element reflection = 1;
  REQUIRE(table.element_order(reflection) == 2);
  BlockSystem cosets = left_cosets(table, {table.identity(), reflection});
  CHECK(fix_blocks(reg, cosets).order() == 1);
}

TEST_CASE("action on blocks") {
  auto image = action_on_blocks(d8(), cells(4, {{0, 2}, {1, 3}}));
  CHECK(image.image.order() == 2);
  auto z6 = action_on_blocks(z_regular(6), cells(6, {{0, 3}, {1, 4}, {2, 5}}));
  CHECK(z6.image.order() == 3);
  CHECK(z6.image.transitivity_profile().regular);
  CHECK(z6(z_regular(6).generators()[0]).order() == 3);
}

TEST_CASE("block restriction") {
  PermGroup r = block_restriction(z_regular(6), std::vector<Point>{0, 3});
  CHECK(r.degree() == 2);
  CHECK(r.order() == 2);
  CHECK(block_restriction(PermGroup::symmetric(4), std::vector<Point>{0, 1, 2, 3}).order() == 24);

  auto dic3 = GroupSpec::dicyclic(3);
  auto table = GroupTable::from_spec(dic3);
  PermGroup reg = regular_representation(dic3, Side::left).group;
  BlockSystem orbits3 = left_cosets(table, {0, 4, 8});
  PermGroup restricted = block_restriction(reg, orbits3.block(0));
  CHECK(restricted.order() == 3);
  CHECK(restricted.transitivity_profile().regular);
}

TEST_CASE("classify block systems") {
  auto s3 = GroupSpec::dihedral(3);
  auto table = GroupTable::from_spec(s3);
  PermGroup reg = regular_representation(s3, Side::left).group;
  auto verdict = classify_block_system(reg, left_cosets(table, {0, 1}).blocks());
  CHECK(verdict.is_block_system);
  CHECK_FALSE(verdict.is_normal);
  CHECK_THROWS_AS(classify_block_system(reg, {{0, 1, 2}, {3, 4}, {5}}), InvalidArgument);
  auto normal = classify_block_system(z_regular(6), {{0, 3}, {1, 4}, {2, 5}});
  CHECK(normal.is_block_system);
  CHECK(normal.is_normal);
  auto broken = classify_block_system(z_regular(6), {{0, 2}, {1, 3}, {4, 5}});
  CHECK_FALSE(broken.is_block_system);
}

TEST_CASE("refinement and quotients") {
  BlockSystem pairs = cells(6, {{0, 3}, {1, 4}, {2, 5}});
  BlockSystem triples = cells(6, {{0, 2, 4}, {1, 3, 5}});
  CHECK(refines(pairs, BlockSystem::universal(6)));
  CHECK_FALSE(refines(pairs, triples));
  CHECK_FALSE(refines(triples, pairs));
  CHECK_THROWS_AS(quotient_system(triples, pairs), InvalidArgument);

  PermGroup z12 = z_regular(12);
  BlockSystem b2 = minimal_block_containing(z12, 0, 6);
  BlockSystem b6 = minimal_block_containing(z12, 0, 2);
  REQUIRE(refines(b2, b6));
  BlockSystem q = quotient_system(b6, b2);
  CHECK(q.degree() == 6);
  CHECK(q.num_blocks() == 2);
  CHECK(q.block_size() == 3);
  CHECK(lift_system(q, b2) == b6);
}

TEST_CASE("verify_tower") {
  PermGroup z12 = z_regular(12);
  std::vector<BlockSystem> tower{BlockSystem::singletons(12), minimal_block_containing(z12, 0, 6),
                                 minimal_block_containing(z12, 0, 3), BlockSystem::universal(12)};
  auto check = verify_tower(z12, tower);
  CHECK(check.m_step);
  CHECK(check.normal);
  CHECK(check.full);
  CHECK(check.ratios == std::vector<std::size_t>{2, 2, 3});
  CHECK(check.ratios.size() == 3);

  std::vector<BlockSystem> crossed{BlockSystem::singletons(12), minimal_block_containing(z12, 0, 6),
                                   minimal_block_containing(z12, 0, 4)};
  auto bad = verify_tower(z12, crossed);
  CHECK_FALSE(bad.m_step);
  REQUIRE(bad.broken_at);
  CHECK(*bad.broken_at == 2);
}

TEST_CASE("block preimage and partition stabilizer") {
  BlockSystem pairs = cells(6, {{0, 3}, {1, 4}, {2, 5}});
  PermGroup wreath = partition_stabilizer(pairs);
  CHECK(wreath.order() == 48);
  CHECK(is_invariant(wreath, pairs));
  auto action = action_on_blocks(wreath, pairs);
  Permutation wanted = Permutation::from_cycles(3, {{0, 2}});
  auto lifted = block_preimage(wreath, pairs, wanted);
  REQUIRE(lifted);
  CHECK(wreath.contains(*lifted));
  CHECK(action(*lifted) == wanted);
  CHECK_FALSE(block_preimage(z_regular(6), pairs, wanted));
  CHECK(partition_stabilizer(cells(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}})).order() == 82944);
}

TEST_CASE("property: block systems of transitive groups match the exhaustive scan") {
  std::vector<PermGroup> groups;
  for (const auto& spec : standard_corpus(8)) groups.push_back(regular_representation(spec, Side::left).group);
  for (const auto& [name, g] : repro::regular_finder_ambients()) groups.push_back(g);
  for (const auto& g : groups) {
    std::vector<oracle::Partition> found;
    for (const auto& b : all_block_systems(g)) found.push_back(b.blocks());
    std::sort(found.begin(), found.end());
    CHECK(found == oracle::invariant_partitions(g.degree(), g.generators()));
  }
}

TEST_CASE("property: kernel and quotient sizes") {
  std::vector<PermGroup> groups;
  for (const auto& spec : standard_corpus(24)) groups.push_back(regular_representation(spec, Side::left).group);
  groups.push_back(inner_holomorph(GroupSpec::dicyclic(3)));
  groups.push_back(inner_holomorph(GroupSpec::frobenius(5, 4)));
  groups.push_back(repro::affine_general_linear_3_2());
  for (const auto& g : groups)
    for (const auto& b : all_block_systems(g)) {
      PermGroup kernel = fix_blocks(g, b);
      auto action = action_on_blocks(g, b);
      CHECK(g.order() == kernel.order() * action.image.order());
      CHECK(is_normal_in(kernel, g));
      CHECK(kernel == fix_blocks_by_kernel(g, b));
      CHECK(kernel == fix_blocks_by_filter(g, b));
      for (const auto& gen : kernel.generators()) CHECK(action(gen).is_identity());
    }
}

TEST_CASE("property: orbit systems of normal subgroups are normal") {
  std::vector<PermGroup> groups{inner_holomorph(GroupSpec::dihedral(4)), inner_holomorph(GroupSpec::q8()),
                                PermGroup::symmetric(4)};
  for (const auto& spec : standard_corpus(16)) groups.push_back(regular_representation(spec, Side::left).group);
  for (const auto& g : groups)
    for (const auto& n : minimal_normal_subgroups(g)) {
      BlockSystem b = orbit_block_system(g, n);
      auto verdict = classify_block_system(g, b.blocks());
      CHECK(verdict.is_block_system);
      CHECK(verdict.is_normal);
    }
}

TEST_CASE("property: family closure under restrictions and quotients") {
  // Closure holds except for Z8, which the family's definition leaves out
  // although it is a subgroup and a quotient of members with o(y) = 8.
  auto is_z8 = [](const GroupTable& t) { return t.order() == 8 && fingerprint(t).order_histogram.count(8) == 1; };
  std::size_t z8_seen = 0;
  for (const auto& spec : standard_corpus(64)) {
    if (!in_family_R(spec).member) continue;
    PermGroup reg = regular_representation(spec, Side::left).group;
    for (const auto& b : all_block_systems(reg)) {
      CAPTURE(spec.name());
      auto restricted = GroupTable::from_perm_group(block_restriction(reg, b.block(0)));
      if (!in_family_R(restricted).member) {
        CHECK(is_z8(restricted));
        ++z8_seen;
      }
      PermGroup image = action_on_blocks(reg, b).image;
      if (image.transitivity_profile().regular) {
        auto quotient = GroupTable::from_perm_group(image);
        if (!in_family_R(quotient).member) {
          CHECK(is_z8(quotient));
          ++z8_seen;
        }
      }
    }
  }
  CHECK(z8_seen > 0);
}
