#include <doctest.h>

#include <random>

#include "cayley/closures.hpp"
#include "cayley/error.hpp"
#include "cayley/group_zoo.hpp"
#include "oracle/oracle.hpp"
#include "repro.hpp"

using namespace cayley;

namespace {

oracle::Elements elements_of(const PermGroup& g) {
  auto v = g.enumerate_elements();
  return {v.begin(), v.end()};
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("colored structure encoding") {
  ColoredStructure s(3, 2, std::vector<std::uint32_t>(9, 7));
  CHECK(s.num_colors() == 1);
  CHECK(s.colors()[0] == 0);
  CHECK(s.encode(std::vector<Point>{2, 1}) == 7);
  CHECK(s.decode(7) == std::vector<Point>{2, 1});
  // Colours are renumbered by first appearance.
  ColoredStructure t(2, 1, {5, 3});
  CHECK(t.colors() == std::vector<std::uint32_t>{0, 1});
  CHECK_THROWS_AS(ColoredStructure(3, 2, std::vector<std::uint32_t>(8, 0)), InvalidArgument);
}

TEST_CASE("orbit colourings") {
  PermGroup z4 = PermGroup::cyclic(4);
  CHECK(orbit_coloring(z4, 2).num_colors() == 4);
  CHECK(orbit_coloring(z4, 3).num_colors() == 16);
  CHECK(orbit_coloring(PermGroup::symmetric(6), 2).num_colors() == 2);
  CHECK(orbit_coloring(PermGroup::symmetric(6), 3).num_colors() == 5);
  CHECK_THROWS_AS(orbit_coloring(PermGroup::cyclic(65), 3), BudgetExceeded);
  CHECK_NOTHROW(orbit_coloring(PermGroup::cyclic(65), 2));
  CHECK_THROWS_AS(orbit_coloring(PermGroup::cyclic(20), 3, 10), BudgetExceeded);
}

TEST_CASE("is_automorphism") {
  PermGroup z5 = PermGroup::cyclic(5);
  auto s = orbit_coloring(z5, 2);
  for (const auto& g : z5.generators()) CHECK(is_automorphism(s, g));
  CHECK_FALSE(is_automorphism(s, Permutation::from_cycles(5, {{0, 1}})));
  CHECK(is_automorphism(s, Permutation(5)));
  CHECK_THROWS_AS(is_automorphism(s, Permutation(4)), InvalidArgument);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(ColoredStructure(6, 2, std::vector<std::uint32_t>(36, 0))).order() == 720);
  CHECK(automorphisms(orbit_coloring(PermGroup::cyclic(5), 2)).order() == 5);
  SearchStats stats;
  PermGroup hol = inner_holomorph(GroupSpec::frobenius(5, 4));
  CHECK(automorphisms(orbit_coloring(hol, 3), 0, &stats).order() == 400);
  CHECK(stats.nodes > 0);
}

TEST_CASE("k-closures") {
  for (std::size_t n : {3, 5, 8}) {
    CHECK(is_k_closed(PermGroup::symmetric(n), 2));
    CHECK(is_k_closed(PermGroup::symmetric(n), 3));
  }
  PermGroup f = frobenius_natural(7, 3);
  CHECK(k_closure(f, 2).order() == 21);
  CHECK(elements_of(k_closure(f, 2)) == oracle::k_closure(7, f.generators(), 2));
  CHECK(is_k_closed(inner_holomorph(GroupSpec::frobenius(7, 3)), 3));
  CHECK(is_k_closed(inner_holomorph(GroupSpec::frobenius(5, 4)), 3));
  // A5 is 3-transitive on 5 points, so neither closure is proper.
  CHECK(k_closure(PermGroup::alternating(5), 2).order() == 120);
  CHECK(k_closure(PermGroup::alternating(5), 3).order() == 120);
  CHECK(k_closure(PermGroup::alternating(4), 2).order() == 24);
  CHECK(is_k_closed(PermGroup::alternating(4), 3));
  CHECK(is_k_closed(PermGroup::cyclic(4), 2));
}

TEST_CASE("property: closure chain and brute force on random small groups") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> gens{random_permutation(n, rng)};
    if (trial % 2) gens.push_back(random_permutation(n, rng));
    PermGroup g(n, gens);
    PermGroup c3 = k_closure(g, 3);
    PermGroup c2 = k_closure(g, 2);
    CHECK(c3.contains_group(g));
    CHECK(c2.contains_group(c3));
    CHECK(elements_of(c3) == oracle::k_closure(n, g.generators(), 3));
    CHECK(elements_of(c2) == oracle::k_closure(n, g.generators(), 2));
    // Closing twice changes nothing.
    CHECK(k_closure(c2, 2) == c2);
  }
}

TEST_CASE("property: closure chain on the corpus") {
  for (const auto& [name, g] : repro::closure_chain_corpus()) {
    CAPTURE(name);
    PermGroup c3 = k_closure(g, 3);
    CHECK(c3.contains_all(g.generators()));
    CHECK(k_closure(g, 2).contains_all(c3.generators()));
  }
}

TEST_CASE("property: automorphisms of random colourings") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + rng() % 4;
    unsigned k = 1 + rng() % 2;
    std::size_t tuples = k == 1 ? n : n * n;
    std::vector<std::uint32_t> colors(tuples);
    for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % 3);
    ColoredStructure s(n, k, colors);
    PermGroup aut = automorphisms(s);
    std::size_t brute = 0;
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
    do {
      Permutation p(images);
      bool preserves = is_automorphism(s, p);
      brute += preserves;
      CHECK(aut.contains(p) == preserves);
    } while (std::next_permutation(images.begin(), images.end()));
    CHECK(aut.order() == brute);
  }
}
