#include <doctest.h>

#include <fstream>
#include <random>

#include "cayley/ci_engine.hpp"
#include "cayley/closures.hpp"
#include "cayley/error.hpp"
#include "cayley/group_zoo.hpp"
#include "cayley/json_io.hpp"
#include "repro.hpp"

using namespace cayley;

namespace {

PermGroup load_fixture(const std::string& name) {
  std::ifstream in(std::string(CAYLEY_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return perm_group_from_json(Json::parse(in));
}

}  // namespace

TEST_CASE("permutation and group JSON") {
  Permutation p = Permutation::from_cycles(4, {{0, 2, 3}});
  CHECK(to_json(p) == Json::parse("[2, 1, 3, 0]"));
  CHECK(permutation_from_json(to_json(p)) == p);
  PermGroup g = PermGroup::symmetric(4);
  Json j = to_json(g);
  CHECK(j["degree"] == 4);
  CHECK(perm_group_from_json(j) == g);
  CHECK(j.dump() == to_json(perm_group_from_json(j)).dump());
  CHECK_THROWS_AS(permutation_from_json(Json::parse("[0, 0]")), InvalidArgument);
  CHECK_THROWS_AS(perm_group_from_json(Json::parse(R"({"degree": 3})")), InvalidArgument);
  CHECK_THROWS_AS(perm_group_from_json(Json::parse(R"({"degree": 3, "generators": [[0, 1]]})")), InvalidArgument);
}

TEST_CASE("property: round trips") {
  std::mt19937_64 rng(41);
  for (const auto& spec : standard_corpus(24)) {
    CHECK(group_spec_from_json(to_json(spec)) == spec);
    PermGroup g = regular_representation(spec, Side::left).group;
    CHECK(perm_group_from_json(to_json(g)) == g);
    for (const auto& b : all_block_systems(g)) CHECK(block_system_from_json(to_json(b)) == b);
    if (g.degree() <= 12) {
      auto s = orbit_coloring(g, 2);
      CHECK(colored_structure_from_json(to_json(s)) == s);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 10;
    std::vector<std::uint32_t> colors(n * n * n);
    for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % 4);
    ColoredStructure s(n, 3, colors);
    CHECK(colored_structure_from_json(to_json(s)) == s);
  }
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("frobenius:5:4") == GroupSpec::frobenius(5, 4));
  CHECK(parse_group_spec("q8") == GroupSpec::q8());
  CHECK(parse_group_spec(R"({"kind":"cyclic","n":5})") == GroupSpec::cyclic(5));
  CHECK(parse_group_spec(R"({"kind":"direct_product","factors":[{"kind":"cyclic","n":3},{"kind":"q8"}]})").order() == 24);
  CHECK(parse_group_spec("zn_semidirect_y:3:8:2") == GroupSpec::zn_semidirect_y(3, 8, 2));
  CHECK_THROWS_AS(parse_group_spec("{not json"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("cyclic:x"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("cyclic"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("tetrahedral:3"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("frobenius:7:4"), InvalidArgument);
}

TEST_CASE("result JSON") {
  auto w = holomorph_witness(GroupSpec::frobenius(5, 4));
  Json j = to_json(w);
  CHECK(j["is_3_closed"] == true);
  CHECK(j["left_right_conjugate"] == false);
  auto verdict = babai_check(inner_holomorph(GroupSpec::frobenius(5, 4)), GroupSpec::dicyclic(5));
  Json v = to_json(verdict);
  CHECK(v["status"] == "not_ci_witness");
  CHECK(v["classes"] == 2);
}

TEST_CASE("sporadic fixtures") {
  PermGroup m12 = load_fixture("m12.json");
  CHECK(m12.degree() == 12);
  CHECK(m12.order() == 95040);
  CHECK(semiregular_classes(m12, 3) == 1);
  PermGroup m24 = load_fixture("m24.json");
  CHECK(m24.order() == 244823040);
}

TEST_CASE("reproduction reports") {
  CHECK(repro::claim_ids().size() == 10);
  CHECK_THROWS_AS(repro::run_claim("no-such-claim"), InvalidArgument);
  auto first = repro::run_claim("example-degree-20");
  CHECK(first.pass);
  CHECK(first.outputs["holomorph_order"] == "400");
  CHECK(first.outputs["dicyclic_classes"] == 2);
  // Byte-stable across runs.
  CHECK(first.to_json().dump() == repro::run_claim("example-degree-20").to_json().dump());
  repro::Options options;
  options.trials = 3;
  CHECK(repro::run_claim("tower-dic3", options).to_json().dump() ==
        repro::run_claim("tower-dic3", options).to_json().dump());
  CHECK(repro::run_claim("zsigmondy-table").pass);
  CHECK(repro::affine_general_linear_3_2().order() == 1344);
}
