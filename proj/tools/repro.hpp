#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/json_io.hpp"

namespace cayley::repro {

struct Options {
  std::uint64_t seed = 20211011;
  std::uint64_t cap = kDefaultCap;
  /// Random trials for claims that sample (tower-dic3).
  std::size_t trials = 20;
};

struct ReproReport {
  std::string claim;
  Json inputs;
  Json outputs;
  bool pass = false;

  Json to_json() const;
};

const std::vector<std::string>& claim_ids();

/// Throws InvalidArgument for an unknown claim id.
ReproReport run_claim(const std::string& id, const Options& options = {});

// Ambient groups used by the reproduction runs, exposed for tests.
PermGroup dihedral_natural(std::size_t n);
PermGroup affine_general_linear_3_2();
std::vector<std::pair<std::string, PermGroup>> closure_chain_corpus();
std::vector<std::pair<std::string, PermGroup>> regular_finder_ambients();

}  // namespace cayley::repro
