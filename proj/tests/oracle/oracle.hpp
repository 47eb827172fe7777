#pragma once

// Brute-force reference implementations. These only use Permutation and
// plain containers, never the stabilizer chain, so they can check it.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cayley/permutation.hpp"

namespace oracle {

using cayley::Permutation;
using cayley::Point;
using Elements = std::set<Permutation>;
using Partition = std::vector<std::vector<Point>>;

/// All elements of <gens>, by breadth-first multiplication.
Elements closure(std::size_t degree, const std::vector<Permutation>& gens);

/// Elements of S_n preserving the orbit colouring of <gens> on k-tuples.
/// Meant for n <= 7.
Elements k_closure(std::size_t degree, const std::vector<Permutation>& gens, unsigned k);

/// Every partition into equal cells that the group maps to itself, each
/// sorted (cells sorted, cells ordered by first point).
std::vector<Partition> invariant_partitions(std::size_t degree, const std::vector<Permutation>& gens);

/// All subgroups with at most max_order elements (joins of cyclic subgroups).
std::vector<Elements> small_subgroups(const Elements& group, std::size_t max_order);

bool is_regular(std::size_t degree, const Elements& h);

/// Some a in `group` with a^-1 r a = t, elementwise.
bool conjugate_in(const Elements& group, const Elements& r, const Elements& t);

/// element order -> count.
std::map<std::uint64_t, std::uint64_t> order_histogram(const Elements& h);

/// Prime factors of n by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest prime dividing a^k - 1 but no a^l - 1 for 0 < l < k.
std::optional<std::uint64_t> primitive_prime_divisor(std::uint64_t a, std::uint64_t k);

}  // namespace oracle
