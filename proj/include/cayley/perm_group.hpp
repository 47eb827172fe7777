#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "cayley/bigint.hpp"
#include "cayley/permutation.hpp"
#include "cayley/stab_chain.hpp"

namespace cayley {

/// Default ceiling on the number of elements any brute-force operation may
/// enumerate.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

struct TransitivityProfile {
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
};

/// A permutation group given by generators. The stabilizer chain is built at
/// construction, so a PermGroup is immutable and safe to share across threads.
///
/// Generators are canonicalized (identities dropped, deduplicated, sorted
/// lexicographically by image sequence) so that the chain, and everything
/// derived from it, does not depend on the order the caller supplied them in.
class PermGroup {
 public:
  /// The trivial group of degree 1.
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  /// Same group, with a chain whose base starts with `base_prefix`.
  static PermGroup with_base(std::size_t degree, std::vector<Permutation> generators,
                             std::span<const Point> base_prefix);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);
  /// <(0 1 ... n-1)>.
  static PermGroup cyclic(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabChain& chain() const { return *chain_; }
  std::vector<Point> base() const { return chain_->base(); }

  BigInt order() const { return chain_->order(); }
  /// order() as a 64-bit integer (throws std::overflow_error if it is larger).
  std::uint64_t order_u64() const { return to_u64(order()); }
  bool is_trivial() const { return chain_->levels().empty(); }

  /// True iff p sifts to the identity through the chain.
  bool contains(const Permutation& p) const { return chain_->contains(p); }
  bool contains_all(std::span<const Permutation> ps) const;
  /// H <= *this (same degree and every generator of H is a member).
  bool contains_group(const PermGroup& h) const;

  std::vector<Point> orbit(Point x) const;
  /// Orbits, each sorted, sorted by minimal element.
  std::vector<std::vector<Point>> orbits() const;
  TransitivityProfile transitivity_profile() const;
  bool is_transitive() const;

  /// All elements, in the order u_0 * u_1 * ... * u_m with the first level's
  /// transversal outermost. Throws CapExceeded if order() > cap.
  std::vector<Permutation> enumerate_elements(std::uint64_t cap = kDefaultCap) const;

  /// Structural group equality.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<const Point> base_prefix);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabChain> chain_;
};

/// Enumerated elements of a group with an index lookup, for brute-force
/// algorithms.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& g, std::uint64_t cap = kDefaultCap);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  std::size_t identity_index() const { return identity_; }

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::size_t identity_ = 0;
};

/// Subgroup generated by a set of elements, picking generators greedily in
/// the given order (an element becomes a generator only if it is not yet in
/// the span of the previous ones).
PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements);

/// Greedy small generating set of a group (sifts the elements of its
/// canonical generator list and transversals).
std::vector<Permutation> reduced_generators(const PermGroup& g);

/// Uniformly random element: a product of uniformly chosen transversal
/// elements, one per chain level.
Permutation random_element(const PermGroup& g, std::mt19937_64& rng);

/// Orbits of the group generated by `gens` on {0..degree-1}, sorted as above.
std::vector<std::vector<Point>> orbits_of(std::size_t degree, std::span<const Permutation> gens);

}  // namespace cayley
