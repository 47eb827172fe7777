#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cayley/perm_group.hpp"

namespace cayley {

/// H^c = { c^-1 h c : h in H }.
PermGroup conjugate(const PermGroup& h, const Permutation& c);

/// <A, B>.
PermGroup join(const PermGroup& a, const PermGroup& b);

/// True iff g^-1 n g is in N for every pair of generators. Throws
/// InvalidArgument if N is not a subgroup of G.
bool is_normal_in(const PermGroup& n, const PermGroup& g);

/// Smallest normal subgroup of G containing S.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);

/// C_G(H) and N_G(H), by filtering the elements of G.
PermGroup centralizer(const PermGroup& g, const PermGroup& h, std::uint64_t cap = kDefaultCap);
PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::uint64_t cap = kDefaultCap);

/// Center of G.
PermGroup center(const PermGroup& g, std::uint64_t cap = kDefaultCap);

/// Conjugacy classes as index lists into the element table, ordered by their
/// smallest index.
std::vector<std::vector<std::size_t>> conjugacy_classes(const ElementTable& table);

/// Minimal normal subgroups, ordered by (order, generators).
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, std::uint64_t cap = kDefaultCap);
PermGroup socle(const PermGroup& g, std::uint64_t cap = kDefaultCap);

/// A Sylow p-subgroup (trivial when p does not divide |G|). Starts from `start` (a p-subgroup of G; trivial if
/// omitted) and repeatedly adjoins a p-element of N_G(P) \ P.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::uint64_t cap = kDefaultCap);
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const PermGroup& start,
                         std::uint64_t cap = kDefaultCap);

/// Points moved by some element of H.
std::vector<Point> support(const PermGroup& h);

/// Pointwise restriction of a group that leaves `cells` invariant setwise to
/// the points of `cell`, relabelled 0..|cell|-1 in increasing order.
PermGroup restrict_to(const PermGroup& g, std::span<const Point> cell);

}  // namespace cayley
