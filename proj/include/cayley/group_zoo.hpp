#pragma once

#include <cstdint>
#include <vector>

#include "cayley/group_spec.hpp"
#include "cayley/group_table.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

enum class Side { left, right };

/// A permutation group on the labels of an abstract group. Point x is the
/// element with label x.
struct LabeledPermGroup {
  PermGroup group;
  GroupSpec spec;
  Side side = Side::left;
};

/// Left: x -> g x. Right: x -> x g^-1.
Permutation left_translation(const GroupTable& t, GroupTable::Element g);
Permutation right_translation(const GroupTable& t, GroupTable::Element g);

LabeledPermGroup regular_representation(const GroupSpec& spec, Side side);

/// <G_L, G_R> on the labels of spec; order |G|^2 / |Z(G)|.
PermGroup inner_holomorph(const GroupSpec& spec);

/// Z_p x| <w> acting on Z_p by t -> w^i t + x.
PermGroup frobenius_natural(std::uint64_t p, std::uint64_t n);

/// The two subgroups of the inner holomorph of frobenius(p, n) given by
///   G1 = < [(1, 1), (0, 1)], [(0, w^a), (0, w^b)] >
///   G2 = < [(0, 1), (1, 1)], [(0, w^b), (0, w^a)] >
/// where [g, h] acts as x -> g x h^-1 and (x, w^i) is the label n x + i.
struct Cor2Groups {
  PermGroup holomorph;
  PermGroup first;
  PermGroup second;
};

/// Throws InvalidArgument naming the first failed precondition.
Cor2Groups cor2_groups(std::uint64_t p, std::uint64_t n, std::uint64_t a, std::uint64_t b);

/// Small specs used by property tests and reproduction runs: cyclic,
/// dihedral, dicyclic, 2-groups, Frobenius groups and products, all of
/// order <= max_order.
std::vector<GroupSpec> standard_corpus(std::uint64_t max_order = 64);

/// |Aut(R_2)| for the 2-groups allowed in case (a), quoted constants:
/// 1, Z2, Z2^2, Z2^3, Z2^4, Z4, Q8 and (case b) Z8 -> 1, 1, 6, 168, 20160, 2, 24, 4.
std::uint64_t two_part_automorphism_count(const std::string& two_part);

}  // namespace cayley
