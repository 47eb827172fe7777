#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/blocks.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/perm_group.hpp"
#include "cayley/transcript.hpp"

namespace cayley {

/// Some c in A with R^c = T, or none after exhausting a right transversal of
/// N_A(R) in A. Throws InvalidArgument unless R, T <= A; CapExceeded if |A|
/// is over the cap.
std::optional<Permutation> are_conjugate_subgroups(const PermGroup& a, const PermGroup& r,
                                                   const PermGroup& t, std::uint64_t cap = kDefaultCap,
                                                   Transcript* transcript = nullptr);

/// Every regular subgroup of A, in discovery order. With a spec, only those
/// whose element-order histogram matches it (isomorphism is not checked).
std::vector<PermGroup> all_regular_subgroups(const PermGroup& a, const std::optional<GroupSpec>& spec,
                                             std::uint64_t cap = kDefaultCap);

/// One representative per A-conjugacy class of regular subgroups of A
/// isomorphic to spec, in discovery order.
std::vector<PermGroup> regular_subgroups(const PermGroup& a, const GroupSpec& spec,
                                         std::uint64_t cap = kDefaultCap, Transcript* transcript = nullptr);

/// Class representatives of all regular subgroups of A, of any isomorphism type.
std::vector<PermGroup> regular_subgroup_classes(const PermGroup& a, std::uint64_t cap = kDefaultCap);

struct CiVerdict {
  enum class Status { ci_for_this_structure, not_ci_witness, inconclusive };
  Status status = Status::inconclusive;
  std::optional<std::pair<PermGroup, PermGroup>> witness;
  std::size_t classes = 0;
  Transcript transcript;
};

std::string status_name(CiVerdict::Status s);

/// Counts classes of regular subgroups of A isomorphic to spec: at most one
/// means the structure with automorphism group A is CI for it.
CiVerdict babai_check(const PermGroup& a, const GroupSpec& spec, std::uint64_t cap = kDefaultCap);

struct HolomorphReport {
  BigInt holomorph_order;
  bool is_3_closed = false;
  bool left_right_conjugate = false;
};

/// Builds <G_L, G_R>, tests 3-closure and whether G_L, G_R are conjugate in it.
/// Throws BudgetExceeded if |G| > 64.
HolomorphReport holomorph_witness(const GroupSpec& spec, std::uint64_t cap = kDefaultCap);

/// delta in the ambient group with Orb((T^delta)_p) = Orb(R_p), giving a normal
/// block system of <R, T^delta> with blocks of size |R_p|; none if the search
/// is exhausted.
std::optional<Permutation> align_sylow_orbits(const PermGroup& r, const PermGroup& t, std::uint64_t p,
                                              const PermGroup& ambient, std::uint64_t cap = kDefaultCap,
                                              Transcript* transcript = nullptr);

/// The ratio sequence is one the tower theorem allows: nonincreasing primes
/// with m = Omega(N), or one of the order-12 / order-24 tails. Returns "main",
/// an exception tag, or none.
std::optional<std::string> tower_pattern(const std::vector<std::size_t>& ratios);

inline constexpr const char* kTagDicyclic = "dicyclic-4-3";
inline constexpr const char* kTagZ3Z8Long = "z3z8-2-3-2-2";
inline constexpr const char* kTagZ3Z8Mid = "z3z8-2-4-3";
inline constexpr const char* kTagZ3Z8End = "z3z8-4-3-2";

struct TowerResult {
  Permutation conjugator;
  std::vector<BlockSystem> tower;
  std::vector<std::size_t> ratios;
  std::optional<std::string> exceptional_case;
};

struct TowerOutcome {
  std::optional<TowerResult> result;
  std::string failure;
  Transcript transcript;
};

/// Finds g in <R, T> and a full chain of normal block systems of <R, T^g>
/// whose ratios fit tower_pattern. Throws InvalidArgument unless R and T are
/// regular, isomorphic and in the family R with |Aut(R_2)| coprime to the
/// odd part (which must exceed 1).
TowerOutcome block_tower_search(const PermGroup& r, const PermGroup& t, std::uint64_t cap = kDefaultCap);

/// Supports of the simple direct factors of socle(N), sorted. Throws
/// InvalidArgument unless socle(N) acts on each block of B as a transitive
/// nonabelian simple group.
std::vector<Cell> support_decomposition(const PermGroup& n, const BlockSystem& b,
                                        std::uint64_t cap = kDefaultCap);

/// Number of T-conjugacy classes of semiregular subgroups of order p.
std::size_t semiregular_classes(const PermGroup& t, std::uint64_t p, std::uint64_t cap = kDefaultCap);

}  // namespace cayley
