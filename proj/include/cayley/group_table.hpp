#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/group_spec.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

/// Largest order for which a full multiplication table is built.
inline constexpr std::uint64_t kMaxTableOrder = 4096;

/// Cayley table of a finite group on labels 0..|G|-1.
class GroupTable {
 public:
  using Element = std::uint32_t;

  /// Throws InvalidArgument for bad specs, CapExceeded above kMaxTableOrder.
  static GroupTable from_spec(const GroupSpec& spec);
  /// Labels follow g.enumerate_elements().
  static GroupTable from_perm_group(const PermGroup& g);
  /// Throws InvalidArgument unless `table` is the table of a group.
  static GroupTable from_multiplication(std::size_t order, std::vector<Element> table);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[std::size_t{a} * order_ + b]; }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::uint64_t element_order(Element a) const { return element_order_[a]; }

  bool is_abelian() const;
  std::vector<Element> center() const;
  /// Subgroup generated by `gens`, sorted.
  std::vector<Element> closure(const std::vector<Element>& gens) const;
  std::vector<Element> derived_subgroup() const;
  /// element order -> count.
  std::map<std::uint64_t, std::uint64_t> order_histogram() const;
  /// A short generating list chosen greedily by decreasing element order.
  std::vector<Element> generators() const;

  /// Subgroup on the sorted element list `elements`, relabelled by position.
  GroupTable subgroup(const std::vector<Element>& elements) const;
  /// G/N for a normal subgroup N (sorted element list); cosets are labelled
  /// by their smallest element's rank.
  GroupTable quotient(const std::vector<Element>& normal) const;
  bool is_normal(const std::vector<Element>& subgroup) const;

 private:
  void finish();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> element_order_;
};

/// Invariants compared before any isomorphism search.
struct GroupFingerprint {
  std::size_t order = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::size_t center_size = 0;
  std::size_t derived_size = 0;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const GroupTable& g);

/// An isomorphism a -> b as a label map, or none.
std::optional<std::vector<GroupTable::Element>> find_isomorphism(const GroupTable& a,
                                                                 const GroupTable& b);
bool isomorphic(const GroupTable& a, const GroupTable& b);

/// H as an abstract group matches `spec`. Throws CapExceeded if
/// order(H) > cap or above kMaxTableOrder.
bool isomorphic_to_spec(const PermGroup& h, const GroupSpec& spec, std::uint64_t cap = kDefaultCap);

struct FamilyRVerdict {
  enum class Case { none, a, b };
  bool member = false;
  Case which = Case::none;
  std::uint64_t odd_part = 1;  // n
  /// Case a: the 2-part ("1", "Z2", "Z2^2", "Z2^3", "Z2^4", "Z4", "Q8").
  std::string two_part;
  /// Case b: o(y) and the action y x y^-1 = x^action on the cyclic part.
  std::uint64_t y_order = 0;
  std::uint64_t action = 0;
  std::string reason;
};

std::string case_name(FamilyRVerdict::Case c);

FamilyRVerdict in_family_R(const GroupTable& g);
FamilyRVerdict in_family_R(const GroupSpec& spec);

}  // namespace cayley
