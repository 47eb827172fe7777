#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "cayley/ci_engine.hpp"
#include "cayley/closures.hpp"
#include "cayley/error.hpp"
#include "cayley/group_table.hpp"
#include "cayley/group_zoo.hpp"
#include "cayley/subgroups.hpp"

namespace cayley {

namespace {

bool conjugate_equals(const PermGroup& r, const Permutation& c, const PermGroup& t) {
  for (const auto& g : r.generators())
    if (!t.contains(conjugate(g, c))) return false;
  return true;
}

void require_subgroup(const PermGroup& a, const PermGroup& h, const char* name) {
  if (h.degree() != a.degree() || !a.contains_group(h))
    throw InvalidArgument(std::string(name) + " is not a subgroup of the ambient group");
}

// No fixed points and every cycle of the same length.
bool is_semiregular_element(const Permutation& p) {
  if (p.is_identity()) return true;
  if (p.fixed_points() != 0) return false;
  auto cycles = p.cycles();
  for (const auto& c : cycles)
    if (c.size() != cycles.front().size()) return false;
  return true;
}

using Key = std::vector<std::uint32_t>;

}  // namespace

std::optional<Permutation> are_conjugate_subgroups(const PermGroup& a, const PermGroup& r,
                                                   const PermGroup& t, std::uint64_t cap,
                                                   Transcript* transcript) {
  require_subgroup(a, r, "R");
  require_subgroup(a, t, "T");
  if (r.order() != t.order()) {
    note(transcript, {{"event", "orders_differ"}});
    return std::nullopt;
  }
  if (r == t) return Permutation(a.degree());
  if (a.order() > cap) throw CapExceeded("ambient group of order " + a.order().str() + " over cap");

  ElementTable table(a, cap);
  std::vector<std::size_t> normalizing;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (conjugate_equals(r, table[i], r)) normalizing.push_back(i);

  std::vector<bool> covered(table.size(), false);
  std::size_t tried = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (covered[i]) continue;
    ++tried;
    if (conjugate_equals(r, table[i], t)) {
      note(transcript, {{"event", "conjugator"}, {"tried", tried}, {"c", table[i].images()}});
      return table[i];
    }
    note(transcript, {{"event", "tried"}, {"c", table[i].images()}});
    for (std::size_t n : normalizing) covered[*table.index_of(table[n] * table[i])] = true;
  }
  note(transcript, {{"event", "exhausted"},
                    {"transversal_size", tried},
                    {"normalizer_order", normalizing.size()},
                    {"ambient_order", table.size()}});
  return std::nullopt;
}

namespace {

class RegularSearch {
 public:
  RegularSearch(const PermGroup& a, const std::optional<GroupSpec>& spec, std::uint64_t cap)
      : table_(a, cap), n_(a.degree()) {
    if (spec) {
      spec->validate();
      if (spec->order() != n_) throw InvalidArgument("spec order differs from the degree");
      histogram_ = GroupTable::from_spec(*spec).order_histogram();
    }
    usable_.assign(table_.size(), false);
    buckets_.assign(n_, {});
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const auto& g = table_[i];
      if (!is_semiregular_element(g)) continue;
      if (histogram_ && !histogram_->count(g.order())) continue;
      usable_[i] = true;
      if (!g.is_identity()) buckets_[g(0)].push_back(static_cast<std::uint32_t>(i));
    }
  }

  std::vector<Key> run() {
    if (n_ == 1) return {Key{static_cast<std::uint32_t>(table_.identity_index())}};
    Key start{static_cast<std::uint32_t>(table_.identity_index())};
    visited_.insert(start);
    descend(start, {});
    return found_;
  }

  const ElementTable& table() const { return table_; }

 private:
  void descend(const Key& elements, const std::vector<std::uint32_t>& gens) {
    if (elements.size() == n_) {
      found_.push_back(elements);
      return;
    }
    std::vector<bool> in_orbit(n_, false);
    for (auto i : elements) in_orbit[table_[i](0)] = true;
    Point y = 0;
    while (in_orbit[y]) ++y;
    for (auto g : buckets_[y]) {
      auto next_gens = gens;
      next_gens.push_back(g);
      auto closed = close(next_gens);
      if (!closed || !visited_.insert(*closed).second) continue;
      descend(*closed, next_gens);
    }
  }

  // Subgroup generated by gens, if it can still lie in a regular subgroup
  // of the right type.
  std::optional<Key> close(const std::vector<std::uint32_t>& gens) const {
    std::vector<std::uint32_t> out{static_cast<std::uint32_t>(table_.identity_index())};
    std::unordered_set<std::uint32_t> seen(out.begin(), out.end());
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto s : gens) {
        auto y = static_cast<std::uint32_t>(*table_.index_of(table_[out[i]] * table_[s]));
        if (!seen.insert(y).second) continue;
        if (!usable_[y] || out.size() + 1 > n_) return std::nullopt;
        if (histogram_) {
          auto o = table_[y].order();
          if (++counts[o] > histogram_->at(o)) return std::nullopt;
        }
        out.push_back(y);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementTable table_;
  std::size_t n_;
  std::optional<std::map<std::uint64_t, std::uint64_t>> histogram_;
  std::vector<bool> usable_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::set<Key> visited_;
  std::vector<Key> found_;
};

PermGroup group_of(const ElementTable& table, const Key& key) {
  std::vector<Permutation> elements;
  for (auto i : key) elements.push_back(table[i]);
  return subgroup_from_elements(table.group().degree(), elements);
}

Key conjugate_key(const ElementTable& table, const Key& k, const Permutation& c) {
  Key image;
  image.reserve(k.size());
  for (auto i : k) image.push_back(static_cast<std::uint32_t>(*table.index_of(conjugate(table[i], c))));
  std::sort(image.begin(), image.end());
  return image;
}

// Class representatives (as keys) of the found subgroups under conjugation
// by A; each class is swept by conjugating with A's generators.
std::vector<Key> classify(const ElementTable& table, const std::vector<Key>& found) {
  std::set<Key> seen;
  std::vector<Key> reps;
  for (const auto& k : found) {
    if (seen.count(k)) continue;
    reps.push_back(k);
    std::vector<Key> queue{k};
    seen.insert(k);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : table.group().generators()) {
        Key image = conjugate_key(table, queue[i], g);
        if (seen.insert(image).second) queue.push_back(std::move(image));
      }
  }
  return reps;
}

}  // namespace

std::vector<PermGroup> all_regular_subgroups(const PermGroup& a, const std::optional<GroupSpec>& spec,
                                             std::uint64_t cap) {
  RegularSearch search(a, spec, cap);
  std::vector<PermGroup> out;
  for (const auto& k : search.run()) out.push_back(group_of(search.table(), k));
  return out;
}

std::vector<PermGroup> regular_subgroups(const PermGroup& a, const GroupSpec& spec, std::uint64_t cap,
                                         Transcript* transcript) {
  RegularSearch search(a, spec, cap);
  auto found = search.run();
  auto reps = classify(search.table(), found);
  std::vector<PermGroup> out;
  for (const auto& k : reps) {
    PermGroup h = group_of(search.table(), k);
    bool iso = isomorphic_to_spec(h, spec, cap);
    note(transcript, {{"event", "class"}, {"generators", [&] {
                        nlohmann::json g = nlohmann::json::array();
                        for (const auto& x : h.generators()) g.push_back(x.images());
                        return g;
                      }()}, {"isomorphic", iso}});
    if (iso) out.push_back(std::move(h));
  }
  note(transcript, {{"event", "regular_subgroups"},
                    {"histogram_matches", found.size()},
                    {"classes", out.size()}});
  return out;
}

std::vector<PermGroup> regular_subgroup_classes(const PermGroup& a, std::uint64_t cap) {
  RegularSearch search(a, std::nullopt, cap);
  auto reps = classify(search.table(), search.run());
  std::vector<PermGroup> out;
  for (const auto& k : reps) out.push_back(group_of(search.table(), k));
  return out;
}

std::string status_name(CiVerdict::Status s) {
  switch (s) {
    case CiVerdict::Status::ci_for_this_structure: return "ci_for_this_structure";
    case CiVerdict::Status::not_ci_witness: return "not_ci_witness";
    case CiVerdict::Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CiVerdict babai_check(const PermGroup& a, const GroupSpec& spec, std::uint64_t cap) {
  CiVerdict v;
  auto reps = regular_subgroups(a, spec, cap, &v.transcript);
  v.classes = reps.size();
  if (reps.empty()) {
    v.status = CiVerdict::Status::inconclusive;
  } else if (reps.size() == 1) {
    v.status = CiVerdict::Status::ci_for_this_structure;
  } else {
    // Certify the first pair by an exhausted conjugacy search.
    if (are_conjugate_subgroups(a, reps[0], reps[1], cap, &v.transcript))
      throw Error("class representatives turned out conjugate");
    v.status = CiVerdict::Status::not_ci_witness;
    v.witness = std::make_pair(reps[0], reps[1]);
  }
  return v;
}

HolomorphReport holomorph_witness(const GroupSpec& spec, std::uint64_t cap) {
  spec.validate();
  if (spec.order() > 64) throw BudgetExceeded("holomorph witness needs |G| <= 64");
  HolomorphReport out;
  PermGroup hol = inner_holomorph(spec);
  out.holomorph_order = hol.order();
  out.is_3_closed = is_k_closed(hol, 3);
  auto left = regular_representation(spec, Side::left).group;
  auto right = regular_representation(spec, Side::right).group;
  out.left_right_conjugate = are_conjugate_subgroups(hol, left, right, cap).has_value();
  return out;
}

std::size_t semiregular_classes(const PermGroup& t, std::uint64_t p, std::uint64_t cap) {
  ElementTable table(t, cap);
  std::set<Key> subgroups;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& x = table[i];
    if (x.order() != p || x.fixed_points() != 0) continue;
    Key k;
    Permutation power = x;
    for (std::uint64_t j = 0; j < p; ++j, power = power * x)
      k.push_back(static_cast<std::uint32_t>(*table.index_of(power)));
    std::sort(k.begin(), k.end());
    subgroups.insert(std::move(k));
  }
  std::set<Key> done;
  std::size_t classes = 0;
  for (const auto& start : subgroups) {
    if (done.count(start)) continue;
    ++classes;
    std::vector<Key> queue{start};
    done.insert(start);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : t.generators()) {
        Key image = conjugate_key(table, queue[i], g);
        if (done.insert(image).second) queue.push_back(std::move(image));
      }
  }
  return classes;
}

}  // namespace cayley
