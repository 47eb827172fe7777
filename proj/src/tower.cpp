#include <algorithm>
#include <numeric>
#include <set>

#include "cayley/ci_engine.hpp"
#include "cayley/error.hpp"
#include "cayley/group_table.hpp"
#include "cayley/group_zoo.hpp"
#include "cayley/number_theory.hpp"
#include "cayley/subgroups.hpp"

namespace cayley {

namespace {

BlockSystem orbit_partition(const PermGroup& h) {
  auto orbits = h.orbits();
  return BlockSystem(h.degree(), std::vector<Cell>(orbits.begin(), orbits.end()));
}

nlohmann::json images_of(const Permutation& p) { return p.images(); }

}  // namespace

std::optional<Permutation> align_sylow_orbits(const PermGroup& r, const PermGroup& t, std::uint64_t p,
                                              const PermGroup& ambient, std::uint64_t cap,
                                              Transcript* transcript) {
  if (!is_prime(p)) throw InvalidArgument("align_sylow_orbits: p must be prime");
  if (r.order() % p != 0) throw InvalidArgument("align_sylow_orbits: p does not divide |R|");
  if (!ambient.contains_group(r) || !ambient.contains_group(t))
    throw InvalidArgument("align_sylow_orbits: R and T must lie in the ambient group");
  if (ambient.order() > cap) throw CapExceeded("ambient group of order " + ambient.order().str() + " over cap");

  PermGroup rp = sylow_subgroup(r, p, cap);
  PermGroup tp = sylow_subgroup(t, p, cap);
  BlockSystem target = orbit_partition(rp);

  std::uint64_t checked = 0;
  auto works = [&](const Permutation& delta) {
    ++checked;
    if (orbit_partition(conjugate(tp, delta)) != target) return false;
    PermGroup joined = join(r, conjugate(t, delta));
    auto verdict = classify_block_system(joined, target.blocks(), cap);
    return verdict.is_block_system && verdict.is_normal;
  };

  Permutation identity(r.degree());
  if (works(identity)) {
    note(transcript, {{"event", "align"}, {"p", p}, {"path", "identity"}});
    return identity;
  }

  // Put T_p into the Sylow p-subgroup through R_p, then move inside it.
  PermGroup sylow_r = sylow_subgroup(ambient, p, rp, cap);
  PermGroup sylow_t = sylow_subgroup(ambient, p, tp, cap);
  if (auto c = are_conjugate_subgroups(ambient, sylow_t, sylow_r, cap)) {
    for (const auto& x : sylow_r.enumerate_elements(cap)) {
      Permutation delta = *c * x;
      if (works(delta)) {
        note(transcript, {{"event", "align"}, {"p", p}, {"path", "sylow"}, {"checked", checked},
                          {"delta", images_of(delta)}});
        return delta;
      }
    }
  }

  for (const auto& delta : ambient.enumerate_elements(cap)) {
    if (works(delta)) {
      note(transcript, {{"event", "align"}, {"p", p}, {"path", "exhaustive"}, {"checked", checked},
                        {"delta", images_of(delta)}});
      return delta;
    }
  }
  note(transcript, {{"event", "align_failed"}, {"p", p}, {"checked", checked}});
  return std::nullopt;
}

std::optional<std::string> tower_pattern(const std::vector<std::size_t>& ratios) {
  if (ratios.empty()) return std::nullopt;
  std::uint64_t order = 1;
  for (auto x : ratios) {
    if (x < 2) return std::nullopt;
    order *= x;
  }
  unsigned omega = big_omega(order);
  unsigned e = 0;
  while (order % (std::uint64_t{1} << (e + 1)) == 0) ++e;

  auto descending_primes = [](auto first, auto last, std::size_t floor) {
    for (auto it = first; it != last; ++it) {
      if (!is_prime(*it) || *it < floor) return false;
      if (it != first && *it > *(it - 1)) return false;
    }
    return true;
  };
  if (ratios.size() == omega && descending_primes(ratios.begin(), ratios.end(), 2)) return "main";

  auto tail_is = [&](std::vector<std::size_t> tail, unsigned wanted_e, unsigned wanted_m) {
    if (e != wanted_e || ratios.size() != wanted_m || ratios.size() < tail.size()) return false;
    if (!std::equal(tail.begin(), tail.end(), ratios.end() - tail.size())) return false;
    return descending_primes(ratios.begin(), ratios.end() - tail.size(), 5);
  };
  if (tail_is({4, 3}, 2, omega - 1)) return kTagDicyclic;
  if (tail_is({2, 3, 2, 2}, 3, omega)) return kTagZ3Z8Long;
  if (tail_is({2, 4, 3}, 3, omega - 1)) return kTagZ3Z8Mid;
  if (tail_is({4, 3, 2}, 3, omega - 1)) return kTagZ3Z8End;
  return std::nullopt;
}

namespace {

struct Partial {
  Permutation conjugator;
  std::vector<BlockSystem> tower;
  std::vector<std::size_t> ratios;
  std::optional<std::string> tag;
};

// Where an exceptional tail starts and which quotient it requires.
struct TailCheck {
  std::size_t from_end;
  GroupSpec quotient;
};

std::optional<TailCheck> tail_check(const std::string& tag) {
  if (tag == kTagDicyclic) return TailCheck{2, GroupSpec::dicyclic(3)};
  if (tag == kTagZ3Z8Long) return TailCheck{4, GroupSpec::zn_semidirect_y(3, 8, 2)};
  if (tag == kTagZ3Z8Mid || tag == kTagZ3Z8End) return TailCheck{3, GroupSpec::zn_semidirect_y(3, 8, 2)};
  return std::nullopt;
}

class TowerSearch {
 public:
  TowerSearch(std::uint64_t cap, Transcript& transcript) : cap_(cap), transcript_(transcript) {}

  // prefix: ratios already fixed by the levels above.
  std::optional<Partial> search(const PermGroup& r, const PermGroup& t, const std::vector<std::size_t>& prefix) {
    std::size_t n = r.degree();
    if (n == 1) return Partial{Permutation(1), {BlockSystem::singletons(1)}, {}, std::nullopt};
    PermGroup ambient = join(r, t);
    if (ambient.order() > cap_) throw CapExceeded("<R, T> of order " + ambient.order().str() + " over cap");
    std::uint64_t p = largest_prime_divisor(n);
    transcript_.add({{"event", "level"}, {"degree", n}, {"ambient_order", ambient.order().str()}, {"p", p}});

    if (p != 2) {
      if (auto delta = align_sylow_orbits(r, t, p, ambient, cap_, &transcript_)) {
        if (auto found = descend(r, t, *delta, p, prefix)) return found;
      }
    }
    return exhaustive(r, t, ambient, prefix);
  }

 private:
  std::optional<Partial> descend(const PermGroup& r, const PermGroup& t, const Permutation& delta,
                                 std::uint64_t p, const std::vector<std::size_t>& prefix) {
    PermGroup t1 = conjugate(t, delta);
    BlockSystem blocks = orbit_partition(sylow_subgroup(r, p, cap_));
    PermGroup rq = action_on_blocks(r, blocks).image;
    PermGroup tq = action_on_blocks(t1, blocks).image;
    auto next_prefix = prefix;
    next_prefix.push_back(blocks.block_size());
    auto sub = search(rq, tq, next_prefix);
    if (!sub) return std::nullopt;
    auto lift = block_preimage(join(r, t1), blocks, sub->conjugator);
    if (!lift) throw Error("quotient conjugator has no preimage");
    Partial out;
    out.conjugator = delta * *lift;
    out.tower.push_back(BlockSystem::singletons(r.degree()));
    out.tower.push_back(blocks);
    for (std::size_t i = 1; i < sub->tower.size(); ++i) out.tower.push_back(lift_system(sub->tower[i], blocks));
    out.ratios.push_back(blocks.block_size());
    out.ratios.insert(out.ratios.end(), sub->ratios.begin(), sub->ratios.end());
    out.tag = sub->tag;
    return out;
  }

  // Tries every distinct T^g, main pattern first, then the exceptions.
  std::optional<Partial> exhaustive(const PermGroup& r, const PermGroup& t, const PermGroup& ambient,
                                    const std::vector<std::size_t>& prefix) {
    auto elements = ambient.enumerate_elements(cap_);
    for (bool exceptions : {false, true}) {
      std::set<std::vector<Permutation>> seen;
      std::uint64_t tried = 0;
      for (const auto& g : elements) {
        PermGroup tg = conjugate(t, g);
        auto members = tg.enumerate_elements(cap_);
        std::sort(members.begin(), members.end());
        if (!seen.insert(std::move(members)).second) continue;
        ++tried;
        PermGroup joined = join(r, tg);
        if (auto chain = normal_chain(r, joined, prefix, exceptions)) {
          chain->conjugator = g;
          transcript_.add({{"event", "exhaustive_found"}, {"degree", r.degree()}, {"tried", tried},
                           {"ratios", chain->ratios}, {"conjugator", g.images()}});
          return chain;
        }
        transcript_.add({{"event", "exhaustive_tried"}, {"degree", r.degree()}, {"conjugator", g.images()},
                         {"exceptions", exceptions}});
      }
    }
    transcript_.add({{"event", "exhaustive_failed"}, {"degree", r.degree()}});
    return std::nullopt;
  }

  std::optional<Partial> normal_chain(const PermGroup& r, const PermGroup& g,
                                      const std::vector<std::size_t>& prefix, bool exceptions) {
    std::vector<BlockSystem> normal;
    for (auto& b : all_block_systems(g))
      if (b.num_blocks() == g.degree() || classify_block_system(g, b.blocks(), cap_).is_normal)
        normal.push_back(b);
    std::sort(normal.begin(), normal.end(),
              [](const BlockSystem& a, const BlockSystem& b) { return a.block_size() < b.block_size() || (a.block_size() == b.block_size() && a < b); });
    std::vector<BlockSystem> chain{normal.front()};
    std::vector<std::size_t> ratios;
    std::optional<Partial> out;
    extend_chain(r, normal, prefix, exceptions, chain, ratios, out);
    return out;
  }

  void extend_chain(const PermGroup& r, const std::vector<BlockSystem>& normal,
                    const std::vector<std::size_t>& prefix, bool exceptions, std::vector<BlockSystem>& chain,
                    std::vector<std::size_t>& ratios, std::optional<Partial>& out) {
    if (out) return;
    const BlockSystem last = chain.back();
    if (last.num_blocks() == 1) {
      auto full = prefix;
      full.insert(full.end(), ratios.begin(), ratios.end());
      auto tag = tower_pattern(full);
      if (!tag || (*tag == "main") == exceptions) return;
      std::optional<std::string> exceptional;
      if (*tag != "main") {
        auto check = tail_check(*tag);
        if (check->from_end > ratios.size()) return;
        const BlockSystem& at = chain[chain.size() - 1 - check->from_end];
        if (!isomorphic_to_spec(action_on_blocks(r, at).image, check->quotient, cap_)) return;
        exceptional = *tag;
      }
      out = Partial{Permutation(r.degree()), chain, ratios, exceptional};
      return;
    }
    // Larger steps first, so nonincreasing ratio sequences come out first.
    std::vector<const BlockSystem*> next;
    for (const auto& b : normal)
      if (b.block_size() > last.block_size() && refines(last, b)) next.push_back(&b);
    std::stable_sort(next.begin(), next.end(),
                     [](const BlockSystem* a, const BlockSystem* b) { return a->block_size() > b->block_size(); });
    for (const BlockSystem* b : next) {
      chain.push_back(*b);
      ratios.push_back(b->block_size() / last.block_size());
      extend_chain(r, normal, prefix, exceptions, chain, ratios, out);
      chain.pop_back();
      ratios.pop_back();
      if (out) return;
    }
  }

  std::uint64_t cap_;
  Transcript& transcript_;
};

std::string two_part_of(const FamilyRVerdict& v) {
  if (v.which == FamilyRVerdict::Case::a) return v.two_part;
  return "Z" + std::to_string(v.y_order);
}

}  // namespace

TowerOutcome block_tower_search(const PermGroup& r, const PermGroup& t, std::uint64_t cap) {
  if (r.degree() != t.degree()) throw InvalidArgument("R and T have different degrees");
  if (!r.transitivity_profile().regular || !t.transitivity_profile().regular)
    throw InvalidArgument("R and T must be regular");
  auto table_r = GroupTable::from_perm_group(r);
  if (!isomorphic(table_r, GroupTable::from_perm_group(t))) throw InvalidArgument("R and T are not isomorphic");
  auto family = in_family_R(table_r);
  if (!family.member) throw InvalidArgument("R is not in the family: " + family.reason);
  if (family.odd_part == 1) throw InvalidArgument("the odd part of |R| must exceed 1");
  std::uint64_t aut = two_part_automorphism_count(two_part_of(family));
  if (std::gcd(aut, family.odd_part) != 1)
    throw InvalidArgument("|Aut(R_2)| = " + std::to_string(aut) + " is not coprime to the odd part");

  TowerOutcome outcome;
  TowerSearch search(cap, outcome.transcript);
  auto found = search.search(r, t, {});
  if (!found) {
    outcome.failure = "no conjugator gives a tower matching the allowed patterns";
    return outcome;
  }
  auto tag = tower_pattern(found->ratios);
  PermGroup joined = join(r, conjugate(t, found->conjugator));
  auto check = verify_tower(joined, found->tower, cap);
  if (!tag || !check.normal || !check.full) {
    outcome.failure = "tower failed verification";
    outcome.transcript.add({{"event", "verify_failed"}, {"ratios", found->ratios}});
    return outcome;
  }
  outcome.result = TowerResult{found->conjugator, found->tower, found->ratios, found->tag};
  return outcome;
}

std::vector<Cell> support_decomposition(const PermGroup& n, const BlockSystem& b, std::uint64_t cap) {
  if (!is_invariant(n, b)) throw InvalidArgument("N does not preserve the block system");
  PermGroup soc = socle(n, cap);
  for (const auto& cell : b.blocks()) {
    for (const auto& g : soc.generators())
      if (b.block_of(g(cell.front())) != b.block_of(cell.front()))
        throw InvalidArgument("N does not fix every block");
    PermGroup local = restrict_to(soc, cell);
    if (!local.is_transitive()) throw InvalidArgument("socle is intransitive on a block");
    auto minimal = minimal_normal_subgroups(local, cap);
    bool simple = minimal.size() == 1 && minimal.front().order() == local.order();
    bool abelian = true;
    for (const auto& x : local.generators())
      for (const auto& y : local.generators())
        if (x * y != y * x) abelian = false;
    if (!simple || abelian) throw InvalidArgument("socle on a block is not nonabelian simple");
  }
  std::vector<Cell> cells;
  for (const auto& factor : minimal_normal_subgroups(soc, cap)) cells.push_back(support(factor));
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace cayley
