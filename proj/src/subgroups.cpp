#include "cayley/subgroups.hpp"

#include <algorithm>

#include "cayley/error.hpp"
#include "cayley/number_theory.hpp"

namespace cayley {

PermGroup conjugate(const PermGroup& h, const Permutation& c) {
  if (c.degree() != h.degree()) throw InvalidArgument("conjugator degree mismatch");
  std::vector<Permutation> gens;
  Permutation ci = c.inverse();
  for (const auto& x : h.generators()) gens.push_back(ci * x * c);
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("degree mismatch in join");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (!g.contains_group(n)) throw InvalidArgument("N is not a subgroup of G");
  for (const auto& x : g.generators()) {
    Permutation xi = x.inverse();
    for (const auto& m : n.generators())
      if (!n.contains(xi * m * x)) return false;
  }
  return true;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  std::vector<Permutation> gens;
  for (const auto& x : s) {
    if (x.degree() != g.degree()) throw InvalidArgument("degree mismatch in normal closure");
    if (!x.is_identity()) gens.push_back(x);
  }
  PermGroup n(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = x.inverse() * gens[i] * x;
      if (n.contains(c)) continue;
      gens.push_back(c);
      n = PermGroup(g.degree(), gens);
    }
  }
  return n;
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h, std::uint64_t cap) {
  if (g.degree() != h.degree()) throw InvalidArgument("degree mismatch in centralizer");
  std::vector<Permutation> kept;
  for (auto& x : g.enumerate_elements(cap)) {
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](const Permutation& y) { return x * y == y * x; });
    if (ok) kept.push_back(std::move(x));
  }
  return subgroup_from_elements(g.degree(), kept);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::uint64_t cap) {
  if (g.degree() != h.degree()) throw InvalidArgument("degree mismatch in normalizer");
  std::vector<Permutation> kept;
  for (auto& x : g.enumerate_elements(cap)) {
    Permutation xi = x.inverse();
    bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                          [&](const Permutation& y) { return h.contains(xi * y * x); });
    if (ok) kept.push_back(std::move(x));
  }
  return subgroup_from_elements(g.degree(), kept);
}

PermGroup center(const PermGroup& g, std::uint64_t cap) { return centralizer(g, g, cap); }

std::vector<std::vector<std::size_t>> conjugacy_classes(const ElementTable& table) {
  const auto& gens = table.group().generators();
  std::vector<Permutation> inverses;
  for (const auto& x : gens) inverses.push_back(x.inverse());
  std::vector<bool> seen(table.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < table.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cls{start};
    seen[start] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::size_t k = *table.index_of(inverses[j] * table[cls[i]] * gens[j]);
        if (!seen[k]) {
          seen[k] = true;
          cls.push_back(k);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

bool group_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.generators() < b.generators();
}

bool is_proper_subgroup(const PermGroup& small, const PermGroup& big) {
  return small.order() < big.order() && big.contains_group(small);
}

}  // namespace

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, std::uint64_t cap) {
  ElementTable table(g, cap);
  std::vector<PermGroup> closures;
  for (const auto& cls : conjugacy_classes(table)) {
    const Permutation& x = table[cls.front()];
    if (x.is_identity()) continue;
    PermGroup n = normal_closure(g, std::span<const Permutation>(&x, 1));
    if (std::none_of(closures.begin(), closures.end(), [&](const PermGroup& m) { return m == n; }))
      closures.push_back(std::move(n));
  }
  std::vector<PermGroup> minimal;
  for (const auto& n : closures) {
    bool has_smaller = std::any_of(closures.begin(), closures.end(),
                                   [&](const PermGroup& m) { return is_proper_subgroup(m, n); });
    if (!has_smaller) minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(), group_less);
  return minimal;
}

PermGroup socle(const PermGroup& g, std::uint64_t cap) {
  std::vector<Permutation> gens;
  for (const auto& m : minimal_normal_subgroups(g, cap))
    gens.insert(gens.end(), m.generators().begin(), m.generators().end());
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::uint64_t cap) {
  return sylow_subgroup(g, p, PermGroup::trivial(g.degree()), cap);
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const PermGroup& start,
                         std::uint64_t cap) {
  if (!is_prime(p)) throw InvalidArgument("sylow_subgroup: p must be prime");
  const BigInt order = g.order();
  if (!g.contains_group(start)) throw InvalidArgument("sylow_subgroup: start is not in G");
  if (order % p != 0) return PermGroup::trivial(g.degree());
  if (order > BigInt(cap)) throw CapExceeded("sylow_subgroup: |G| exceeds cap");
  BigInt p_part = 1;
  for (BigInt rest = order; rest % p == 0; rest /= p) p_part *= p;
  {
    BigInt s = start.order();
    while (s % p == 0) s /= p;
    if (s != 1) throw InvalidArgument("sylow_subgroup: start is not a p-group");
  }

  PermGroup current = start;
  while (current.order() != p_part) {
    PermGroup n = normalizer(g, current, cap);
    // p divides |N_G(P) : P| while P is not Sylow; any x in N \ P with
    // x^p in P has p-power order, and <P, x> is then a p-group.
    bool extended = false;
    for (const auto& x : n.enumerate_elements(cap)) {
      if (current.contains(x)) continue;
      std::uint64_t o = x.order();
      while (o % p == 0) o /= p;
      if (o != 1) continue;
      std::vector<Permutation> gens = current.generators();
      gens.push_back(x);
      current = PermGroup(g.degree(), std::move(gens));
      extended = true;
      break;
    }
    if (!extended) throw Error("sylow_subgroup: no p-element in N_G(P) \\ P (internal error)");
  }
  return current;
}

std::vector<Point> support(const PermGroup& h) {
  std::vector<Point> out;
  for (Point x = 0; x < h.degree(); ++x)
    if (std::any_of(h.generators().begin(), h.generators().end(),
                    [&](const Permutation& g) { return g(x) != x; }))
      out.push_back(x);
  return out;
}

PermGroup restrict_to(const PermGroup& g, std::span<const Point> cell) {
  std::vector<Point> sorted(cell.begin(), cell.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> local(g.degree(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> images(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      std::int64_t j = local[x(sorted[i])];
      if (j < 0) throw InvalidArgument("restrict_to: generator does not preserve the cell");
      images[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(sorted.size(), std::move(gens));
}

}  // namespace cayley
