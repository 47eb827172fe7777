#include "cayley/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cayley/error.hpp"
#include "cayley/number_theory.hpp"

namespace cayley {

using Element = GroupTable::Element;

GroupTable GroupTable::from_spec(const GroupSpec& spec) {
  spec.validate();
  std::uint64_t n = spec.order();
  if (n > kMaxTableOrder) throw CapExceeded("group table of order " + std::to_string(n));
  GroupTable g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<Element>(spec.multiply(a, b));
  g.finish();
  return g;
}

GroupTable GroupTable::from_perm_group(const PermGroup& group) {
  if (group.order() > kMaxTableOrder) throw CapExceeded("group table of order " + group.order().str());
  auto elements = group.enumerate_elements(kMaxTableOrder);
  // An element is determined by its images of the base points.
  auto base = group.base();
  auto key_of = [&](auto&& image_of) {
    std::string key(base.size() * sizeof(Point), '\0');
    for (std::size_t k = 0; k < base.size(); ++k) {
      Point x = image_of(base[k]);
      std::copy_n(reinterpret_cast<const char*>(&x), sizeof(Point), key.data() + k * sizeof(Point));
    }
    return key;
  };
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(key_of([&](Point x) { return elements[i](x); }), static_cast<Element>(i));

  GroupTable g;
  g.order_ = elements.size();
  g.table_.resize(g.order_ * g.order_);
  for (std::size_t a = 0; a < g.order_; ++a)
    for (std::size_t b = 0; b < g.order_; ++b)
      g.table_[a * g.order_ + b] = index.at(key_of([&](Point x) { return elements[a](elements[b](x)); }));
  g.finish();
  return g;
}

GroupTable GroupTable::from_multiplication(std::size_t order, std::vector<Element> table) {
  if (order == 0 || table.size() != order * order) throw InvalidArgument("table size mismatch");
  for (Element x : table)
    if (x >= order) throw InvalidArgument("table entry out of range");
  GroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);
  // Latin square plus associativity.
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<bool> row(order), col(order);
    for (std::size_t b = 0; b < order; ++b) {
      row[g.table_[a * order + b]] = true;
      col[g.table_[b * order + a]] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<std::ptrdiff_t>(order) ||
        std::count(col.begin(), col.end(), true) != static_cast<std::ptrdiff_t>(order))
      throw InvalidArgument("table is not a latin square");
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw InvalidArgument("table is not associative");
  g.finish();
  return g;
}

void GroupTable::finish() {
  identity_ = 0;
  while (mul(identity_, identity_) != identity_) ++identity_;
  inverse_.assign(order_, 0);
  element_order_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    Element x = a;
    std::uint64_t k = 1;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    element_order_[a] = k;
    // a^(k-1) is the inverse
    Element inv = identity_;
    for (std::uint64_t i = 1; i < k; ++i) inv = mul(inv, a);
    inverse_[a] = inv;
  }
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> GroupTable::center() const {
  auto gens = generators();
  std::vector<Element> out;
  for (Element a = 0; a < order_; ++a)
    if (std::all_of(gens.begin(), gens.end(), [&](Element s) { return mul(a, s) == mul(s, a); }))
      out.push_back(a);
  return out;
}

std::vector<Element> GroupTable::closure(const std::vector<Element>& gens) const {
  std::vector<bool> seen(order_, false);
  std::vector<Element> out{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element s : gens) {
      Element y = mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> GroupTable::derived_subgroup() const {
  auto gens = generators();
  // [G, G] is the normal closure of the commutators of generators.
  std::vector<Element> comms;
  for (Element a : gens)
    for (Element b : gens) {
      Element c = mul(mul(inverse(a), inverse(b)), mul(a, b));
      if (c != identity_) comms.push_back(c);
    }
  std::vector<Element> sub = closure(comms);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<bool> in(order_, false);
    for (Element x : sub) in[x] = true;
    for (Element x : std::vector<Element>(sub))
      for (Element s : gens) {
        Element y = mul(mul(inverse(s), x), s);
        if (!in[y]) {
          comms.push_back(y);
          grew = true;
        }
      }
    if (grew) sub = closure(comms);
  }
  return sub;
}

std::map<std::uint64_t, std::uint64_t> GroupTable::order_histogram() const {
  std::map<std::uint64_t, std::uint64_t> h;
  for (auto k : element_order_) ++h[k];
  return h;
}

std::vector<Element> GroupTable::generators() const {
  std::vector<Element> by_order(order_);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return element_order_[a] > element_order_[b]; });
  std::vector<Element> gens;
  std::vector<bool> in(order_, false);
  in[identity_] = true;
  std::size_t covered = 1;
  for (Element x : by_order) {
    if (covered == order_) break;
    if (in[x]) continue;
    gens.push_back(x);
    auto sub = closure(gens);
    std::fill(in.begin(), in.end(), false);
    for (Element y : sub) in[y] = true;
    covered = sub.size();
  }
  return gens;
}

GroupTable GroupTable::subgroup(const std::vector<Element>& elements) const {
  std::vector<std::int64_t> pos(order_, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<std::int64_t>(i);
  std::vector<Element> t(elements.size() * elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto p = pos[mul(elements[i], elements[j])];
      if (p < 0) throw InvalidArgument("element list is not closed under multiplication");
      t[i * elements.size() + j] = static_cast<Element>(p);
    }
  GroupTable g;
  g.order_ = elements.size();
  g.table_ = std::move(t);
  g.finish();
  return g;
}

bool GroupTable::is_normal(const std::vector<Element>& sub) const {
  std::vector<bool> in(order_, false);
  for (Element x : sub) in[x] = true;
  for (Element s : generators())
    for (Element x : sub)
      if (!in[mul(mul(inverse(s), x), s)]) return false;
  return true;
}

GroupTable GroupTable::quotient(const std::vector<Element>& normal) const {
  if (!is_normal(normal)) throw InvalidArgument("quotient by a non-normal subgroup");
  std::vector<std::int64_t> coset(order_, -1);
  std::vector<Element> reps;
  for (Element x = 0; x < order_; ++x) {
    if (coset[x] >= 0) continue;
    for (Element k : normal) coset[mul(x, k)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  std::size_t m = reps.size();
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = static_cast<Element>(coset[mul(reps[i], reps[j])]);
  GroupTable g;
  g.order_ = m;
  g.table_ = std::move(t);
  g.finish();
  return g;
}

GroupFingerprint fingerprint(const GroupTable& g) {
  return {g.order(), g.order_histogram(), g.center().size(), g.derived_subgroup().size()};
}

namespace {

// Centralizer sizes, an invariant used to restrict candidate images.
std::vector<std::size_t> centralizer_sizes(const GroupTable& g) {
  std::vector<std::size_t> out(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++out[a];
  return out;
}

// Extends gens[0..count) -> images[0..count) to a homomorphism on the subgroup
// they generate. Returns false on a clash or a non-injective map.
bool extend(const GroupTable& a, const GroupTable& b, const std::vector<Element>& gens,
            const std::vector<Element>& images, std::size_t count, std::vector<std::int64_t>& phi) {
  constexpr std::int64_t kUnset = -1;
  std::fill(phi.begin(), phi.end(), kUnset);
  std::vector<bool> used(b.order(), false);
  phi[a.identity()] = b.identity();
  used[b.identity()] = true;
  std::vector<Element> queue{a.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t j = 0; j < count; ++j) {
      Element y = a.mul(x, gens[j]);
      Element image = b.mul(static_cast<Element>(phi[x]), images[j]);
      if (phi[y] == kUnset) {
        if (used[image]) return false;
        used[image] = true;
        phi[y] = image;
        queue.push_back(y);
      } else if (phi[y] != image) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;

  auto gens = a.generators();
  auto ca = centralizer_sizes(a);
  auto cb = centralizer_sizes(b);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Element y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(gens[j]) && cb[y] == ca[gens[j]]) candidates[j].push_back(y);

  std::vector<Element> images(gens.size());
  std::vector<std::int64_t> phi(a.order());
  std::vector<std::size_t> choice(gens.size(), 0);
  std::size_t depth = 0;
  if (gens.empty()) return std::vector<Element>{b.identity()};
  while (true) {
    if (choice[depth] == candidates[depth].size()) {
      if (depth == 0) return std::nullopt;
      choice[depth] = 0;
      ++choice[--depth];
      continue;
    }
    images[depth] = candidates[depth][choice[depth]];
    if (!extend(a, b, gens, images, depth + 1, phi)) {
      ++choice[depth];
      continue;
    }
    if (depth + 1 == gens.size()) {
      std::vector<Element> out(a.order());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Element>(phi[i]);
      return out;
    }
    ++depth;
  }
}

bool isomorphic(const GroupTable& a, const GroupTable& b) { return find_isomorphism(a, b).has_value(); }

bool isomorphic_to_spec(const PermGroup& h, const GroupSpec& spec, std::uint64_t cap) {
  spec.validate();
  if (h.order() != spec.order()) return false;
  if (h.order() > cap) throw CapExceeded("isomorphism test above cap");
  return isomorphic(GroupTable::from_perm_group(h), GroupTable::from_spec(spec));
}

std::string case_name(FamilyRVerdict::Case c) {
  switch (c) {
    case FamilyRVerdict::Case::a: return "a";
    case FamilyRVerdict::Case::b: return "b";
    case FamilyRVerdict::Case::none: return "none";
  }
  return "none";
}

FamilyRVerdict in_family_R(const GroupTable& g) {
  FamilyRVerdict v;
  std::uint64_t order = g.order();
  std::uint64_t two = p_part(order, 2);
  std::uint64_t n = order / two;
  v.odd_part = n;
  auto reject = [&](std::string why) {
    v.member = false;
    v.which = FamilyRVerdict::Case::none;
    v.reason = std::move(why);
    return v;
  };
  if (!is_square_free(n)) return reject("odd part " + std::to_string(n) + " is not square-free");

  std::vector<Element> odd;
  std::optional<Element> generator;
  for (Element x = 0; x < order; ++x) {
    if (g.element_order(x) % 2 == 1) odd.push_back(x);
    if (g.element_order(x) == n && !generator) generator = x;
  }
  if (odd.size() != n || !generator) return reject("odd-order elements do not form a cyclic subgroup of order n");

  auto commutes_with_all = [&](Element x) {
    for (Element s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) return false;
    return true;
  };

  if (commutes_with_all(*generator)) {
    std::vector<Element> twos;
    for (Element x = 0; x < order; ++x)
      if (p_part(g.element_order(x), 2) == g.element_order(x)) twos.push_back(x);
    if (twos.size() != two) return reject("2-elements do not form a subgroup");
    auto sylow = g.subgroup(twos);
    auto hist = sylow.order_histogram();
    std::uint64_t max_order = hist.rbegin()->first;
    if (max_order <= 2 && two <= 16) {
      unsigned rank = 0;
      while ((std::uint64_t{1} << rank) < two) ++rank;
      v.two_part = rank == 0 ? "1" : rank == 1 ? "Z2" : "Z2^" + std::to_string(rank);
    } else if (two == 4 && max_order == 4) {
      v.two_part = "Z4";
    } else if (two == 8 && hist[2] == 1 && hist[4] == 6) {
      v.two_part = "Q8";
    } else {
      return reject("Sylow 2-subgroup is not one of 1, Z2, Z2^2, Z2^3, Z2^4, Z4, Q8");
    }
    v.member = true;
    v.which = FamilyRVerdict::Case::a;
    return v;
  }

  if (two != 2 && two != 4 && two != 8) return reject("noncentral odd part needs o(y) in {2, 4, 8}");
  auto center = g.center();
  std::vector<bool> central(order, false);
  for (Element z : center) central[z] = true;
  for (Element y = 0; y < order; ++y) {
    if (g.element_order(y) != two || central[y] || !central[g.mul(y, y)]) continue;
    Element conj = g.mul(g.mul(y, *generator), g.inverse(y));
    Element power = g.identity();
    std::uint64_t a = 0;
    while (power != conj) {
      power = g.mul(power, *generator);
      ++a;
    }
    v.member = true;
    v.which = FamilyRVerdict::Case::b;
    v.y_order = two;
    v.action = a;
    return v;
  }
  return reject("no y of order " + std::to_string(two) + " outside the center with y^2 central");
}

FamilyRVerdict in_family_R(const GroupSpec& spec) { return in_family_R(GroupTable::from_spec(spec)); }

}  // namespace cayley
