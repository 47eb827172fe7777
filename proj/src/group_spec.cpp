#include "cayley/group_spec.hpp"

#include <numeric>

#include "cayley/error.hpp"
#include "cayley/number_theory.hpp"

namespace cayley {

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::cyclic;
  s.n = n;
  s.validate();
  return s;
}

GroupSpec GroupSpec::elementary_abelian_2(std::uint64_t e) {
  GroupSpec s;
  s.kind = Kind::elementary_abelian_2;
  s.e = e;
  s.validate();
  return s;
}

GroupSpec GroupSpec::z4() {
  GroupSpec s;
  s.kind = Kind::z4;
  s.validate();
  return s;
}

GroupSpec GroupSpec::z8() {
  GroupSpec s;
  s.kind = Kind::z8;
  s.validate();
  return s;
}

GroupSpec GroupSpec::q8() {
  GroupSpec s;
  s.kind = Kind::q8;
  s.validate();
  return s;
}

GroupSpec GroupSpec::dihedral(std::uint64_t m) {
  GroupSpec s;
  s.kind = Kind::dihedral;
  s.m = m;
  s.validate();
  return s;
}

GroupSpec GroupSpec::dicyclic(std::uint64_t m) {
  GroupSpec s;
  s.kind = Kind::dicyclic;
  s.m = m;
  s.validate();
  return s;
}

GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::direct_product;
  s.factors = std::move(factors);
  s.validate();
  return s;
}

GroupSpec GroupSpec::zn_semidirect_y(std::uint64_t n, std::uint64_t order_of_y, std::uint64_t action) {
  GroupSpec s;
  s.kind = Kind::zn_semidirect_y;
  s.n = n;
  s.order_of_y = order_of_y;
  s.action = action;
  s.validate();
  return s;
}

GroupSpec GroupSpec::frobenius(std::uint64_t p, std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::frobenius;
  s.p = p;
  s.n = n;
  s.validate();
  return s;
}

void GroupSpec::validate() const {
  switch (kind) {
    case Kind::cyclic:
      if (n < 1) throw InvalidArgument("cyclic(n) needs n >= 1");
      break;
    case Kind::elementary_abelian_2:
      if (e > 20) throw InvalidArgument("elementary_abelian_2(e) needs e <= 20");
      break;
    case Kind::z4:
    case Kind::z8:
    case Kind::q8:
      break;
    case Kind::dihedral:
      if (m < 1) throw InvalidArgument("dihedral(m) needs m >= 1");
      break;
    case Kind::dicyclic:
      if (m < 1) throw InvalidArgument("dicyclic(m) needs m >= 1");
      break;
    case Kind::direct_product:
      if (factors.empty()) throw InvalidArgument("direct_product needs at least one factor");
      for (const auto& f : factors) f.validate();
      break;
    case Kind::zn_semidirect_y:
      if (n < 1 || n % 2 == 0) throw InvalidArgument("zn_semidirect_y: n must be odd");
      if (order_of_y != 2 && order_of_y != 4 && order_of_y != 8)
        throw InvalidArgument("zn_semidirect_y: order of y must be 2, 4 or 8");
      if (std::gcd(action % n, n) != 1 || (action % n) * (action % n) % n != 1 % n)
        throw InvalidArgument("zn_semidirect_y: action must be a unit a with a^2 = 1 mod n");
      if (action % n == 1 % n)
        throw InvalidArgument("zn_semidirect_y: trivial action (a = 1); use a direct product");
      break;
    case Kind::frobenius:
      if (!is_prime(p)) throw InvalidArgument("frobenius(p, n): p must be prime");
      if (n < 2 || (p - 1) % n != 0) throw InvalidArgument("frobenius(p, n): need n >= 2 and n | p - 1");
      break;
  }
}

std::uint64_t GroupSpec::order() const {
  switch (kind) {
    case Kind::cyclic: return n;
    case Kind::elementary_abelian_2: return std::uint64_t{1} << e;
    case Kind::z4: return 4;
    case Kind::z8: return 8;
    case Kind::q8: return 8;
    case Kind::dihedral: return 2 * m;
    case Kind::dicyclic: return 4 * m;
    case Kind::direct_product: {
      std::uint64_t total = 1;
      for (const auto& f : factors) total *= f.order();
      return total;
    }
    case Kind::zn_semidirect_y: return n * order_of_y;
    case Kind::frobenius: return p * n;
  }
  return 0;
}

std::string GroupSpec::name() const {
  auto s = [](std::uint64_t v) { return std::to_string(v); };
  switch (kind) {
    case Kind::cyclic: return "cyclic(" + s(n) + ")";
    case Kind::elementary_abelian_2: return "elementary_abelian_2(" + s(e) + ")";
    case Kind::z4: return "z4";
    case Kind::z8: return "z8";
    case Kind::q8: return "q8";
    case Kind::dihedral: return "dihedral(" + s(m) + ")";
    case Kind::dicyclic: return "dicyclic(" + s(m) + ")";
    case Kind::direct_product: {
      std::string out = "direct_product(";
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? ", " : "") + factors[i].name();
      return out + ")";
    }
    case Kind::zn_semidirect_y:
      return "zn_semidirect_y(" + s(n) + ", " + s(order_of_y) + ", " + s(action) + ")";
    case Kind::frobenius: return "frobenius(" + s(p) + ", " + s(n) + ")";
  }
  return "?";
}

namespace {

// (x1, i1)(x2, i2) = (x1 + a^i1 x2, i1 + i2) on Z_modulus x Z_top.
std::uint64_t affine_multiply(std::uint64_t a, std::uint64_t b, std::uint64_t modulus,
                              std::uint64_t top, std::uint64_t mult) {
  std::uint64_t x1 = a / top, i1 = a % top, x2 = b / top, i2 = b % top;
  std::uint64_t x = (x1 + pow_mod(mult, i1, modulus) * x2) % modulus;
  return x * top + (i1 + i2) % top;
}

}  // namespace

std::uint64_t GroupSpec::multiply(std::uint64_t a, std::uint64_t b) const {
  switch (kind) {
    case Kind::cyclic: return (a + b) % n;
    case Kind::elementary_abelian_2: return a ^ b;
    case Kind::z4: return (a + b) % 4;
    case Kind::z8: return (a + b) % 8;
    case Kind::q8: {
      // i^a1 j^s1 * i^a2 j^s2 = i^(a1 + (-1)^s1 a2 + 2 s1 s2) j^(s1 + s2), with j^2 = i^2.
      std::uint64_t a1 = a / 2, s1 = a % 2, a2 = b / 2, s2 = b % 2;
      std::uint64_t power = (a1 + (s1 ? 4 - a2 : a2) + 2 * (s1 & s2)) % 4;
      return power * 2 + (s1 ^ s2);
    }
    case Kind::dihedral: {
      std::uint64_t a1 = a / 2, s1 = a % 2, a2 = b / 2, s2 = b % 2;
      return ((a1 + (s1 ? m - a2 : a2)) % m) * 2 + (s1 ^ s2);
    }
    case Kind::dicyclic: {
      if (m % 2 == 1) return affine_multiply(a, b, m, 4, m - 1);
      std::uint64_t mod = 2 * m;
      std::uint64_t k1 = a / 2, s1 = a % 2, k2 = b / 2, s2 = b % 2;
      std::uint64_t power = (k1 + (s1 ? mod - k2 : k2) + (s1 & s2) * m) % mod;
      return power * 2 + (s1 ^ s2);
    }
    case Kind::direct_product: {
      std::uint64_t result = 0, ra = a, rb = b, scale = 1;
      for (std::size_t i = factors.size(); i-- > 0;) {
        std::uint64_t k = factors[i].order();
        result += factors[i].multiply(ra % k, rb % k) * scale;
        ra /= k;
        rb /= k;
        scale *= k;
      }
      return result;
    }
    case Kind::zn_semidirect_y: return affine_multiply(a, b, n, order_of_y, action % n);
    case Kind::frobenius:
      return affine_multiply(a, b, p, n, *smallest_root_of_unity(p, n));
  }
  return 0;
}

std::string kind_name(GroupSpec::Kind kind) {
  using K = GroupSpec::Kind;
  switch (kind) {
    case K::cyclic: return "cyclic";
    case K::elementary_abelian_2: return "elementary_abelian_2";
    case K::z4: return "z4";
    case K::z8: return "z8";
    case K::q8: return "q8";
    case K::dihedral: return "dihedral";
    case K::dicyclic: return "dicyclic";
    case K::direct_product: return "direct_product";
    case K::zn_semidirect_y: return "zn_semidirect_y";
    case K::frobenius: return "frobenius";
  }
  return "?";
}

GroupSpec::Kind kind_from_name(const std::string& name) {
  using K = GroupSpec::Kind;
  for (K k : {K::cyclic, K::elementary_abelian_2, K::z4, K::z8, K::q8, K::dihedral, K::dicyclic,
              K::direct_product, K::zn_semidirect_y, K::frobenius})
    if (kind_name(k) == name) return k;
  throw InvalidArgument("unknown group kind: " + name);
}

}  // namespace cayley
