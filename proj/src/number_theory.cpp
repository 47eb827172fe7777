#include "cayley/number_theory.hpp"

#include <numeric>
#include <stdexcept>

#include "cayley/error.hpp"

namespace cayley {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t largest_prime_divisor(std::uint64_t n) {
  auto ps = prime_divisors(n);
  return ps.empty() ? 1 : ps.back();
}

unsigned big_omega(std::uint64_t n) {
  unsigned total = 0;
  for (auto [p, e] : factorize(n)) total += e;
  return total;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

bool is_square_free(std::uint64_t n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a, m) != 1) throw InvalidArgument("multiplicative_order: a not a unit");
  std::uint64_t order = euler_phi(m);
  for (auto p : prime_divisors(order))
    while (order % p == 0 && pow_mod(a, order / p, m) == 1) order /= p;
  return order;
}

std::optional<std::uint64_t> smallest_root_of_unity(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p) || n == 0 || (p - 1) % n != 0) return std::nullopt;
  for (std::uint64_t w = 1; w < p; ++w)
    if (multiplicative_order(w, p) == n) return w;
  return std::nullopt;
}

namespace {

std::uint64_t checked_pow(std::uint64_t a, std::uint64_t k) {
  unsigned __int128 v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    v *= a;
    if (v > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("zsigmondy_ppd: a^k does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::int64_t moebius(std::uint64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

}  // namespace

std::optional<std::uint64_t> zsigmondy_ppd(std::uint64_t a, std::uint64_t k) {
  if (a < 2 || k < 2) throw InvalidArgument("zsigmondy_ppd: need a, k >= 2");
  checked_pow(a, k);
  // Every primitive prime divisor divides the cyclotomic value Phi_k(a), and a
  // prime divisor of Phi_k(a) is primitive unless it divides k.
  using Wide = unsigned __int128;
  Wide num = 1, den = 1;
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    std::int64_t mu = moebius(k / d);
    if (mu == 1) num *= checked_pow(a, d) - 1;
    if (mu == -1) den *= checked_pow(a, d) - 1;
  }
  std::uint64_t phi = static_cast<std::uint64_t>(num / den);
  for (auto p : prime_divisors(k))
    while (phi % p == 0) phi /= p;
  if (phi <= 1) return std::nullopt;
  return prime_divisors(phi).front();
}

bool ci_order_condition(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("ci_order_condition: n must be positive");
  return std::gcd(n, euler_phi(n)) == 1;
}

}  // namespace cayley
