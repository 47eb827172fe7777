#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cayley {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t largest_prime_divisor(std::uint64_t n);

/// Omega(n): number of prime factors counted with multiplicity.
unsigned big_omega(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_square_free(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Multiplicative order of a modulo m (a coprime to m).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest positive primitive n-th root of unity modulo the prime p, or none
/// if n does not divide p - 1.
std::optional<std::uint64_t> smallest_root_of_unity(std::uint64_t p, std::uint64_t n);

/// Smallest prime dividing a^k - 1 but no a^l - 1 with 0 < l < k, or none
/// (which happens exactly for (a, k) = (2, 6) and for k = 2 with a + 1 a power
/// of two). Requires a, k >= 2 and a^k < 2^64.
std::optional<std::uint64_t> zsigmondy_ppd(std::uint64_t a, std::uint64_t k);

/// gcd(n, phi(n)) == 1: the orders for which the cyclic group is the only
/// group of that order.
bool ci_order_condition(std::uint64_t n);

}  // namespace cayley
