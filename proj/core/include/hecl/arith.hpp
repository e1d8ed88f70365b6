#pragma once

// 64-bit modular arithmetic and factorization used to set up fields and orders.

#include <cstdint>
#include <optional>
#include <vector>

namespace hecl::arith {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// p^e, or nullopt when it does not fit in 63 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace hecl::arith
