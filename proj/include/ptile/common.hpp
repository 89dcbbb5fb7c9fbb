#pragma once

// Small shared utilities: overflow-checked 64-bit arithmetic, primality by
// trial division, prime-power decomposition, binomial coefficients.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptile {

// Thrown when an enumeration or search would exceed its configured budget.
// Exceeding a budget is an error, never silent truncation: exhaustiveness
// claims depend on it.
struct budget_exceeded : std::runtime_error {
    std::int64_t examined;
    explicit budget_exceeded(const std::string& what, std::int64_t examined_count = 0)
        : std::runtime_error(what), examined(examined_count) {}
};

// A structural guarantee that must hold for every genuine tile failed.
// Either the supplied tiling certificate was wrong or the library is
// internally inconsistent; callers treat this as a hard stop.
struct structure_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

bool is_prime(std::int64_t n);

// Writes p and k with n = p^k (k >= 1) when n is a prime power.
bool is_prime_power(std::int64_t n, std::int64_t* p_out = nullptr, int* k_out = nullptr);

// Reduction into [0, m); accepts negative x.
std::int64_t mod_reduce(std::int64_t x, std::int64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Inverse of a mod m; requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Exact binomial coefficient, overflow-checked.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Default cap on group order for full-group enumeration operations.
inline constexpr std::int64_t kEnumerationBound = 1'000'000;

}  // namespace ptile
