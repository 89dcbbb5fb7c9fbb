#include "ptile/common.hpp"

#include <numeric>

namespace ptile {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_prime_power(std::int64_t n, std::int64_t* p_out, int* k_out) {
    if (n < 2) return false;
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = n;  // n itself is prime
    int k = 0;
    std::int64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    a = mod_reduce(a, m);
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: argument is not a unit");
    return mod_reduce(t, m);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is always divisible by i here
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace ptile
