#pragma once

// Exact decision procedures for vanishing sums of roots of unity.
//
// An ExponentVector of order m stores integer multiplicities (a_0,...,a_{m-1})
// and represents sum_e a_e * omega_m^e with omega_m = exp(2*pi*i/m). Whether
// that sum is zero is an algebraic property and is decided exactly:
//
//   * prime-power order p^k: the sum vanishes iff the coefficient vector is
//     constant on every class {r + j*p^{k-1} : 0 <= j < p} (each such class
//     sums against 1 + omega^{p^{k-1}} + ... = 0, and no shorter relations
//     exist among p^k-th roots);
//   * general order: divide the mask polynomial by the m-th cyclotomic
//     polynomial over the integers; the sum vanishes iff the remainder is 0.
//
// A floating-point character sum is provided purely as a diagnostic
// cross-check; rounding never decides vanishing.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ptile/group.hpp"

namespace ptile {

class ExponentVector {
  public:
    explicit ExponentVector(std::int64_t m);

    std::int64_t order() const { return m_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(std::int64_t e) const { return coeffs_[static_cast<std::size_t>(mod_reduce(e, m_))]; }
    std::int64_t mass() const { return mass_; }

    // Adds multiplicity at exponent e (reduced mod m); multiplicity >= 0.
    void add(std::int64_t e, std::int64_t multiplicity = 1);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  private:
    std::int64_t m_;
    std::vector<std::int64_t> coeffs_;
    std::int64_t mass_ = 0;
};

// Mask polynomial of a multiset of residues: coeffs[e] = multiplicity of e.
ExponentVector mask_polynomial(std::span<const std::int64_t> multiset, std::int64_t m);

// Coefficients of the s-th cyclotomic polynomial, ascending degree, computed
// by the recursive quotient Phi_s(x) = (x^s - 1) / prod_{d|s, d<s} Phi_d(x)
// with exact integer division. degree = euler_phi(s).
std::vector<std::int64_t> cyclotomic(std::int64_t s);

// Exact remainder of a (ascending dense coefficients) modulo the monic
// polynomial b; all arithmetic overflow-checked.
std::vector<std::int64_t> poly_rem_monic(std::vector<std::int64_t> a, std::span<const std::int64_t> b);

// Product of two dense integer polynomials.
std::vector<std::int64_t> poly_mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Vanishing test for prime-power order via the coefficient-class criterion.
// Throws std::invalid_argument when the order is not a prime power.
bool vanishes_prime_power(const ExponentVector& v);

// Vanishing test by exact division by the order-m cyclotomic polynomial.
// Slower, route-independent of vanishes_prime_power; kept as a second
// algebraic route for cross-checks.
bool vanishes_via_cyclotomic(const ExponentVector& v);

// Production vanishing test for any order: prime-power class criterion when
// possible, otherwise content reduction (omega_m^e = omega_{m/d}^{e/d} for
// d = gcd of m and all live exponents) followed by cyclotomic division.
bool vanishes(const ExponentVector& v);

// Diagnostic floating-point value of the represented sum.
std::complex<double> complex_value(const ExponentVector& v);

// Exact verdict on \hat{1_A}(g) = 0 for a multiset A of group elements.
bool vanishes_at(const GroupSpec& g_spec, std::span<const Element> a, const Element& g);

// Folds the character exponents of A at g into an ExponentVector of order L.
ExponentVector character_exponents(const GroupSpec& g_spec, std::span<const Element> a, const Element& g);

// Floating-point character sum, diagnostic only.
std::complex<double> character_sum_f64(const GroupSpec& g_spec, std::span<const Element> a, const Element& g);

// Cyclic-group convenience: decides A(omega_m^d) = 0 for a multiset of
// residues mod m.
bool vanishes_at_frequency(std::span<const std::int64_t> multiset, std::int64_t m, std::int64_t d);

struct ZeroSet {
    GroupSpec group;
    std::vector<Element> members;  // sorted, zero excluded

    bool contains(const Element& e) const;
};

// Z_A = {g != 0 : \hat{1_A}(g) = 0}, by full scan. For PrimePowerTimesP
// groups the scan can run one evaluation per unit-scalar orbit and expand
// (zero sets are closed under the unit action).
ZeroSet zero_set(const GroupSpec& g_spec, std::span<const Element> a,
                 bool per_orbit = true, std::int64_t bound = kEnumerationBound);

// Z_A == Z_{A+g}; always true, exported as a test oracle.
bool translation_invariance_check(const GroupSpec& g_spec, std::span<const Element> a, const Element& g);

// Closure of Z_A under every unit r mod |G| acting coordinatewise.
bool unit_scaling_closure_check(const GroupSpec& g_spec, std::span<const Element> a);

struct SliceZeroReport {
    std::int64_t h = 0;                              // frequency in the first factor
    std::vector<std::vector<std::int64_t>> slices;   // A_s per s in the second factor
    std::vector<bool> verdicts;                      // h in Z_{A_s}
    bool all_vanish = false;
};

// Given (h, s) in Z_A for every s in the second factor (re-verified; throws
// naming the first failing s otherwise), certifies h in Z_{A_s} per slice.
SliceZeroReport slice_zeros(const GroupSpec& g_spec, std::span<const Element> a, std::int64_t h);

// Partition of a vanishing multiset sum over p^n-th roots of unity into
// |C|/p blocks of p residues, each block {r, r + p^{n-1}, ..., r+(p-1)p^{n-1}}
// and each summing to zero. Deterministic: smallest residue class first,
// blocks sorted ascending. Throws when the input sum does not vanish.
std::vector<std::vector<std::int64_t>> decompose_vanishing_sum(std::span<const std::int64_t> c,
                                                               std::int64_t p, int n);

}  // namespace ptile
