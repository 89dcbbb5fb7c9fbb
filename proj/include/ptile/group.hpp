#pragma once

// The three group families the library works in:
//
//   CyclicPrimePower   Z_{p^n}
//   PrimePowerTimesQ   Z_{p^n} x Z_q   (p, q distinct primes)
//   PrimePowerTimesP   Z_{p^n} x Z_p
//
// Elements are residue tuples with canonical (reduced) coordinates; equality
// is coordinate equality. Characters are indexed by group elements g with
// chi_g(x) = omega_L^{character_exponent(g,x)} where L is the lcm of the
// factor orders, so all root-of-unity bookkeeping for one group lives in a
// single exponent ring Z_L.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ptile/common.hpp"

namespace ptile {

enum class Family {
    kCyclicPrimePower,
    kPrimePowerTimesQ,
    kPrimePowerTimesP,
};

// A residue tuple. All families have at most two cyclic factors, so the
// storage is a fixed pair; unused slots stay zero so default comparison works.
class Element {
  public:
    Element() = default;
    Element(std::int64_t a) : coords_{a, 0}, arity_(1) {}
    Element(std::int64_t a, std::int64_t b) : coords_{a, b}, arity_(2) {}

    int arity() const { return arity_; }
    std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    friend auto operator<=>(const Element&, const Element&) = default;

  private:
    friend class GroupSpec;
    std::array<std::int64_t, 2> coords_{0, 0};
    std::int8_t arity_ = 1;
};

class GroupSpec {
  public:
    static GroupSpec cyclic_prime_power(std::int64_t p, int n);
    static GroupSpec prime_power_times_q(std::int64_t p, int n, std::int64_t q);
    static GroupSpec prime_power_times_p(std::int64_t p, int n);

    Family family() const { return family_; }
    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    std::int64_t q() const;  // PrimePowerTimesQ only

    std::span<const std::int64_t> factors() const { return {factors_.data(), factors_.size()}; }
    int arity() const { return static_cast<int>(factors_.size()); }
    std::int64_t order() const { return order_; }

    // L: the common denominator of all character exponents of this group.
    std::int64_t character_order() const { return character_order_; }

    // Canonical element with coordinates reduced mod the factor orders.
    Element make(std::span<const std::int64_t> coords) const;
    Element make(std::initializer_list<std::int64_t> coords) const;
    Element zero() const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    // Coordinatewise r*g; r may be any integer.
    Element scale(std::int64_t r, const Element& g) const;

    // Row-major index in [0, order), compatible with lexicographic ordering.
    std::int64_t index_of(const Element& e) const;
    Element element_at(std::int64_t index) const;
    std::vector<Element> elements(std::int64_t bound = kEnumerationBound) const;

    // Residues r in [1, order) coprime to the order; these act on elements
    // coordinatewise and permute each zero set.
    std::vector<std::int64_t> units() const;

    // Throws unless e is a canonical element of this group.
    void require_element(const Element& e) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  private:
    GroupSpec() = default;

    Family family_ = Family::kCyclicPrimePower;
    std::int64_t p_ = 0;
    int n_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 0;
    std::int64_t character_order_ = 0;
};

// Exponent e with chi_g(x) = exp(2*pi*i * e / L), L = character_order().
// Additive in both arguments mod L.
std::int64_t character_exponent(const GroupSpec& g_spec, const Element& g, const Element& x);

// Componentwise reduction Z_{p^n q} -> Z_{p^n} x Z_q. Validates primality and
// p != q; the result lives in prime_power_times_q(p, n, q).
Element crt_split(std::int64_t x, std::int64_t p, int n, std::int64_t q);

// Two-sided inverse of crt_split on [0, p^n q).
std::int64_t crt_join(const GroupSpec& pnq, const Element& e);

// <x, y> = x1*y1 + p^{n-1}*x2*y2 mod p^n on Z_{p^n} x Z_p.
std::int64_t inner_product(const GroupSpec& pnp, const Element& x, const Element& y);

// Unit-scalar action r*d = (r*d1 mod p^n, r*d2 mod p); requires gcd(r, p) = 1.
Element scalar_mul(const GroupSpec& pnp, std::int64_t r, const Element& d);

struct Plane {
    Element direction;
    std::int64_t offset = 0;              // t in Z_{p^n}
    std::vector<Element> members;         // sorted; {x : <x, direction> = t}
};

// H(d, t) in Z_{p^n} x Z_p. For fixed d != 0 the planes over all t partition
// the group.
Plane plane(const GroupSpec& pnp, const Element& d, std::int64_t t);

// One representative per ~-orbit of the nonzero elements under the unit
// scalar action, computed by direct orbit expansion (smallest index first).
std::vector<Element> orbit_representatives(const GroupSpec& pnp);

// Full orbit of e under unit scalars, sorted.
std::vector<Element> scalar_orbit(const GroupSpec& pnp, const Element& e);

}  // namespace ptile
