#pragma once

// Tiling-pair verification, complement search, tile enumeration, and the
// Coven-Meyerowitz mask-polynomial conditions.
//
// A tiling pair (Omega, T) gives every group element exactly one
// representation omega + t. Verification always runs several independent
// routes (direct cover, difference sets, zero-set union) that must agree;
// a disagreement is an internal hard failure, never a verdict.
//
// The search machinery works on element indices packed into 64-bit masks,
// so exhaustive complement search and tile enumeration are limited to
// groups of order <= 64. Budgets are explicit; exceeding one raises
// budget_exceeded rather than truncating silently.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ptile/charsum.hpp"
#include "ptile/group.hpp"

namespace ptile {

// Index arithmetic and exact-cover search over a product of cyclic factors.
class CoverContext {
  public:
    explicit CoverContext(std::span<const std::int64_t> factors);

    std::int64_t order() const { return order_; }
    std::int64_t add_index(std::int64_t a, std::int64_t b) const {
        return add_[static_cast<std::size_t>(a * order_ + b)];
    }
    std::int64_t sub_index(std::int64_t a, std::int64_t b) const {
        return add_[static_cast<std::size_t>(a * order_ + neg_[static_cast<std::size_t>(b)])];
    }
    std::uint64_t full_mask() const { return full_; }

    // Translate mask of set_mask by t.
    std::uint64_t translate(std::uint64_t set_mask, std::int64_t t) const;

    bool admits_complement(std::uint64_t set_mask) const;

    // All tiling complements containing index 0, ascending as masks.
    std::vector<std::uint64_t> complements_containing_zero(std::uint64_t set_mask) const;

    // Lexicographically minimal translate of set_mask among those containing 0.
    std::uint64_t canonical_translate(std::uint64_t set_mask) const;

  private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::int8_t> add_;
    std::vector<std::int8_t> neg_;
};

struct TilingReport {
    std::vector<Element> omega;  // sorted copies of the inputs
    std::vector<Element> t;
    // Independent verdicts; all must agree.
    bool by_direct_cover = false;       // every x covered exactly once
    bool by_swapped_cover = false;      // roles of Omega and T exchanged
    bool by_translated_cover = false;   // both sets translated by a fixed sample
    bool by_difference_sets = false;    // |Omega||T| = |G| and (O-O) cap (T-T) = {0}
    bool by_zero_set_union = false;     // |Omega||T| = |G| and Z_O cup Z_T = G\{0}
    bool tiling = false;                // the common verdict
};

// Evaluates all five routes; throws structure_violation if they disagree.
TilingReport is_tiling_pair(const GroupSpec& g_spec, std::span<const Element> omega,
                            std::span<const Element> t);

// True iff some T tiles G together with omega. Order must be <= 64.
bool admits_complement(const GroupSpec& g_spec, std::span<const Element> omega);
bool admits_complement_cyclic(std::span<const std::int64_t> a, std::int64_t n_modulus);

// Exhaustive list of tiling complements containing 0, each sorted, list
// sorted; every returned T re-verified through is_tiling_pair.
std::vector<std::vector<Element>> find_complements(const GroupSpec& g_spec,
                                                   std::span<const Element> omega);

struct TileEnumerationOptions {
    std::int64_t budget = 100'000'000;  // candidate subsets examined
    int jobs = 1;
    bool dedupe_translations = false;
};

struct TileEnumeration {
    std::int64_t size = 0;  // k
    std::vector<std::vector<Element>> tiles;  // canonical (combination) order
    std::int64_t candidates = 0;
};

// All k-subsets containing 0 that admit a complement. k must divide |G|.
TileEnumeration enumerate_tiles(const GroupSpec& g_spec, std::int64_t k,
                                const TileEnumerationOptions& options = {});

// S_A: prime powers s | N with Phi_s(x) | A(x), decided by exact division.
std::vector<std::int64_t> sa_set(std::span<const std::int64_t> a, std::int64_t n_modulus);

struct T1Report {
    std::vector<std::int64_t> sa;
    std::int64_t cardinality = 0;  // A(1)
    std::int64_t phi_product = 0;  // prod over S_A of Phi_s(1), by evaluation
    bool pass = false;
};

struct T2Report {
    std::vector<std::int64_t> sa;
    std::vector<std::int64_t> checked_products;  // each s_1*...*s_m examined
    std::vector<std::int64_t> failed_products;
    bool pass = false;
};

T1Report check_t1(std::span<const std::int64_t> a, std::int64_t n_modulus);
T2Report check_t2(std::span<const std::int64_t> a, std::int64_t n_modulus);

struct CmEquivalenceReport {
    bool tile = false;
    T1Report t1;
    T2Report t2;
    bool conditions = false;  // T1 and T2
    bool equivalent = false;  // tile <=> conditions
};

// Tile <=> (T1 and T2) on Z_N; guaranteed for N = p^n or p^n q, rejected
// otherwise. A must be a nonempty subset of Z_N.
CmEquivalenceReport cm_tile_equivalence(std::span<const std::int64_t> a, std::int64_t n_modulus,
                                        std::int64_t budget = 100'000'000);

// For a tiling pair (Omega, T) and gcd(k, |T|) = 1, verifies (Omega, kT).
TilingReport scale_complement(const GroupSpec& g_spec, std::span<const Element> omega,
                              std::span<const Element> t, std::int64_t k);

// k = #{d >= 1 : A(omega_N^{N/p^d}) = 0}; the returned k satisfies p^k | |A|
// (violation would be an internal inconsistency and throws).
int divisibility_bound(std::span<const std::int64_t> a, std::int64_t n_modulus, std::int64_t p);

// Searches for a spectrum: |Lambda| = |Omega| characters containing 0 with
// pairwise differences in Z_Omega. Absence is an empty optional.
std::optional<std::vector<Element>> find_spectrum(const GroupSpec& g_spec,
                                                  std::span<const Element> omega,
                                                  std::int64_t node_budget = 10'000'000);

}  // namespace ptile
