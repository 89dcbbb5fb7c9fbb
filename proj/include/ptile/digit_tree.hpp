#pragma once

// p-ary digit trees for subsets of Z_{p^n}.
//
// Level convention, fixed once for the whole library:
//   * digits are least-significant first: x = sum_i t_i * p^i, t_i = digit i;
//   * tree level gamma holds the residues C mod p^gamma, so the edge from
//     level i to level i+1 chooses digit t_i and "level i branches" means
//     every vertex of C mod p^i has exactly p descendants;
//   * a branched level set I subset of {0,...,n-1} lists the branching
//     digit positions; |C| = p^{|I|} for a homogeneous set;
//   * the character frequency that certifies branching at level i is
//     p^{n-1-i}: sum_{c in C} omega_{p^n}^{c * p^{n-j}} = 0 for j = i+1.
// The index sets used by the classification theorems convert to branch
// levels through branch_levels_from_index_set (I = n-1-I_set elementwise);
// that translation lives in exactly one place.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ptile/common.hpp"

namespace ptile {

// Digits of x in base p, least significant first, padded to n entries.
std::vector<int> digits(std::int64_t x, std::int64_t p, int n);

struct DigitTree {
    std::int64_t p = 0;
    int n = 0;
    // level_vertices[gamma] = sorted residues of C mod p^gamma; [0] is {0}.
    std::vector<std::vector<std::int64_t>> level_vertices;

    static DigitTree build(std::span<const std::int64_t> c, std::int64_t p, int n);

    // Sorted descendants of vertex v (a residue mod p^level) at the next level.
    std::vector<std::int64_t> children(int level, std::int64_t v) const;
    std::int64_t vertex_count() const;
    std::int64_t leaf_count() const;
};

struct HomogeneityResult {
    bool homogeneous = false;
    std::vector<int> branch_levels;  // I, ascending; valid when homogeneous

    // Witness for the failure, first offending level in scan order.
    int fail_level = -1;
    std::int64_t fail_vertex = -1;
    std::int64_t fail_descendants = 0;
};

// Structural homogeneity check. C must be a genuine set (duplicates rejected).
HomogeneityResult homogeneity(std::span<const std::int64_t> c, std::int64_t p, int n);

// Centralized I = n-1-I_set translation between zero-set index sets and
// branch level sets (an involution).
std::vector<int> branch_levels_from_index_set(std::span<const int> index_set, int n);

struct SpectralHomogeneityReport {
    std::vector<int> vanishing_levels;      // the j_t whose sums vanish
    std::vector<int> failed_levels;         // hypothesis failures, per j_t
    bool hypothesis_holds = false;          // all claimed sums vanish
    bool homogeneous = false;               // conclusion, when hypothesis holds
    std::int64_t cardinality = 0;
    std::vector<int> branch_levels;         // {j_t - 1}, confirmed structurally
};

// Spectral route: for claimed levels 1 <= j_1 < ... < j_k <= n, verifies
// sum_{c in C} omega_{p^n}^{c * p^{n-j_t}} = 0 for each t. C is a multiset
// with |C| <= p^k. When every sum vanishes, |C| = p^k with all
// multiplicities one and C is homogeneous with branch levels {j_t - 1};
// the structural check must agree (disagreement is a hard failure).
SpectralHomogeneityReport spectral_homogeneity_check(std::span<const std::int64_t> c,
                                                     std::int64_t p, int n,
                                                     std::span<const int> levels);

// Digit chooser for the non-branching levels: (level, vertex residue) -> digit.
using DigitChooser = std::function<int(int level, std::int64_t vertex)>;

// Builds the T_I-form set whose branching levels are I and whose fixed
// digits are supplied by the chooser. Result has size p^{|I|}.
std::vector<std::int64_t> generate_homogeneous(std::int64_t p, int n,
                                               std::span<const int> branch_levels,
                                               const DigitChooser& chooser);

// Number of distinct T_I-form sets: prod over non-branching levels i of
// p^{(vertex count at level i)}.
std::int64_t count_homogeneous(std::int64_t p, int n, std::span<const int> branch_levels);

// Exhaustive, duplicate-free enumeration of all T_I-form sets in a fixed
// deterministic order. Throws budget_exceeded if the count exceeds budget.
void enumerate_homogeneous(std::int64_t p, int n, std::span<const int> branch_levels,
                           std::int64_t budget,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit);

}  // namespace ptile
