#include "ptile/digit_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptile/charsum.hpp"

namespace ptile {

std::vector<int> digits(std::int64_t x, std::int64_t p, int n) {
    const std::int64_t pn = checked_pow(p, n);
    if (x < 0 || x >= pn) throw std::invalid_argument("digits: x out of range");
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
        x /= p;
    }
    return out;
}

DigitTree DigitTree::build(std::span<const std::int64_t> c, std::int64_t p, int n) {
    DigitTree t;
    t.p = p;
    t.n = n;
    const std::int64_t pn = checked_pow(p, n);
    t.level_vertices.resize(static_cast<std::size_t>(n) + 1);
    std::int64_t power = 1;
    for (int gamma = 0; gamma <= n; ++gamma) {
        auto& level = t.level_vertices[static_cast<std::size_t>(gamma)];
        for (std::int64_t x : c) {
            if (x < 0 || x >= pn) throw std::invalid_argument("DigitTree: element out of range");
            level.push_back(x % power);
        }
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        if (gamma < n) power = checked_mul(power, p);
    }
    return t;
}

std::vector<std::int64_t> DigitTree::children(int level, std::int64_t v) const {
    const std::int64_t modulus = checked_pow(p, level);
    std::vector<std::int64_t> out;
    for (std::int64_t u : level_vertices[static_cast<std::size_t>(level) + 1])
        if (u % modulus == v) out.push_back(u);
    return out;
}

std::int64_t DigitTree::vertex_count() const {
    std::int64_t total = 0;
    for (const auto& level : level_vertices) total += static_cast<std::int64_t>(level.size());
    return total;
}

std::int64_t DigitTree::leaf_count() const {
    return static_cast<std::int64_t>(level_vertices.back().size());
}

HomogeneityResult homogeneity(std::span<const std::int64_t> c, std::int64_t p, int n) {
    if (c.empty()) throw std::invalid_argument("homogeneity: C must be nonempty");
    std::vector<std::int64_t> sorted(c.begin(), c.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("homogeneity: C must not contain repeated elements");

    DigitTree tree = DigitTree::build(sorted, p, n);
    HomogeneityResult result;
    for (int level = 0; level < n; ++level) {
        std::int64_t expected = -1;  // p or 1, set by the first vertex
        for (std::int64_t v : tree.level_vertices[static_cast<std::size_t>(level)]) {
            const std::int64_t count = static_cast<std::int64_t>(tree.children(level, v).size());
            if (expected == -1) {
                if (count != 1 && count != p) expected = 0;
                else expected = count;
            }
            if (count != expected || expected == 0) {
                result.homogeneous = false;
                result.fail_level = level;
                result.fail_vertex = v;
                result.fail_descendants = count;
                result.branch_levels.clear();
                return result;
            }
        }
        if (expected == p && p != 1) result.branch_levels.push_back(level);
    }
    result.homogeneous = true;
    return result;
}

std::vector<int> branch_levels_from_index_set(std::span<const int> index_set, int n) {
    std::vector<int> out;
    out.reserve(index_set.size());
    for (int i : index_set) {
        if (i < 0 || i >= n) throw std::invalid_argument("branch_levels_from_index_set: index out of range");
        out.push_back(n - 1 - i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpectralHomogeneityReport spectral_homogeneity_check(std::span<const std::int64_t> c,
                                                     std::int64_t p, int n,
                                                     std::span<const int> levels) {
    SpectralHomogeneityReport report;
    const int k = static_cast<int>(levels.size());
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        if (levels[i] >= levels[i + 1]) throw std::invalid_argument("levels must be strictly increasing");
    for (int j : levels)
        if (j < 1 || j > n) throw std::invalid_argument("levels must lie in [1, n]");
    const std::int64_t pn = checked_pow(p, n);
    if (static_cast<std::int64_t>(c.size()) > checked_pow(p, k))
        throw std::invalid_argument("spectral_homogeneity_check: |C| exceeds p^k");

    report.hypothesis_holds = true;
    for (int j : levels) {
        ExponentVector v(pn);
        const std::int64_t frequency = checked_pow(p, n - j);
        for (std::int64_t x : c) v.add(mod_reduce(mod_reduce(x, pn) * frequency, pn));
        if (vanishes_prime_power(v)) {
            report.vanishing_levels.push_back(j);
        } else {
            report.failed_levels.push_back(j);
            report.hypothesis_holds = false;
        }
    }
    report.cardinality = static_cast<std::int64_t>(c.size());
    if (!report.hypothesis_holds) return report;

    // Conclusion forced by the hypothesis: exact cardinality p^k, all
    // multiplicities one, and branch levels {j_t - 1}. Verified structurally.
    if (report.cardinality != checked_pow(p, k))
        throw structure_violation("spectral homogeneity: cardinality is not p^k despite vanishing sums");
    std::vector<std::int64_t> reduced(c.begin(), c.end());
    for (auto& x : reduced) x = mod_reduce(x, pn);
    std::sort(reduced.begin(), reduced.end());
    if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end())
        throw structure_violation("spectral homogeneity: repeated element despite vanishing sums");
    HomogeneityResult structural = homogeneity(reduced, p, n);
    std::vector<int> expected;
    for (int j : levels) expected.push_back(j - 1);
    std::sort(expected.begin(), expected.end());
    if (!structural.homogeneous || structural.branch_levels != expected)
        throw structure_violation("spectral homogeneity: structural route disagrees with the spectral route");
    report.homogeneous = true;
    report.branch_levels = expected;
    return report;
}

namespace {

bool contains_level(std::span<const int> levels, int i) {
    return std::find(levels.begin(), levels.end(), i) != levels.end();
}

}  // namespace

std::vector<std::int64_t> generate_homogeneous(std::int64_t p, int n,
                                               std::span<const int> branch_levels,
                                               const DigitChooser& chooser) {
    for (int i : branch_levels)
        if (i < 0 || i >= n) throw std::invalid_argument("generate_homogeneous: level out of range");
    std::vector<std::int64_t> prefixes = {0};
    std::int64_t power = 1;  // p^level
    for (int level = 0; level < n; ++level) {
        std::vector<std::int64_t> next;
        if (contains_level(branch_levels, level)) {
            next.reserve(prefixes.size() * static_cast<std::size_t>(p));
            for (std::int64_t v : prefixes)
                for (std::int64_t digit = 0; digit < p; ++digit) next.push_back(v + digit * power);
        } else {
            next.reserve(prefixes.size());
            for (std::int64_t v : prefixes) {
                int digit = chooser(level, v);
                if (digit < 0 || digit >= p) throw std::invalid_argument("digit chooser returned an invalid digit");
                next.push_back(v + digit * power);
            }
        }
        prefixes = std::move(next);
        power = checked_mul(power, p);
    }
    std::sort(prefixes.begin(), prefixes.end());
    return prefixes;
}

std::int64_t count_homogeneous(std::int64_t p, int n, std::span<const int> branch_levels) {
    std::int64_t count = 1;
    std::int64_t vertices = 1;  // |C mod p^level|
    for (int level = 0; level < n; ++level) {
        if (contains_level(branch_levels, level)) {
            vertices = checked_mul(vertices, p);
        } else {
            for (std::int64_t i = 0; i < vertices; ++i) count = checked_mul(count, p);
        }
    }
    return count;
}

void enumerate_homogeneous(std::int64_t p, int n, std::span<const int> branch_levels,
                           std::int64_t budget,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    const std::int64_t total = count_homogeneous(p, n, branch_levels);
    if (total > budget)
        throw budget_exceeded("enumerate_homogeneous: count exceeds the budget", total);

    // Odometer over the digit choices of every non-branching level, with
    // vertex sets evolving level by level.
    struct Frame {
        std::vector<std::int64_t> prefixes;
    };
    std::vector<std::int64_t> scratch;
    std::function<void(int, std::int64_t, std::vector<std::int64_t>&)> walk =
        [&](int level, std::int64_t power, std::vector<std::int64_t>& prefixes) {
            if (level == n) {
                scratch = prefixes;
                std::sort(scratch.begin(), scratch.end());
                visit(scratch);
                return;
            }
            if (contains_level(branch_levels, level)) {
                std::vector<std::int64_t> next;
                next.reserve(prefixes.size() * static_cast<std::size_t>(p));
                for (std::int64_t v : prefixes)
                    for (std::int64_t digit = 0; digit < p; ++digit) next.push_back(v + digit * power);
                walk(level + 1, power * p, next);
                return;
            }
            // One digit per vertex: iterate all p^{|prefixes|} assignments.
            std::vector<std::int64_t> assignment(prefixes.size(), 0);
            std::vector<std::int64_t> next(prefixes.size());
            for (;;) {
                for (std::size_t i = 0; i < prefixes.size(); ++i)
                    next[i] = prefixes[i] + assignment[i] * power;
                walk(level + 1, power * p, next);
                std::size_t pos = 0;
                while (pos < assignment.size()) {
                    if (++assignment[pos] < p) break;
                    assignment[pos] = 0;
                    ++pos;
                }
                if (pos == assignment.size()) break;
            }
        };
    std::vector<std::int64_t> root = {0};
    walk(0, 1, root);
}

}  // namespace ptile
