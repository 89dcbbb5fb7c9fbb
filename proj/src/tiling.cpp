#include "ptile/tiling.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace ptile {

namespace {

std::vector<Element> sorted_unique(const GroupSpec& g_spec, std::span<const Element> s, const char* what) {
    std::vector<Element> out(s.begin(), s.end());
    for (const Element& e : out) g_spec.require_element(e);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument(std::string(what) + " must not contain repeated elements");
    return out;
}

std::uint64_t mask_of(const GroupSpec& g_spec, std::span<const Element> s) {
    std::uint64_t m = 0;
    for (const Element& e : s) m |= std::uint64_t{1} << g_spec.index_of(e);
    return m;
}

std::vector<Element> unmask(const GroupSpec& g_spec, std::uint64_t m) {
    std::vector<Element> out;
    while (m) {
        int bit = std::countr_zero(m);
        out.push_back(g_spec.element_at(bit));
        m &= m - 1;
    }
    return out;
}

// Shared DFS state for one cover search: translate masks are materialized
// lazily since most failing candidates touch only a handful of them.
struct CoverSearch {
    const CoverContext& ctx;
    std::uint64_t set_mask;
    std::vector<std::int64_t> members;        // indices of the set
    std::vector<std::uint64_t> translate_of;  // by t, lazily filled
    std::vector<bool> known;

    CoverSearch(const CoverContext& c, std::uint64_t m) : ctx(c), set_mask(m) {
        std::uint64_t rest = m;
        while (rest) {
            members.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        translate_of.assign(static_cast<std::size_t>(ctx.order()), 0);
        known.assign(static_cast<std::size_t>(ctx.order()), false);
    }

    std::uint64_t translate(std::int64_t t) {
        if (!known[static_cast<std::size_t>(t)]) {
            translate_of[static_cast<std::size_t>(t)] = ctx.translate(set_mask, t);
            known[static_cast<std::size_t>(t)] = true;
        }
        return translate_of[static_cast<std::size_t>(t)];
    }

    bool exists(std::uint64_t covered) {
        if (covered == ctx.full_mask()) return true;
        const std::int64_t x = std::countr_zero(~covered);
        for (std::int64_t member : members) {
            const std::int64_t t = ctx.sub_index(x, member);
            const std::uint64_t block = translate(t);
            if ((block & covered) == 0 && exists(covered | block)) return true;
        }
        return false;
    }

    void collect(std::uint64_t covered, std::uint64_t chosen, std::vector<std::uint64_t>& out) {
        if (covered == ctx.full_mask()) {
            out.push_back(chosen);
            return;
        }
        const std::int64_t x = std::countr_zero(~covered);
        for (std::int64_t member : members) {
            const std::int64_t t = ctx.sub_index(x, member);
            if (chosen & (std::uint64_t{1} << t)) continue;
            const std::uint64_t block = translate(t);
            if ((block & covered) == 0)
                collect(covered | block, chosen | (std::uint64_t{1} << t), out);
        }
    }
};

}  // namespace

CoverContext::CoverContext(std::span<const std::int64_t> factors)
    : factors_(factors.begin(), factors.end()) {
    order_ = 1;
    for (std::int64_t f : factors_) {
        if (f < 1) throw std::invalid_argument("CoverContext: factors must be positive");
        order_ = checked_mul(order_, f);
    }
    if (order_ > 64) throw budget_exceeded("CoverContext: group order exceeds the 64-element search limit");
    full_ = order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;

    const auto coords = [&](std::int64_t idx) {
        std::vector<std::int64_t> c(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            c[i] = idx % factors_[i];
            idx /= factors_[i];
        }
        return c;
    };
    add_.resize(static_cast<std::size_t>(order_ * order_));
    neg_.resize(static_cast<std::size_t>(order_));
    for (std::int64_t a = 0; a < order_; ++a) {
        auto ca = coords(a);
        std::int64_t n = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) n = n * factors_[i] + mod_reduce(-ca[i], factors_[i]);
        neg_[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(n);
        for (std::int64_t b = 0; b < order_; ++b) {
            auto cb = coords(b);
            std::int64_t s = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i) s = s * factors_[i] + (ca[i] + cb[i]) % factors_[i];
            add_[static_cast<std::size_t>(a * order_ + b)] = static_cast<std::int8_t>(s);
        }
    }
}

std::uint64_t CoverContext::translate(std::uint64_t set_mask, std::int64_t t) const {
    std::uint64_t out = 0;
    while (set_mask) {
        const std::int64_t x = std::countr_zero(set_mask);
        out |= std::uint64_t{1} << add_index(x, t);
        set_mask &= set_mask - 1;
    }
    return out;
}

bool CoverContext::admits_complement(std::uint64_t set_mask) const {
    if (set_mask == 0) return false;
    if (order_ % std::popcount(set_mask) != 0) return false;
    CoverSearch search(*this, set_mask);
    return search.exists(0);
}

std::vector<std::uint64_t> CoverContext::complements_containing_zero(std::uint64_t set_mask) const {
    if (set_mask == 0 || order_ % std::popcount(set_mask) != 0) return {};
    CoverSearch search(*this, set_mask);
    std::vector<std::uint64_t> out;
    const std::uint64_t base = search.translate(0);
    search.collect(base, std::uint64_t{1}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t CoverContext::canonical_translate(std::uint64_t set_mask) const {
    std::uint64_t best = ~std::uint64_t{0};
    std::uint64_t rest = set_mask;
    while (rest) {
        const std::int64_t s = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t shifted = 0;
        std::uint64_t m = set_mask;
        while (m) {
            const std::int64_t x = std::countr_zero(m);
            shifted |= std::uint64_t{1} << sub_index(x, s);
            m &= m - 1;
        }
        best = std::min(best, shifted);
    }
    return best;
}

TilingReport is_tiling_pair(const GroupSpec& g_spec, std::span<const Element> omega,
                            std::span<const Element> t) {
    TilingReport report;
    report.omega = sorted_unique(g_spec, omega, "omega");
    report.t = sorted_unique(g_spec, t, "t");
    if (report.omega.empty() || report.t.empty())
        throw std::invalid_argument("is_tiling_pair: both sets must be nonempty");
    const std::int64_t order = g_spec.order();
    if (order > kEnumerationBound) throw budget_exceeded("is_tiling_pair: group order exceeds the bound");

    const auto covers_exactly_once = [&](std::span<const Element> s1, std::span<const Element> s2) {
        std::vector<std::int64_t> hits(static_cast<std::size_t>(order), 0);
        for (const Element& a : s1)
            for (const Element& b : s2) ++hits[static_cast<std::size_t>(g_spec.index_of(g_spec.add(a, b)))];
        return std::all_of(hits.begin(), hits.end(), [](std::int64_t h) { return h == 1; });
    };

    report.by_direct_cover = covers_exactly_once(report.omega, report.t);
    report.by_swapped_cover = covers_exactly_once(report.t, report.omega);

    // Fixed sample translation; any (x, y) is as good as any other.
    const Element x = g_spec.element_at(1 % order);
    const Element y = g_spec.element_at(2 % order);
    std::vector<Element> omega_shift, t_shift;
    for (const Element& e : report.omega) omega_shift.push_back(g_spec.add(e, x));
    for (const Element& e : report.t) t_shift.push_back(g_spec.add(e, y));
    report.by_translated_cover = covers_exactly_once(omega_shift, t_shift);

    const bool size_product = checked_mul(static_cast<std::int64_t>(report.omega.size()),
                                          static_cast<std::int64_t>(report.t.size())) == order;
    {
        std::vector<bool> in_diff_omega(static_cast<std::size_t>(order), false);
        for (const Element& a : report.omega)
            for (const Element& b : report.omega)
                in_diff_omega[static_cast<std::size_t>(g_spec.index_of(g_spec.sub(a, b)))] = true;
        bool trivial_intersection = true;
        for (const Element& a : report.t)
            for (const Element& b : report.t) {
                const std::int64_t d = g_spec.index_of(g_spec.sub(a, b));
                if (d != 0 && in_diff_omega[static_cast<std::size_t>(d)]) trivial_intersection = false;
            }
        report.by_difference_sets = size_product && trivial_intersection;
    }
    {
        ZeroSet z_omega = zero_set(g_spec, report.omega);
        ZeroSet z_t = zero_set(g_spec, report.t);
        bool whole = true;
        for (std::int64_t i = 1; i < order; ++i) {
            const Element g = g_spec.element_at(i);
            if (!z_omega.contains(g) && !z_t.contains(g)) {
                whole = false;
                break;
            }
        }
        report.by_zero_set_union = size_product && whole;
    }

    const bool verdict = report.by_direct_cover;
    if (report.by_swapped_cover != verdict || report.by_translated_cover != verdict ||
        report.by_difference_sets != verdict || report.by_zero_set_union != verdict)
        throw structure_violation("is_tiling_pair: the equivalent criteria disagree");
    report.tiling = verdict;
    return report;
}

bool admits_complement(const GroupSpec& g_spec, std::span<const Element> omega) {
    auto sorted = sorted_unique(g_spec, omega, "omega");
    if (sorted.empty()) throw std::invalid_argument("admits_complement: omega must be nonempty");
    CoverContext ctx(g_spec.factors());
    return ctx.admits_complement(mask_of(g_spec, sorted));
}

bool admits_complement_cyclic(std::span<const std::int64_t> a, std::int64_t n_modulus) {
    std::vector<std::int64_t> sorted(a.begin(), a.end());
    for (auto& v : sorted) v = mod_reduce(v, n_modulus);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("admits_complement_cyclic: repeated elements");
    if (sorted.empty()) throw std::invalid_argument("admits_complement_cyclic: empty set");
    const std::int64_t factors[1] = {n_modulus};
    CoverContext ctx(factors);
    std::uint64_t mask = 0;
    for (std::int64_t v : sorted) mask |= std::uint64_t{1} << v;
    return ctx.admits_complement(mask);
}

std::vector<std::vector<Element>> find_complements(const GroupSpec& g_spec,
                                                   std::span<const Element> omega) {
    auto sorted = sorted_unique(g_spec, omega, "omega");
    if (sorted.empty()) throw std::invalid_argument("find_complements: omega must be nonempty");
    if (g_spec.order() % static_cast<std::int64_t>(sorted.size()) != 0)
        throw std::invalid_argument("find_complements: |omega| must divide |G|");
    CoverContext ctx(g_spec.factors());
    std::vector<std::vector<Element>> out;
    for (std::uint64_t m : ctx.complements_containing_zero(mask_of(g_spec, sorted))) {
        auto t = unmask(g_spec, m);
        if (!is_tiling_pair(g_spec, sorted, t).tiling)
            throw structure_violation("find_complements: search result failed verification");
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Combinations of {0,...,m-1} taken r at a time in lexicographic order.
std::vector<std::int64_t> comb_unrank(std::int64_t m, std::int64_t r, std::int64_t rank) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(r));
    std::int64_t value = 0;
    for (std::int64_t slot = r; slot > 0; --slot) {
        for (;; ++value) {
            const std::int64_t with_here = binomial(m - value - 1, slot - 1);
            if (rank < with_here) break;
            rank -= with_here;
        }
        out.push_back(value++);
    }
    return out;
}

bool comb_next(std::vector<std::int64_t>& c, std::int64_t m) {
    const std::int64_t r = static_cast<std::int64_t>(c.size());
    std::int64_t i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - r + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

}  // namespace

TileEnumeration enumerate_tiles(const GroupSpec& g_spec, std::int64_t k,
                                const TileEnumerationOptions& options) {
    const std::int64_t order = g_spec.order();
    if (k < 1 || order % k != 0) throw std::invalid_argument("enumerate_tiles: k must divide |G|");
    CoverContext ctx(g_spec.factors());
    const std::int64_t total = binomial(order - 1, k - 1);
    if (total > options.budget)
        throw budget_exceeded("enumerate_tiles: candidate count exceeds the budget", total);

    const int jobs = std::max(1, options.jobs);
    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(jobs));
    auto worker = [&](int job) {
        const std::int64_t begin = total * job / jobs;
        const std::int64_t end = total * (job + 1) / jobs;
        if (begin >= end) return;
        std::vector<std::int64_t> comb = comb_unrank(order - 1, k - 1, begin);
        for (std::int64_t rank = begin; rank < end; ++rank) {
            std::uint64_t mask = 1;  // index 0 always included
            for (std::int64_t c : comb) mask |= std::uint64_t{1} << (c + 1);
            if (ctx.admits_complement(mask)) {
                if (!options.dedupe_translations || ctx.canonical_translate(mask) == mask)
                    found[static_cast<std::size_t>(job)].push_back(mask);
            }
            if (rank + 1 < end) comb_next(comb, order - 1);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (auto& th : threads) th.join();
    }

    TileEnumeration result;
    result.size = k;
    result.candidates = total;
    for (const auto& chunk : found)
        for (std::uint64_t m : chunk) result.tiles.push_back(unmask(g_spec, m));
    return result;
}

std::vector<std::int64_t> sa_set(std::span<const std::int64_t> a, std::int64_t n_modulus) {
    if (n_modulus < 1) throw std::invalid_argument("sa_set: N must be >= 1");
    const ExponentVector mask = mask_polynomial(a, n_modulus);
    std::vector<std::int64_t> out;
    for (std::int64_t s : divisors(n_modulus)) {
        if (s < 2 || !is_prime_power(s)) continue;
        if (poly_rem_monic(mask.coeffs(), cyclotomic(s)).empty()) out.push_back(s);
    }
    return out;
}

T1Report check_t1(std::span<const std::int64_t> a, std::int64_t n_modulus) {
    T1Report report;
    report.sa = sa_set(a, n_modulus);
    report.cardinality = static_cast<std::int64_t>(a.size());
    report.phi_product = 1;
    for (std::int64_t s : report.sa) {
        std::int64_t at_one = 0;
        for (std::int64_t c : cyclotomic(s)) at_one = checked_add(at_one, c);
        report.phi_product = checked_mul(report.phi_product, at_one);
    }
    report.pass = report.cardinality == report.phi_product;
    return report;
}

T2Report check_t2(std::span<const std::int64_t> a, std::int64_t n_modulus) {
    T2Report report;
    report.sa = sa_set(a, n_modulus);
    const ExponentVector mask = mask_polynomial(a, n_modulus);

    // Group S_A by prime, then try every selection of one power each from
    // m >= 2 distinct primes.
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
    for (std::int64_t s : report.sa) {
        std::int64_t p = 0;
        is_prime_power(s, &p, nullptr);
        by_prime[p].push_back(s);
    }
    std::vector<std::vector<std::int64_t>> groups;
    for (auto& [p, powers] : by_prime) groups.push_back(powers);

    std::vector<std::int64_t> chosen;
    auto explore = [&](auto&& self, std::size_t at) -> void {
        if (at == groups.size()) {
            if (chosen.size() < 2) return;
            std::int64_t product = 1;
            for (std::int64_t s : chosen) product = checked_mul(product, s);
            report.checked_products.push_back(product);
            if (!poly_rem_monic(mask.coeffs(), cyclotomic(product)).empty())
                report.failed_products.push_back(product);
            return;
        }
        self(self, at + 1);  // skip this prime
        for (std::int64_t s : groups[at]) {
            chosen.push_back(s);
            self(self, at + 1);
            chosen.pop_back();
        }
    };
    explore(explore, 0);
    std::sort(report.checked_products.begin(), report.checked_products.end());
    std::sort(report.failed_products.begin(), report.failed_products.end());
    report.pass = report.failed_products.empty();
    return report;
}

CmEquivalenceReport cm_tile_equivalence(std::span<const std::int64_t> a, std::int64_t n_modulus,
                                        std::int64_t budget) {
    if (a.empty()) throw std::invalid_argument("cm_tile_equivalence: A must be nonempty");
    std::int64_t rest = n_modulus;
    std::vector<std::pair<std::int64_t, int>> prime_factors;
    for (std::int64_t d = 2; d * d <= rest; ++d) {
        if (rest % d) continue;
        int e = 0;
        while (rest % d == 0) rest /= d, ++e;
        prime_factors.emplace_back(d, e);
    }
    if (rest > 1) prime_factors.emplace_back(rest, 1);
    const bool supported =
        prime_factors.size() == 1 ||
        (prime_factors.size() == 2 && (prime_factors[0].second == 1 || prime_factors[1].second == 1));
    if (!supported)
        throw std::invalid_argument("cm_tile_equivalence: N must be p^n or p^n q");
    if (n_modulus > std::min<std::int64_t>(64, budget))
        throw budget_exceeded("cm_tile_equivalence: N exceeds the search limit");

    CmEquivalenceReport report;
    report.tile = admits_complement_cyclic(a, n_modulus);
    report.t1 = check_t1(a, n_modulus);
    report.t2 = check_t2(a, n_modulus);
    report.conditions = report.t1.pass && report.t2.pass;
    report.equivalent = report.tile == report.conditions;
    return report;
}

TilingReport scale_complement(const GroupSpec& g_spec, std::span<const Element> omega,
                              std::span<const Element> t, std::int64_t k) {
    auto t_sorted = sorted_unique(g_spec, t, "t");
    if (gcd64(k, static_cast<std::int64_t>(t_sorted.size())) != 1)
        throw std::invalid_argument("scale_complement: gcd(k, |T|) must be 1");
    std::vector<Element> scaled;
    scaled.reserve(t_sorted.size());
    for (const Element& e : t_sorted) scaled.push_back(g_spec.scale(k, e));
    std::sort(scaled.begin(), scaled.end());
    scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
    return is_tiling_pair(g_spec, omega, scaled);
}

int divisibility_bound(std::span<const std::int64_t> a, std::int64_t n_modulus, std::int64_t p) {
    if (!is_prime(p) || n_modulus % p != 0)
        throw std::invalid_argument("divisibility_bound: p must be a prime factor of N");
    int k = 0;
    std::int64_t pd = p;
    while (n_modulus % pd == 0) {
        if (vanishes_at_frequency(a, n_modulus, n_modulus / pd)) ++k;
        if (pd > n_modulus / p) break;
        pd = checked_mul(pd, p);
    }
    std::int64_t pk = checked_pow(p, k);
    if (static_cast<std::int64_t>(a.size()) % pk != 0)
        throw structure_violation("divisibility_bound: p^k does not divide |A|");
    return k;
}

std::optional<std::vector<Element>> find_spectrum(const GroupSpec& g_spec,
                                                  std::span<const Element> omega,
                                                  std::int64_t node_budget) {
    auto sorted = sorted_unique(g_spec, omega, "omega");
    if (sorted.empty()) throw std::invalid_argument("find_spectrum: omega must be nonempty");
    const std::size_t target = sorted.size();
    ZeroSet z = zero_set(g_spec, sorted);
    std::vector<bool> in_zero(static_cast<std::size_t>(g_spec.order()), false);
    for (const Element& e : z.members) in_zero[static_cast<std::size_t>(g_spec.index_of(e))] = true;

    // Candidates beyond 0 must differ from 0 by a zero, i.e. lie in Z_Omega.
    std::vector<Element> candidates = z.members;
    std::vector<Element> chosen = {g_spec.zero()};
    std::int64_t nodes = 0;
    std::optional<std::vector<Element>> result;

    auto grow = [&](auto&& self, std::size_t from) -> bool {
        if (++nodes > node_budget) throw budget_exceeded("find_spectrum: node budget exceeded", nodes);
        if (chosen.size() == target) {
            result = chosen;
            return true;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (candidates.size() - i < target - chosen.size()) break;
            const Element& c = candidates[i];
            bool compatible = true;
            for (const Element& prev : chosen) {
                const std::int64_t d = g_spec.index_of(g_spec.sub(c, prev));
                if (d == 0 || !in_zero[static_cast<std::size_t>(d)]) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) continue;
            chosen.push_back(c);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (target == 1) return chosen;
    grow(grow, 0);
    return result;
}

}  // namespace ptile
