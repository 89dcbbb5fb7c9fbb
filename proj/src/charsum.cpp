#include "ptile/charsum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ptile {

ExponentVector::ExponentVector(std::int64_t m) : m_(m) {
    if (m < 1) throw std::invalid_argument("ExponentVector: order must be >= 1");
    if (m > kEnumerationBound) throw budget_exceeded("ExponentVector order exceeds the enumeration bound");
    coeffs_.assign(static_cast<std::size_t>(m), 0);
}

void ExponentVector::add(std::int64_t e, std::int64_t multiplicity) {
    if (multiplicity < 0) throw std::invalid_argument("ExponentVector: multiplicity must be >= 0");
    auto& slot = coeffs_[static_cast<std::size_t>(mod_reduce(e, m_))];
    slot = checked_add(slot, multiplicity);
    mass_ = checked_add(mass_, multiplicity);
}

ExponentVector mask_polynomial(std::span<const std::int64_t> multiset, std::int64_t m) {
    ExponentVector v(m);
    for (std::int64_t e : multiset) v.add(e);
    return v;
}

std::vector<std::int64_t> poly_mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return out;
}

namespace {

void poly_trim(std::vector<std::int64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<std::int64_t> poly_rem_monic(std::vector<std::int64_t> a, std::span<const std::int64_t> b) {
    if (b.empty() || b.back() != 1) throw std::invalid_argument("poly_rem_monic: divisor must be monic");
    const std::size_t db = b.size() - 1;
    poly_trim(a);
    while (a.size() > db) {
        const std::int64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i < db; ++i)
                a[shift + i] = checked_add(a[shift + i], -checked_mul(lead, b[i]));
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

std::vector<std::int64_t> cyclotomic(std::int64_t s) {
    if (s < 1) throw std::invalid_argument("cyclotomic: s must be >= 1");
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
    }

    std::vector<std::int64_t> result;
    if (s == 1) {
        result = {-1, 1};  // x - 1
    } else {
        // (x^s - 1) divided by the product of Phi_d over proper divisors d.
        std::vector<std::int64_t> divisor = {1};
        for (std::int64_t d : divisors(s)) {
            if (d == s) continue;
            divisor = poly_mul(divisor, cyclotomic(d));
        }
        std::vector<std::int64_t> numerator(static_cast<std::size_t>(s) + 1, 0);
        numerator[0] = -1;
        numerator[static_cast<std::size_t>(s)] = 1;
        // Exact long division; the remainder must vanish.
        std::vector<std::int64_t> quotient(numerator.size() - divisor.size() + 1, 0);
        std::vector<std::int64_t> rem = numerator;
        for (std::size_t k = quotient.size(); k-- > 0;) {
            std::int64_t coef = rem[k + divisor.size() - 1] / divisor.back();
            if (coef * divisor.back() != rem[k + divisor.size() - 1])
                throw std::logic_error("cyclotomic: non-exact division");
            quotient[k] = coef;
            for (std::size_t i = 0; i < divisor.size(); ++i)
                rem[k + i] = checked_add(rem[k + i], -checked_mul(coef, divisor[i]));
        }
        for (std::int64_t r : rem)
            if (r != 0) throw std::logic_error("cyclotomic: nonzero remainder");
        result = quotient;
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(s, result);
    return result;
}

bool vanishes_prime_power(const ExponentVector& v) {
    std::int64_t p = 0;
    int k = 0;
    if (v.order() == 1) return v.mass() == 0;
    if (!is_prime_power(v.order(), &p, &k))
        throw std::invalid_argument("vanishes_prime_power: order is not a prime power");
    const std::int64_t stride = v.order() / p;  // p^{k-1}
    const auto& a = v.coeffs();
    for (std::int64_t r = 0; r < stride; ++r) {
        const std::int64_t head = a[static_cast<std::size_t>(r)];
        for (std::int64_t j = 1; j < p; ++j)
            if (a[static_cast<std::size_t>(r + j * stride)] != head) return false;
    }
    return true;
}

bool vanishes_via_cyclotomic(const ExponentVector& v) {
    if (v.mass() == 0) return true;
    if (v.order() == 1) return false;
    auto rem = poly_rem_monic(v.coeffs(), cyclotomic(v.order()));
    return rem.empty();
}

bool vanishes(const ExponentVector& v) {
    if (v.mass() == 0) return true;
    if (v.order() == 1) return false;
    if (is_prime_power(v.order())) return vanishes_prime_power(v);

    // Content reduction: with d = gcd(m, all live exponents), the sum equals
    // the same sum over (m/d)-th roots with exponents e/d.
    std::int64_t d = v.order();
    for (std::int64_t e = 0; e < v.order() && d > 1; ++e)
        if (v.coeffs()[static_cast<std::size_t>(e)] != 0) d = gcd64(d, e);
    if (d > 1) {
        ExponentVector reduced(v.order() / d);
        for (std::int64_t e = 0; e < v.order(); ++e) {
            std::int64_t coef = v.coeffs()[static_cast<std::size_t>(e)];
            if (coef != 0) reduced.add(e / d, coef);
        }
        return vanishes(reduced);
    }
    return vanishes_via_cyclotomic(v);
}

std::complex<double> complex_value(const ExponentVector& v) {
    std::complex<double> sum = 0.0;
    const double scale = 2.0 * std::numbers::pi / static_cast<double>(v.order());
    for (std::int64_t e = 0; e < v.order(); ++e) {
        std::int64_t coef = v.coeffs()[static_cast<std::size_t>(e)];
        if (coef == 0) continue;
        sum += static_cast<double>(coef) * std::polar(1.0, scale * static_cast<double>(e));
    }
    return sum;
}

ExponentVector character_exponents(const GroupSpec& g_spec, std::span<const Element> a, const Element& g) {
    ExponentVector v(g_spec.character_order());
    for (const Element& x : a) v.add(character_exponent(g_spec, g, x));
    return v;
}

bool vanishes_at(const GroupSpec& g_spec, std::span<const Element> a, const Element& g) {
    return vanishes(character_exponents(g_spec, a, g));
}

std::complex<double> character_sum_f64(const GroupSpec& g_spec, std::span<const Element> a, const Element& g) {
    return complex_value(character_exponents(g_spec, a, g));
}

bool vanishes_at_frequency(std::span<const std::int64_t> multiset, std::int64_t m, std::int64_t d) {
    ExponentVector v(m);
    for (std::int64_t e : multiset) v.add(mod_reduce(checked_mul(mod_reduce(e, m), mod_reduce(d, m)), m));
    return vanishes(v);
}

bool ZeroSet::contains(const Element& e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

ZeroSet zero_set(const GroupSpec& g_spec, std::span<const Element> a, bool per_orbit, std::int64_t bound) {
    if (g_spec.order() > bound) throw budget_exceeded("zero_set: group order exceeds the enumeration bound");
    ZeroSet z{g_spec, {}};
    if (per_orbit && g_spec.family() == Family::kPrimePowerTimesP) {
        for (const Element& rep : orbit_representatives(g_spec)) {
            if (!vanishes_at(g_spec, a, rep)) continue;
            for (const Element& member : scalar_orbit(g_spec, rep)) z.members.push_back(member);
        }
        std::sort(z.members.begin(), z.members.end());
        return z;
    }
    for (std::int64_t i = 1; i < g_spec.order(); ++i) {
        Element g = g_spec.element_at(i);
        if (vanishes_at(g_spec, a, g)) z.members.push_back(g);
    }
    return z;
}

bool translation_invariance_check(const GroupSpec& g_spec, std::span<const Element> a, const Element& g) {
    std::vector<Element> translated;
    translated.reserve(a.size());
    for (const Element& x : a) translated.push_back(g_spec.add(x, g));
    return zero_set(g_spec, a).members == zero_set(g_spec, translated).members;
}

bool unit_scaling_closure_check(const GroupSpec& g_spec, std::span<const Element> a) {
    ZeroSet z = zero_set(g_spec, a);
    for (const Element& member : z.members)
        for (std::int64_t r : g_spec.units())
            if (!z.contains(g_spec.scale(r, member))) return false;
    return true;
}

SliceZeroReport slice_zeros(const GroupSpec& g_spec, std::span<const Element> a, std::int64_t h) {
    if (g_spec.arity() != 2) throw std::invalid_argument("slice_zeros requires a two-factor group");
    const std::int64_t first_order = g_spec.factors()[0];
    const std::int64_t second_order = g_spec.factors()[1];
    h = mod_reduce(h, first_order);

    for (std::int64_t s = 0; s < second_order; ++s) {
        Element g = g_spec.make({h, s});
        if (!vanishes_at(g_spec, a, g))
            throw std::invalid_argument("slice_zeros: (h, s) is not in the zero set for s = " + std::to_string(s));
    }

    SliceZeroReport report;
    report.h = h;
    report.slices.assign(static_cast<std::size_t>(second_order), {});
    for (const Element& x : a) report.slices[static_cast<std::size_t>(x[1])].push_back(x[0]);
    report.all_vanish = true;
    for (auto& slice : report.slices) {
        std::sort(slice.begin(), slice.end());
        bool ok = vanishes_at_frequency(slice, first_order, h);
        report.verdicts.push_back(ok);
        report.all_vanish = report.all_vanish && ok;
    }
    return report;
}

std::vector<std::vector<std::int64_t>> decompose_vanishing_sum(std::span<const std::int64_t> c,
                                                               std::int64_t p, int n) {
    const std::int64_t pn = checked_pow(p, n);
    ExponentVector v(pn);
    for (std::int64_t e : c) v.add(mod_reduce(e, pn));
    if (!vanishes_prime_power(v))
        throw std::invalid_argument("decompose_vanishing_sum: the input sum does not vanish");

    const std::int64_t stride = pn / p;
    std::vector<std::vector<std::int64_t>> blocks;
    for (std::int64_t r = 0; r < stride; ++r) {
        // Vanishing forces equal multiplicity across the whole class of r.
        std::int64_t copies = v.coeffs()[static_cast<std::size_t>(r)];
        for (std::int64_t i = 0; i < copies; ++i) {
            std::vector<std::int64_t> block;
            block.reserve(static_cast<std::size_t>(p));
            for (std::int64_t j = 0; j < p; ++j) block.push_back(r + j * stride);
            blocks.push_back(std::move(block));
        }
    }
    return blocks;
}

}  // namespace ptile
