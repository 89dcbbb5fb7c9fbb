#include "ptile/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptile {

namespace {

void require_prime(std::int64_t v, const char* what) {
    if (!is_prime(v)) throw std::invalid_argument(std::string(what) + " must be prime");
}

}  // namespace

GroupSpec GroupSpec::cyclic_prime_power(std::int64_t p, int n) {
    require_prime(p, "p");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    GroupSpec g;
    g.family_ = Family::kCyclicPrimePower;
    g.p_ = p;
    g.n_ = n;
    g.factors_ = {checked_pow(p, n)};
    g.order_ = g.factors_[0];
    g.character_order_ = g.order_;
    return g;
}

GroupSpec GroupSpec::prime_power_times_q(std::int64_t p, int n, std::int64_t q) {
    require_prime(p, "p");
    require_prime(q, "q");
    if (p == q) throw std::invalid_argument("p and q must be distinct primes");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    GroupSpec g;
    g.family_ = Family::kPrimePowerTimesQ;
    g.p_ = p;
    g.n_ = n;
    g.q_ = q;
    g.factors_ = {checked_pow(p, n), q};
    g.order_ = checked_mul(g.factors_[0], q);
    g.character_order_ = lcm64(g.factors_[0], q);
    return g;
}

GroupSpec GroupSpec::prime_power_times_p(std::int64_t p, int n) {
    require_prime(p, "p");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    GroupSpec g;
    g.family_ = Family::kPrimePowerTimesP;
    g.p_ = p;
    g.n_ = n;
    g.factors_ = {checked_pow(p, n), p};
    g.order_ = checked_mul(g.factors_[0], p);
    g.character_order_ = g.factors_[0];  // lcm(p^n, p)
    return g;
}

std::int64_t GroupSpec::q() const {
    if (family_ != Family::kPrimePowerTimesQ) throw std::logic_error("q() requires the PrimePowerTimesQ family");
    return q_;
}

Element GroupSpec::make(std::span<const std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) != arity())
        throw std::invalid_argument("element arity does not match the group");
    Element e;
    e.arity_ = static_cast<std::int8_t>(arity());
    for (int i = 0; i < arity(); ++i) e.coords_[static_cast<std::size_t>(i)] = mod_reduce(coords[static_cast<std::size_t>(i)], factors_[static_cast<std::size_t>(i)]);
    return e;
}

Element GroupSpec::make(std::initializer_list<std::int64_t> coords) const {
    return make(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

Element GroupSpec::zero() const {
    Element e;
    e.arity_ = static_cast<std::int8_t>(arity());
    return e;
}

Element GroupSpec::add(const Element& a, const Element& b) const {
    require_element(a);
    require_element(b);
    Element e;
    e.arity_ = a.arity_;
    for (int i = 0; i < arity(); ++i)
        e.coords_[static_cast<std::size_t>(i)] = mod_reduce(a[i] + b[i], factors_[static_cast<std::size_t>(i)]);
    return e;
}

Element GroupSpec::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element GroupSpec::neg(const Element& a) const {
    require_element(a);
    Element e;
    e.arity_ = a.arity_;
    for (int i = 0; i < arity(); ++i)
        e.coords_[static_cast<std::size_t>(i)] = mod_reduce(-a[i], factors_[static_cast<std::size_t>(i)]);
    return e;
}

Element GroupSpec::scale(std::int64_t r, const Element& g) const {
    require_element(g);
    Element e;
    e.arity_ = g.arity_;
    for (int i = 0; i < arity(); ++i) {
        std::int64_t f = factors_[static_cast<std::size_t>(i)];
        e.coords_[static_cast<std::size_t>(i)] = mod_reduce(checked_mul(mod_reduce(r, f), g[i]), f);
    }
    return e;
}

std::int64_t GroupSpec::index_of(const Element& e) const {
    require_element(e);
    std::int64_t idx = 0;
    for (int i = 0; i < arity(); ++i) idx = idx * factors_[static_cast<std::size_t>(i)] + e[i];
    return idx;
}

Element GroupSpec::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    Element e;
    e.arity_ = static_cast<std::int8_t>(arity());
    for (int i = arity() - 1; i >= 0; --i) {
        std::int64_t f = factors_[static_cast<std::size_t>(i)];
        e.coords_[static_cast<std::size_t>(i)] = index % f;
        index /= f;
    }
    return e;
}

std::vector<Element> GroupSpec::elements(std::int64_t bound) const {
    if (order_ > bound) throw budget_exceeded("group order exceeds the enumeration bound", 0);
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<std::int64_t> GroupSpec::units() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 1; r < order_; ++r)
        if (gcd64(r, order_) == 1) out.push_back(r);
    return out;
}

void GroupSpec::require_element(const Element& e) const {
    if (e.arity() != arity()) throw std::invalid_argument("element does not belong to this group (arity mismatch)");
    for (int i = 0; i < arity(); ++i)
        if (e[i] < 0 || e[i] >= factors_[static_cast<std::size_t>(i)])
            throw std::invalid_argument("element does not belong to this group (coordinate out of range)");
}

std::int64_t character_exponent(const GroupSpec& g_spec, const Element& g, const Element& x) {
    g_spec.require_element(g);
    g_spec.require_element(x);
    const std::int64_t big_l = g_spec.character_order();
    std::int64_t e = 0;
    auto factors = g_spec.factors();
    for (int i = 0; i < g_spec.arity(); ++i) {
        std::int64_t stride = big_l / factors[static_cast<std::size_t>(i)];
        e = mod_reduce(e + checked_mul(stride, checked_mul(g[i], x[i])) % big_l, big_l);
    }
    return e;
}

Element crt_split(std::int64_t x, std::int64_t p, int n, std::int64_t q) {
    GroupSpec g = GroupSpec::prime_power_times_q(p, n, q);
    if (x < 0 || x >= g.order()) throw std::invalid_argument("crt_split: x out of range");
    return g.make({x % g.factors()[0], x % q});
}

std::int64_t crt_join(const GroupSpec& pnq, const Element& e) {
    if (pnq.family() != Family::kPrimePowerTimesQ)
        throw std::invalid_argument("crt_join requires the PrimePowerTimesQ family");
    pnq.require_element(e);
    const std::int64_t pn = pnq.factors()[0];
    const std::int64_t q = pnq.q();
    // x = e0 + pn * ((e1 - e0) / pn mod q)
    std::int64_t delta = mod_reduce(e[1] - e[0], q);
    std::int64_t x = e[0] + pn * mod_reduce(checked_mul(delta, mod_inverse(pn % q, q)), q);
    return x;
}

std::int64_t inner_product(const GroupSpec& pnp, const Element& x, const Element& y) {
    if (pnp.family() != Family::kPrimePowerTimesP)
        throw std::invalid_argument("inner_product requires the PrimePowerTimesP family");
    pnp.require_element(x);
    pnp.require_element(y);
    const std::int64_t pn = pnp.factors()[0];
    const std::int64_t lever = pn / pnp.p();  // p^{n-1}
    std::int64_t v = checked_mul(x[0], y[0]) % pn;
    v = mod_reduce(v + checked_mul(lever, checked_mul(x[1], y[1]) % pn) % pn, pn);
    return v;
}

Element scalar_mul(const GroupSpec& pnp, std::int64_t r, const Element& d) {
    if (pnp.family() != Family::kPrimePowerTimesP)
        throw std::invalid_argument("scalar_mul requires the PrimePowerTimesP family");
    if (gcd64(mod_reduce(r, pnp.p()), pnp.p()) != 1)
        throw std::invalid_argument("scalar_mul: r must be a unit mod p^n");
    return pnp.scale(r, d);
}

Plane plane(const GroupSpec& pnp, const Element& d, std::int64_t t) {
    if (pnp.family() != Family::kPrimePowerTimesP)
        throw std::invalid_argument("plane requires the PrimePowerTimesP family");
    pnp.require_element(d);
    const std::int64_t pn = pnp.factors()[0];
    t = mod_reduce(t, pn);
    Plane h;
    h.direction = d;
    h.offset = t;
    for (std::int64_t i = 0; i < pnp.order(); ++i) {
        Element x = pnp.element_at(i);
        if (inner_product(pnp, x, d) == t) h.members.push_back(x);
    }
    return h;
}

std::vector<Element> scalar_orbit(const GroupSpec& pnp, const Element& e) {
    if (pnp.family() != Family::kPrimePowerTimesP)
        throw std::invalid_argument("scalar_orbit requires the PrimePowerTimesP family");
    const std::int64_t pn = pnp.factors()[0];
    std::vector<Element> orbit;
    for (std::int64_t r = 1; r < pn; ++r) {
        if (r % pnp.p() == 0) continue;
        orbit.push_back(pnp.scale(r, e));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::vector<Element> orbit_representatives(const GroupSpec& pnp) {
    if (pnp.family() != Family::kPrimePowerTimesP)
        throw std::invalid_argument("orbit_representatives requires the PrimePowerTimesP family");
    std::vector<bool> seen(static_cast<std::size_t>(pnp.order()), false);
    seen[0] = true;  // zero is excluded
    std::vector<Element> reps;
    for (std::int64_t i = 1; i < pnp.order(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        Element rep = pnp.element_at(i);
        reps.push_back(rep);
        for (const Element& member : scalar_orbit(pnp, rep))
            seen[static_cast<std::size_t>(pnp.index_of(member))] = true;
    }
    return reps;
}

}  // namespace ptile
