#pragma once

#include "askey/uqsl2.hpp"

#include <compare>
#include <map>
#include <vector>

namespace askey {

/// Equitable monomial x^h y^i z^j (h, j >= 0, i any integer).
struct EqMono {
    int h = 0;
    int i = 0;
    int j = 0;
    friend auto operator<=>(const EqMono&, const EqMono&) = default;
};

/// Expansion of an element in the basis x^h y^i z^j.
template <class C>
using EquitableExpansion = std::map<EqMono, C>;

namespace detail {

inline const UElement& cached_power(std::vector<UElement>& cache, UElement (*gen)(), int n) {
    if (cache.empty()) cache.push_back(u::one());
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * gen());
    return cache[static_cast<std::size_t>(n)];
}

inline const UElement& x_pow(int n) {
    thread_local std::vector<UElement> cache;
    return cached_power(cache, &u::x, n);
}
inline const UElement& z_pow(int n) {
    thread_local std::vector<UElement> cache;
    return cached_power(cache, &u::z, n);
}

} // namespace detail

/// PBW normal form of x^h y^i z^j.
inline const UElement& equitable_monomial(const EqMono& m) {
    thread_local std::map<EqMono, UElement> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    UElement v = detail::x_pow(m.h) * u::k(m.i) * detail::z_pow(m.j);
    return cache.emplace(m, std::move(v)).first->second;
}

/// Coefficient of E^h k^{i-h} F^j in x^h y^i z^j: (-1)^h q^{-h^2}. In the e/f
/// basis this is (-1)^h (q - q^-1)^{h+j} q^{-h^2}; all other terms of the
/// monomial have smaller rank r + t.
inline RatQ equitable_leading_coeff(const EqMono& m) {
    const RatQ v = RatQ::q_pow(-m.h * m.h);
    return m.h % 2 == 0 ? v : -v;
}

template <class C>
Pbw<C> from_equitable(const EquitableExpansion<C>& exp) {
    Pbw<C> r;
    for (const auto& [m, c] : exp) {
        for (const auto& [pm, g] : equitable_monomial(m).terms()) r.add_term(pm, scale(c, g));
    }
    return r;
}

/// Triangular elimination by decreasing rank: a PBW term c E^r k^s F^t of
/// maximal rank is matched by the monomial x^r y^{s+r} z^t, whose expansion
/// has the same top term and otherwise lower rank.
template <class C>
EquitableExpansion<C> to_equitable(const Pbw<C>& u) {
    EquitableExpansion<C> out;
    Pbw<C> work = u;
    while (!work.is_zero()) {
        auto top = work.terms().begin();
        for (auto it = work.terms().begin(); it != work.terms().end(); ++it)
            if (it->first.rank() > top->first.rank()) top = it;
        const PbwMono pm = top->first;
        const EqMono em{pm.r, pm.s + pm.r, pm.t};
        const C d = scale(top->second, equitable_leading_coeff(em).inv());
        for (const auto& [m, g] : equitable_monomial(em).terms()) work.add_term(m, -scale(d, g));
        out.emplace(em, d);
    }
    return out;
}

/// Membership in U' (the subalgebra generated by x, y, z): every equitable
/// monomial has a nonnegative power of y.
template <class C>
bool in_u_prime(const Pbw<C>& u) {
    for (const auto& [m, c] : to_equitable(u))
        if (m.i < 0) return false;
    return true;
}

} // namespace askey
