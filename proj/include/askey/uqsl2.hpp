#pragma once

#include "askey/error.hpp"
#include "askey/laurent.hpp"
#include "askey/ratq.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace askey {

/// PBW monomial e^r k^s f^t (r, t >= 0).
struct PbwMono {
    int r = 0;
    int s = 0;
    int t = 0;

    /// Grading degree r - t.
    int degree() const noexcept { return r - t; }
    /// Total e/f count r + t, the filtration used by the equitable basis.
    int rank() const noexcept { return r + t; }
    friend auto operator<=>(const PbwMono&, const PbwMono&) = default;
};

namespace detail {

using StructureTerms = std::vector<std::pair<PbwMono, RatQ>>;

/// sum_{j<z} q^(2 j sign)
inline RatQ geometric_q2(int z, int sign) {
    RatQ r;
    for (int j = 0; j < z; ++j) r += RatQ::q_pow(2 * j * sign);
    return r;
}

/// Right multiplication by E of a list of PBW terms:
/// E^x k^y F^z E = q^2y E^{x+1} k^y F^z
///               - (q-q^-1) S+_z E^x k^{y+1} F^{z-1} + (q-q^-1) S-_z E^x k^{y-1} F^{z-1},
/// S+-_z = sum_{j<z} q^{+-2j}.
inline StructureTerms right_mul_E(const StructureTerms& in) {
    std::map<PbwMono, RatQ> acc;
    auto add = [&acc](const PbwMono& m, const RatQ& c) {
        if (c.is_zero()) return;
        auto [it, ins] = acc.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    for (const auto& [m, c] : in) {
        add({m.r + 1, m.s, m.t}, c.mul_q_pow(2 * m.s));
        if (m.t > 0) {
            add({m.r, m.s + 1, m.t - 1}, -(c * q_minus_qinv() * geometric_q2(m.t, 1)));
            add({m.r, m.s - 1, m.t - 1}, c * q_minus_qinv() * geometric_q2(m.t, -1));
        }
    }
    return {acc.begin(), acc.end()};
}

/// PBW form of F^t E^r. Cached per thread.
inline const StructureTerms& f_times_e(int t, int r) {
    thread_local std::map<std::pair<int, int>, StructureTerms> cache;
    auto key = std::make_pair(t, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    StructureTerms val;
    if (r == 0)
        val = {{PbwMono{0, 0, t}, RatQ(1)}};
    else
        val = right_mul_E(f_times_e(t, r - 1));
    return cache.emplace(key, std::move(val)).first->second;
}

} // namespace detail

/// Element of U_q(sl2), or of U (x) F[a^{+-1}, b^{+-1}, c^{+-1}] when C is
/// LaurentABC, in PBW normal form.
///
/// Terms are stored on the rescaled basis E^r k^s F^t with
/// E = (q - q^-1) e and F = (q - q^-1) f. Since FE - EF = -(q - q^-1)(k - k^-1)
/// every structure constant in that basis lies in Z[q, q^-1]. The rescaling is
/// diagonal, so grading, rank and equality are the same in either basis;
/// coeff_ef() converts to the e/f basis.
template <class C>
class Pbw {
public:
    using Coeff = C;
    using Terms = std::map<PbwMono, C>;

    Pbw() = default;
    explicit Pbw(const C& scalar) { add_term({0, 0, 0}, scalar); }

    static Pbw monomial(const PbwMono& m, const C& c = C(1)) {
        Pbw r;
        r.add_term(m, c);
        return r;
    }
    /// c * e^r k^s f^t with c given relative to the e/f basis.
    static Pbw from_ef(const PbwMono& m, const C& c) {
        return monomial(m, scale(c, ef_scale(m).inv()));
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient on E^r k^s F^t.
    C coeff(const PbwMono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C() : it->second;
    }
    /// Coefficient on e^r k^s f^t.
    C coeff_ef(const PbwMono& m) const { return scale(coeff(m), ef_scale(m)); }

    /// (q - q^-1)^(r+t): the factor between the two bases.
    static RatQ ef_scale(const PbwMono& m) {
        RatQ r(1);
        for (int i = 0; i < m.rank(); ++i) r *= q_minus_qinv();
        return r;
    }

    void add_term(const PbwMono& m, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    Pbw operator-() const {
        Pbw r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Pbw& operator+=(const Pbw& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Pbw& operator-=(const Pbw& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Pbw operator+(Pbw u, const Pbw& v) { return u += v; }
    friend Pbw operator-(Pbw u, const Pbw& v) { return u -= v; }

    Pbw scaled(const RatQ& s) const {
        if (s.is_zero()) return {};
        Pbw r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, scale(c, s));
        return r;
    }
    /// Multiply every coefficient by a central coefficient-ring element.
    Pbw times(const C& s) const {
        Pbw r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    /// (E^r k^s F^t)(E^r' k^s' F^t') = E^r k^s (F^t E^r') k^s' F^t', with
    /// k^s E^a = q^{2sa} E^a k^s and F^c k^s' = q^{2cs'} k^s' F^c.
    friend Pbw operator*(const Pbw& u, const Pbw& v) {
        Pbw r;
        for (const auto& [m1, c1] : u.terms_) {
            for (const auto& [m2, c2] : v.terms_) {
                const C prod = c1 * c2;
                if (m1.t == 0 || m2.r == 0) {
                    r.add_term({m1.r + m2.r, m1.s + m2.s, m1.t + m2.t},
                               scale(prod, RatQ::q_pow(2 * m1.s * m2.r + 2 * m1.t * m2.s)));
                    continue;
                }
                for (const auto& [m, g] : detail::f_times_e(m1.t, m2.r)) {
                    const RatQ factor = g.mul_q_pow(2 * m1.s * m.r + 2 * m.t * m2.s);
                    r.add_term({m1.r + m.r, m1.s + m.s + m2.s, m.t + m2.t}, scale(prod, factor));
                }
            }
        }
        return r;
    }
    Pbw& operator*=(const Pbw& o) { return *this = *this * o; }

    Pbw pow(int n) const {
        if (n < 0) return inverse_monomial().pow(-n);
        Pbw r(C(1));
        Pbw base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            n >>= 1;
            if (n > 0) base *= base;
        }
        return r;
    }

    /// Inverse of c * k^s with c invertible in the coefficient ring.
    Pbw inverse_monomial() const {
        if (terms_.size() != 1) throw DivisionByZero();
        const auto& [m, c] = *terms_.begin();
        if (m.r != 0 || m.t != 0) throw DivisionByZero();
        return monomial({0, -m.s, 0}, c.inv());
    }

    friend bool operator==(const Pbw& u, const Pbw& v) { return u.terms_ == v.terms_; }
    friend bool operator!=(const Pbw& u, const Pbw& v) { return !(u == v); }

private:
    static bool is_zero_coeff(const C& c) { return c.is_zero(); }

    Terms terms_;
};

using UElement = Pbw<RatQ>;


/// Homogeneous component of degree n (terms with r - t = n).
template <class C>
Pbw<C> grade_project(const Pbw<C>& u, int n) {
    Pbw<C> r;
    for (const auto& [m, c] : u.terms())
        if (m.degree() == n) r.add_term(m, c);
    return r;
}

/// Degrees that occur in u, ascending.
template <class C>
std::vector<int> degrees(const Pbw<C>& u) {
    std::vector<int> ds;
    for (const auto& [m, c] : u.terms()) ds.push_back(m.degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

/// Embed an element of U with scalar coefficients into a larger coefficient ring.
template <class C>
Pbw<C> lift(const UElement& u, const C& c = C(1)) {
    Pbw<C> r;
    for (const auto& [m, g] : u.terms()) r.add_term(m, scale(c, g));
    return r;
}

namespace u {

inline UElement one() { return UElement(RatQ(1)); }
inline UElement scalar(const RatQ& c) { return UElement(c); }
inline UElement k(int n = 1) { return UElement::monomial({0, n, 0}); }
inline UElement E() { return UElement::monomial({1, 0, 0}); }
inline UElement F() { return UElement::monomial({0, 0, 1}); }
inline UElement e() { return UElement::from_ef({1, 0, 0}, RatQ(1)); }
inline UElement f() { return UElement::from_ef({0, 0, 1}, RatQ(1)); }

/// x = k^-1 - q^-1 (q - q^-1) e k^-1
inline UElement x() { return k(-1) - UElement::monomial({1, -1, 0}, RatQ::q_pow(-1)); }
inline UElement y() { return k(1); }
inline UElement y_inv() { return k(-1); }
/// z = k^-1 + (q - q^-1) f
inline UElement z() { return k(-1) + F(); }

/// nu_x = q(1 - yz)
inline UElement nu_x() { return (one() - y() * z()).scaled(RatQ::q()); }
/// nu_y = q(1 - zx)
inline UElement nu_y() { return (one() - z() * x()).scaled(RatQ::q()); }
/// nu_z = q(1 - xy)
inline UElement nu_z() { return (one() - x() * y()).scaled(RatQ::q()); }

/// Lambda = (q - q^-1)^2 ef + q^-1 k + q k^-1
inline UElement Lambda() {
    return UElement::monomial({1, 0, 1}) + k(1).scaled(RatQ::q_pow(-1)) + k(-1).scaled(RatQ::q());
}
/// Phi = ef + (q^-1 k + q k^-1)/(q - q^-1)^2
inline UElement Phi() { return Lambda().scaled((q_minus_qinv() * q_minus_qinv()).inv()); }

} // namespace u

/// Named element of U by its surface name: x, y, y_inv, z, nu_x, nu_y, nu_z, Phi, Lambda.
inline UElement u_named(std::string_view name) {
    if (name == "x") return u::x();
    if (name == "y") return u::y();
    if (name == "y_inv") return u::y_inv();
    if (name == "z") return u::z();
    if (name == "nu_x") return u::nu_x();
    if (name == "nu_y") return u::nu_y();
    if (name == "nu_z") return u::nu_z();
    if (name == "Phi") return u::Phi();
    if (name == "Lambda") return u::Lambda();
    throw AlgebraError("unknown element of U: " + std::string(name));
}

} // namespace askey
