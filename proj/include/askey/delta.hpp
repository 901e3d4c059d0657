#pragma once

#include "askey/error.hpp"
#include "askey/ratq.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace askey {

/// Basis monomial A^i B^j C^k alpha^r beta^s gamma^t.
struct DeltaMono {
    int i = 0, j = 0, k = 0;
    int r = 0, s = 0, t = 0;

    int abc_degree() const noexcept { return i + j + k; }
    int central_degree() const noexcept { return r + s + t; }
    friend auto operator<=>(const DeltaMono&, const DeltaMono&) = default;
};

/// Element of the universal Askey-Wilson algebra Delta in the basis
/// A^i B^j C^k alpha^r beta^s gamma^t.
class DeltaElement {
public:
    using Terms = std::map<DeltaMono, RatQ>;

    DeltaElement() = default;
    explicit DeltaElement(const RatQ& c) { add_term({}, c); }
    static DeltaElement monomial(const DeltaMono& m, const RatQ& c = RatQ(1)) {
        DeltaElement d;
        d.add_term(m, c);
        return d;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    RatQ coeff(const DeltaMono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RatQ() : it->second;
    }

    void add_term(const DeltaMono& m, const RatQ& c) {
        if (c.is_zero()) return;
        auto [it, ins] = terms_.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DeltaElement operator-() const {
        DeltaElement r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    DeltaElement& operator+=(const DeltaElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    DeltaElement& operator-=(const DeltaElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend DeltaElement operator+(DeltaElement u, const DeltaElement& v) { return u += v; }
    friend DeltaElement operator-(DeltaElement u, const DeltaElement& v) { return u -= v; }

    DeltaElement scaled(const RatQ& s) const {
        DeltaElement r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
        return r;
    }

    friend DeltaElement operator*(const DeltaElement& u, const DeltaElement& v);
    DeltaElement& operator*=(const DeltaElement& o);
    DeltaElement pow(int n) const;

    friend bool operator==(const DeltaElement& u, const DeltaElement& v) { return u.terms_ == v.terms_; }
    friend bool operator!=(const DeltaElement& u, const DeltaElement& v) { return !(u == v); }

private:
    Terms terms_;
};

namespace detail {

enum class DeltaLetter { A, B, C };

using AbcKey = std::array<int, 3>;

inline DeltaMono with_central(const DeltaMono& m, int dr, int ds, int dt) {
    return {m.i, m.j, m.k, m.r + dr, m.s + ds, m.t + dt};
}

inline DeltaElement right_mul_letter(const DeltaElement& u, DeltaLetter x);

/// A^i B^j C^k times one generator, in normal form. The descending pairs are
/// rewritten with
///   BA = q^2 AB - q(q - q^-1) gamma + q(q^2 - q^-2) C
///   CB = q^2 BC - q(q - q^-1) alpha + q(q^2 - q^-2) A
///   CA = q^-2 AC + q^-1(q - q^-1) beta - q^-1(q^2 - q^-2) B
/// each of which is a rearrangement of one defining relation.
inline const DeltaElement& abc_times_letter(const AbcKey& m, DeltaLetter x) {
    thread_local std::map<std::pair<AbcKey, int>, DeltaElement> cache;
    auto key = std::make_pair(m, static_cast<int>(x));
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    const RatQ q = RatQ::q();
    const RatQ qi = RatQ::q_pow(-1);
    const RatQ d1 = q - qi;                            // q - q^-1
    const RatQ d2 = RatQ::q_pow(2) - RatQ::q_pow(-2);  // q^2 - q^-2
    const auto [i, j, k] = m;
    DeltaElement out;
    switch (x) {
    case DeltaLetter::C:
        out = DeltaElement::monomial({i, j, k + 1});
        break;
    case DeltaLetter::B:
        if (k == 0) {
            out = DeltaElement::monomial({i, j + 1, 0});
        } else {
            const DeltaElement prev = DeltaElement::monomial({i, j, k - 1});
            out = right_mul_letter(right_mul_letter(prev, DeltaLetter::B), DeltaLetter::C).scaled(RatQ::q_pow(2));
            out.add_term({i, j, k - 1, 1, 0, 0}, -(q * d1));
            out += right_mul_letter(prev, DeltaLetter::A).scaled(q * d2);
        }
        break;
    case DeltaLetter::A:
        if (j == 0 && k == 0) {
            out = DeltaElement::monomial({i + 1, 0, 0});
        } else if (k > 0) {
            const DeltaElement prev = DeltaElement::monomial({i, j, k - 1});
            out = right_mul_letter(right_mul_letter(prev, DeltaLetter::A), DeltaLetter::C).scaled(RatQ::q_pow(-2));
            out.add_term({i, j, k - 1, 0, 1, 0}, qi * d1);
            out -= right_mul_letter(prev, DeltaLetter::B).scaled(qi * d2);
        } else {
            const DeltaElement prev = DeltaElement::monomial({i, j - 1, 0});
            out = right_mul_letter(right_mul_letter(prev, DeltaLetter::A), DeltaLetter::B).scaled(RatQ::q_pow(2));
            out.add_term({i, j - 1, 0, 0, 0, 1}, -(q * d1));
            out += right_mul_letter(prev, DeltaLetter::C).scaled(q * d2);
        }
        break;
    }
    return cache.emplace(key, std::move(out)).first->second;
}

inline DeltaElement right_mul_letter(const DeltaElement& u, DeltaLetter x) {
    DeltaElement out;
    for (const auto& [m, c] : u.terms()) {
        for (const auto& [pm, g] : abc_times_letter({m.i, m.j, m.k}, x).terms())
            out.add_term(with_central(pm, m.r, m.s, m.t), c * g);
    }
    return out;
}

/// Normal form of A^i B^j C^k A^i' B^j' C^k'.
inline const DeltaElement& abc_product(const AbcKey& m1, const AbcKey& m2) {
    thread_local std::map<std::pair<AbcKey, AbcKey>, DeltaElement> cache;
    auto key = std::make_pair(m1, m2);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    DeltaElement out;
    if (m2 == AbcKey{0, 0, 0}) {
        out = DeltaElement::monomial({m1[0], m1[1], m1[2]});
    } else {
        // peel the last letter of the second monomial
        AbcKey prefix = m2;
        DeltaLetter last;
        if (prefix[2] > 0) {
            --prefix[2];
            last = DeltaLetter::C;
        } else if (prefix[1] > 0) {
            --prefix[1];
            last = DeltaLetter::B;
        } else {
            --prefix[0];
            last = DeltaLetter::A;
        }
        out = right_mul_letter(abc_product(m1, prefix), last);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace detail

inline DeltaElement operator*(const DeltaElement& u, const DeltaElement& v) {
    DeltaElement out;
    for (const auto& [m1, c1] : u.terms_) {
        for (const auto& [m2, c2] : v.terms_) {
            const RatQ c = c1 * c2;
            for (const auto& [pm, g] : detail::abc_product({m1.i, m1.j, m1.k}, {m2.i, m2.j, m2.k}).terms())
                out.add_term(detail::with_central(pm, m1.r + m2.r, m1.s + m2.s, m1.t + m2.t), c * g);
        }
    }
    return out;
}

inline DeltaElement& DeltaElement::operator*=(const DeltaElement& o) { return *this = *this * o; }

inline DeltaElement DeltaElement::pow(int n) const {
    if (n < 0) throw DivisionByZero();
    DeltaElement r(RatQ(1));
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

namespace delta {

inline DeltaElement one() { return DeltaElement(RatQ(1)); }
inline DeltaElement A() { return DeltaElement::monomial({1, 0, 0}); }
inline DeltaElement B() { return DeltaElement::monomial({0, 1, 0}); }
inline DeltaElement C() { return DeltaElement::monomial({0, 0, 1}); }
inline DeltaElement alpha() { return DeltaElement::monomial({0, 0, 0, 1, 0, 0}); }
inline DeltaElement beta() { return DeltaElement::monomial({0, 0, 0, 0, 1, 0}); }
inline DeltaElement gamma() { return DeltaElement::monomial({0, 0, 0, 0, 0, 1}); }

/// Omega = qABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - q A alpha - q^-1 B beta - q C gamma
inline DeltaElement Omega() {
    const RatQ q = RatQ::q();
    return (A() * B() * C()).scaled(q) + (A() * A()).scaled(RatQ::q_pow(2)) + (B() * B()).scaled(RatQ::q_pow(-2)) +
           (C() * C()).scaled(RatQ::q_pow(2)) - (A() * alpha()).scaled(q) - (B() * beta()).scaled(RatQ::q_pow(-1)) -
           (C() * gamma()).scaled(q);
}

/// The three defining relations as elements that must vanish:
/// A + (qBC - q^-1 CB)/(q^2 - q^-2) - alpha/(q + q^-1), and cyclically.
inline std::array<DeltaElement, 3> relation_residuals() {
    const RatQ q = RatQ::q();
    const RatQ qi = RatQ::q_pow(-1);
    const RatQ d2inv = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
    const RatQ sinv = (q + qi).inv();
    auto rel = [&](const DeltaElement& X, const DeltaElement& Y, const DeltaElement& Z, const DeltaElement& c) {
        return X + (Y * Z).scaled(q * d2inv) - (Z * Y).scaled(qi * d2inv) - c.scaled(sinv);
    };
    return {rel(A(), B(), C(), alpha()), rel(B(), C(), A(), beta()), rel(C(), A(), B(), gamma())};
}

} // namespace delta

} // namespace askey
