#pragma once

#include "askey/error.hpp"
#include "askey/ratq.hpp"

#include <array>
#include <map>
#include <utility>

namespace askey {

/// Exponents of a^r b^s c^t.
using Exp3 = std::array<int, 3>;

inline Exp3 operator+(const Exp3& u, const Exp3& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
inline Exp3 operator-(const Exp3& u) { return {-u[0], -u[1], -u[2]}; }

/// Laurent polynomial in the commuting variables a, b, c with coefficients
/// in Q(q). Terms are ordered by (a, b, c) exponents; zero coefficients are
/// never stored.
class LaurentABC {
public:
    using Terms = std::map<Exp3, RatQ>;

    LaurentABC() = default;
    LaurentABC(const RatQ& c) { // NOLINT
        if (!c.is_zero()) terms_.emplace(Exp3{0, 0, 0}, c);
    }
    LaurentABC(long c) : LaurentABC(RatQ(c)) {} // NOLINT

    static LaurentABC monomial(const Exp3& e, const RatQ& c = RatQ(1)) {
        LaurentABC r;
        if (!c.is_zero()) r.terms_.emplace(e, c);
        return r;
    }
    static LaurentABC a(int n = 1) { return monomial({n, 0, 0}); }
    static LaurentABC b(int n = 1) { return monomial({0, n, 0}); }
    static LaurentABC c(int n = 1) { return monomial({0, 0, n}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    RatQ coeff(const Exp3& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? RatQ() : it->second;
    }
    /// True iff the polynomial has no a, b, c dependence.
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp3{0, 0, 0}); }
    RatQ scalar_value() const { return coeff({0, 0, 0}); }

    void add_term(const Exp3& e, const RatQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentABC operator-() const {
        LaurentABC r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    LaurentABC& operator+=(const LaurentABC& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentABC& operator-=(const LaurentABC& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentABC operator+(LaurentABC u, const LaurentABC& v) { return u += v; }
    friend LaurentABC operator-(LaurentABC u, const LaurentABC& v) { return u -= v; }

    friend LaurentABC operator*(const LaurentABC& u, const LaurentABC& v) {
        LaurentABC r;
        for (const auto& [e1, c1] : u.terms_)
            for (const auto& [e2, c2] : v.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentABC& operator*=(const LaurentABC& o) { return *this = *this * o; }

    /// Multiply by a scalar from Q(q).
    LaurentABC scaled(const RatQ& s) const {
        if (s.is_zero()) return {};
        if (s.is_one()) return *this;
        LaurentABC r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
        return r;
    }
    LaurentABC shifted(const Exp3& e) const {
        LaurentABC r;
        for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
        return r;
    }
    /// Inverse of a single-term polynomial.
    LaurentABC inv() const {
        if (terms_.size() != 1) throw DivisionByZero();
        const auto& [e, c] = *terms_.begin();
        return monomial(-e, c.inv());
    }

    /// Substitute variable i (0 = a, 1 = b, 2 = c) by variable target[i].
    LaurentABC renamed(const std::array<int, 3>& target) const {
        LaurentABC r;
        for (const auto& [e, c] : terms_) {
            Exp3 n{0, 0, 0};
            for (int i = 0; i < 3; ++i) n[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>(i)];
            r.terms_.emplace(n, c);
        }
        return r;
    }

    friend bool operator==(const LaurentABC& u, const LaurentABC& v) { return u.terms_ == v.terms_; }
    friend bool operator!=(const LaurentABC& u, const LaurentABC& v) { return !(u == v); }

private:
    Terms terms_;
};

inline RatQ scale(const RatQ& c, const RatQ& s) { return c * s; }
inline LaurentABC scale(const LaurentABC& c, const RatQ& s) { return c.scaled(s); }
inline bool is_zero(const RatQ& c) { return c.is_zero(); }
inline bool is_zero(const LaurentABC& c) { return c.is_zero(); }

} // namespace askey
