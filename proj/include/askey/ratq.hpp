#pragma once

#include "askey/error.hpp"
#include "askey/int_poly.hpp"

#include <gmpxx.h>

#include <utility>

namespace askey {

/// Element of the field Q(q), kept in lowest terms: numerator and denominator
/// coprime in Z[q], denominator with positive leading coefficient, zero as 0/1.
/// Two values are equal iff their representations are identical.
///
/// Elements of Z[q, q^-1] (denominator a bare power of q) take a fast path that
/// never calls the polynomial gcd; almost all structure constants of the
/// algebras in this library live there.
class RatQ {
public:
    RatQ() : den_(1) {}
    RatQ(long c) : num_(c), den_(1) {} // NOLINT
    RatQ(const mpz_class& c) : num_(c), den_(1) {} // NOLINT
    RatQ(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {} // NOLINT
    RatQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        canonicalize();
    }

    /// q^n for any integer n.
    static RatQ q_pow(int n) {
        RatQ r;
        if (n >= 0) {
            r.num_ = IntPoly::q_pow(n);
        } else {
            r.num_ = IntPoly(1);
            r.den_ = IntPoly::q_pow(-n);
        }
        return r;
    }
    static RatQ q() { return q_pow(1); }

    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True iff the value lies in Z[q, q^-1].
    bool is_laurent() const { return den_.is_monic_monomial(); }
    /// True iff the value is a rational constant (no q dependence).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class constant_value() const {
        mpq_class r(num_.coeff(0), den_.coeff(0));
        r.canonicalize();
        return r;
    }

    RatQ operator-() const {
        RatQ r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatQ operator+(const RatQ& a, const RatQ& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_laurent() && b.is_laurent()) {
            const int ma = a.den_.degree();
            const int mb = b.den_.degree();
            const int m = std::max(ma, mb);
            RatQ r;
            r.num_ = a.num_.shifted(m - ma) + b.num_.shifted(m - mb);
            r.den_ = IntPoly::q_pow(m);
            r.strip_q();
            return r;
        }
        if (a.den_ == b.den_) return RatQ(a.num_ + b.num_, a.den_);
        const IntPoly g = gcd(a.den_, b.den_);
        const IntPoly ad = divexact(a.den_, g);
        const IntPoly bd = divexact(b.den_, g);
        return RatQ(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    friend RatQ operator-(const RatQ& a, const RatQ& b) { return a + (-b); }

    friend RatQ operator*(const RatQ& a, const RatQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_laurent() && b.is_laurent()) {
            RatQ r;
            r.num_ = a.num_ * b.num_;
            r.den_ = IntPoly::q_pow(a.den_.degree() + b.den_.degree());
            r.strip_q();
            return r;
        }
        // cross-cancel so the product is already reduced
        const IntPoly g1 = gcd(a.num_, b.den_);
        const IntPoly g2 = gcd(b.num_, a.den_);
        RatQ r;
        r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
        r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
        r.fix_sign();
        return r;
    }

    RatQ inv() const {
        if (is_zero()) throw DivisionByZero();
        RatQ r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_sign();
        return r;
    }
    friend RatQ operator/(const RatQ& a, const RatQ& b) { return a * b.inv(); }

    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }

    /// Multiply by q^n without a gcd.
    RatQ mul_q_pow(int n) const {
        if (n == 0 || is_zero()) return *this;
        RatQ r = *this;
        if (n > 0)
            r.num_ = r.num_.shifted(n);
        else
            r.den_ = r.den_.shifted(-n);
        r.strip_q();
        return r;
    }

    /// Evaluate at a rational q. Throws PoleAtSpecialization if the
    /// denominator vanishes there.
    mpq_class eval(const mpq_class& qv) const {
        const mpq_class d = den_.eval(qv);
        if (d == 0) throw PoleAtSpecialization("denominator vanishes at q = " + qv.get_str());
        mpq_class r = num_.eval(qv) / d;
        r.canonicalize();
        return r;
    }

    friend bool operator==(const RatQ& a, const RatQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        const IntPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        fix_sign();
    }
    void fix_sign() {
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        if (den_.lc() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
    /// Cancel the common power of q; valid because num and den are otherwise coprime.
    void strip_q() {
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        const int v = std::min(num_.valuation(), den_.valuation());
        if (v > 0) {
            num_ = num_.shifted(-v);
            den_ = den_.shifted(-v);
        }
    }

    IntPoly num_;
    IntPoly den_;
};

/// q - q^-1, the ubiquitous normalizing factor.
inline const RatQ& q_minus_qinv() {
    static const RatQ v = RatQ::q() - RatQ::q_pow(-1);
    return v;
}

/// [n]_q = (q^n - q^-n)/(q - q^-1).
inline RatQ q_int(int n) {
    return (RatQ::q_pow(n) - RatQ::q_pow(-n)) / q_minus_qinv();
}

} // namespace askey
