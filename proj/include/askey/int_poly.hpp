#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace askey {

/// Dense univariate polynomial in q with arbitrary precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i; the vector never has
/// a trailing zero, so the zero polynomial is the empty vector.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c) { // NOLINT: implicit from integer constants is convenient
        if (c != 0) c_.emplace_back(c);
    }
    IntPoly(const mpz_class& c) { // NOLINT
        if (c != 0) c_.push_back(c);
    }
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(const mpz_class& c, int deg) {
        assert(deg >= 0);
        IntPoly p;
        if (c != 0) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
            p.c_.back() = c;
        }
        return p;
    }
    static IntPoly q_pow(int deg) { return monomial(1, deg); }

    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lc() const {
        assert(!is_zero());
        return c_.back();
    }
    mpz_class coeff(int i) const {
        if (i < 0 || i > degree()) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Lowest power of q with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0;
    }
    /// True for c*q^m.
    bool is_monomial() const { return !is_zero() && valuation() == degree(); }
    /// True for exactly q^m.
    bool is_monic_monomial() const { return is_monomial() && lc() == 1; }

    /// Multiply by q^n; for n < 0 the polynomial must be divisible by q^-n.
    IntPoly shifted(int n) const {
        if (is_zero() || n == 0) return *this;
        IntPoly r;
        if (n > 0) {
            r.c_.assign(static_cast<std::size_t>(n), mpz_class(0));
            r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        } else {
            assert(valuation() >= -n);
            r.c_.assign(c_.begin() + (-n), c_.end());
        }
        return r;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
        r.trim();
        return r;
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly scaled(const mpz_class& s) const {
        if (s == 0) return {};
        IntPoly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    /// Divide every coefficient by s, which must divide all of them.
    IntPoly divexact_scalar(const mpz_class& s) const {
        IntPoly r = *this;
        for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
        return r;
    }

    /// Exact quotient a / b; b must divide a in Z[q].
    friend IntPoly divexact(const IntPoly& a, const IntPoly& b) {
        assert(!b.is_zero());
        if (a.is_zero()) return {};
        if (b.c_.size() == 1) return a.divexact_scalar(b.c_[0]);
        std::vector<mpz_class> rem = a.c_;
        const int db = b.degree();
        const int dq = a.degree() - db;
        assert(dq >= 0);
        std::vector<mpz_class> quo(static_cast<std::size_t>(dq) + 1, mpz_class(0));
        for (int i = dq; i >= 0; --i) {
            mpz_class& top = rem[static_cast<std::size_t>(i + db)];
            if (top == 0) continue;
            mpz_class qc;
            mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
            for (int j = 0; j <= db; ++j)
                mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qc.get_mpz_t(),
                           b.c_[static_cast<std::size_t>(j)].get_mpz_t());
            quo[static_cast<std::size_t>(i)] = std::move(qc);
        }
        assert(std::all_of(rem.begin(), rem.end(), [](const mpz_class& x) { return x == 0; }));
        return IntPoly(std::move(quo));
    }

    /// Sparse pseudo-remainder: some power of lc(b) times a, reduced modulo b.
    friend IntPoly prem(IntPoly a, const IntPoly& b) {
        assert(!b.is_zero());
        const int db = b.degree();
        while (!a.is_zero() && a.degree() >= db) {
            const int shift = a.degree() - db;
            const mpz_class la = a.lc();
            a = a.scaled(b.lc()) - b.shifted(shift).scaled(la);
        }
        return a;
    }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }
    /// Primitive part with positive leading coefficient.
    IntPoly primitive() const {
        if (is_zero()) return {};
        mpz_class g = content();
        if (lc() < 0) g = -g;
        return g == 1 ? *this : divexact_scalar(g);
    }

    /// Greatest common divisor in Z[q], normalized to a positive leading coefficient.
    friend IntPoly gcd(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.normalized_sign();
        if (b.is_zero()) return a.normalized_sign();
        mpz_class cg;
        mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        const int v = std::min(a.valuation(), b.valuation());
        IntPoly u = a.shifted(-a.valuation()).primitive();
        IntPoly w = b.shifted(-b.valuation()).primitive();
        if (u.degree() < w.degree()) std::swap(u, w);
        while (!w.is_zero() && w.degree() > 0) {
            IntPoly r = prem(u, w);
            u = std::move(w);
            w = r.is_zero() ? IntPoly{} : r.primitive();
        }
        // w nonzero constant: the q-free parts are coprime
        IntPoly g = w.is_zero() ? u : IntPoly(1);
        return g.scaled(cg).shifted(v);
    }

    /// Horner evaluation.
    mpq_class eval(const mpq_class& x) const {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
        return r;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    IntPoly normalized_sign() const { return lc() < 0 ? -*this : *this; }

    std::vector<mpz_class> c_;
};

} // namespace askey
