#pragma once

#include "askey/int_poly.hpp"
#include "askey/ratq.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace askey {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline bool entry_is_zero(const mpz_class& v) { return v == 0; }
inline bool entry_is_zero(const mpq_class& v) { return v == 0; }
inline bool entry_is_zero(const IntPoly& v) { return v.is_zero(); }
inline bool entry_is_zero(const RatQ& v) { return v.is_zero(); }

inline mpz_class exact_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) { return divexact(a, b); }

} // namespace detail

/// Rank over the fraction field of an integral domain (Z or Z[q]) by
/// fraction-free Bareiss elimination. Rows and columns are arbitrary.
template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    T prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && detail::entry_is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                T v = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                m[r][c] = detail::exact_quotient(v, prev);
            }
            m[r][col] = T(0);
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Clears denominators of a row of Q(q) entries, returning the numerators
/// over a common denominator. Row rank is unchanged.
inline std::vector<IntPoly> clear_denominators(const std::vector<RatQ>& row) {
    IntPoly l(1);
    for (const auto& v : row) {
        if (v.is_zero()) continue;
        const IntPoly g = gcd(l, v.den());
        l = divexact(l, g) * v.den();
    }
    std::vector<IntPoly> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.is_zero() ? IntPoly() : v.num() * divexact(l, v.den()));
    return out;
}

/// Rank over Q(q).
inline std::size_t rank_over_ratq(const Matrix<RatQ>& m) {
    Matrix<IntPoly> p;
    p.reserve(m.size());
    for (const auto& row : m) p.push_back(clear_denominators(row));
    return bareiss_rank(std::move(p));
}

/// Rank over Q.
inline std::size_t rank_over_q(const Matrix<mpq_class>& m) {
    Matrix<mpz_class> z;
    z.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<mpz_class> zr;
        zr.reserve(row.size());
        for (const auto& v : row) zr.push_back(v.get_num() * detail::exact_quotient(l, v.get_den()));
        z.push_back(std::move(zr));
    }
    return bareiss_rank(std::move(z));
}

/// Solves a x = b over a field (RatQ or mpq_class). a is rows x cols; returns
/// one solution (free variables set to zero) or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(Matrix<F> a, std::vector<F> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && detail::entry_is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        const F inv = F(1) / a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        b[rank] = b[rank] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || detail::entry_is_zero(a[r][col])) continue;
            const F factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!detail::entry_is_zero(a[rank][c])) a[r][c] = a[r][c] - factor * a[rank][c];
            b[r] = b[r] - factor * b[rank];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!detail::entry_is_zero(b[r])) return std::nullopt;
    std::vector<F> x(cols, F(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = b[r];
    return x;
}

} // namespace askey
