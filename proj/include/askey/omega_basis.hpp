#pragma once

#include "askey/delta.hpp"
#include "askey/error.hpp"
#include "askey/linalg.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

namespace askey {

/// A^i B^j C^k Omega^l alpha^r beta^s gamma^t with ijk = 0.
struct OmegaMono {
    int i = 0, j = 0, k = 0, l = 0;
    int r = 0, s = 0, t = 0;
    friend auto operator<=>(const OmegaMono&, const OmegaMono&) = default;
};

using OmegaExpansion = std::map<OmegaMono, RatQ>;

/// Filtration weight: A, B, C weigh 1, Omega weighs 3, alpha, beta, gamma weigh 2.
inline int omega_weight(const OmegaMono& m) { return m.i + m.j + m.k + 3 * m.l + 2 * (m.r + m.s + m.t); }
inline int delta_weight(const DeltaMono& m) { return m.i + m.j + m.k + 2 * (m.r + m.s + m.t); }
inline int delta_weight(const DeltaElement& d) {
    int w = 0;
    for (const auto& [m, c] : d.terms()) w = std::max(w, delta_weight(m));
    return w;
}

/// Expansion of one Omega-basis monomial in the primary basis.
inline const DeltaElement& omega_monomial(const OmegaMono& m) {
    thread_local std::map<OmegaMono, DeltaElement> cache;
    thread_local std::vector<DeltaElement> omega_pows;
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    if (omega_pows.empty()) omega_pows.push_back(delta::one());
    while (static_cast<int>(omega_pows.size()) <= m.l) omega_pows.push_back(omega_pows.back() * delta::Omega());
    DeltaElement v = DeltaElement::monomial({m.i, m.j, m.k}) * omega_pows[static_cast<std::size_t>(m.l)] *
                     DeltaElement::monomial({0, 0, 0, m.r, m.s, m.t});
    return cache.emplace(m, std::move(v)).first->second;
}

inline DeltaElement from_omega_basis(const OmegaExpansion& e) {
    DeltaElement out;
    for (const auto& [m, c] : e) out += omega_monomial(m).scaled(c);
    return out;
}

/// Omega-basis monomials of weight at most bound.
inline std::vector<OmegaMono> omega_basis_upto(int bound) {
    std::vector<OmegaMono> out;
    for (int l = 0; 3 * l <= bound; ++l)
        for (int i = 0; 3 * l + i <= bound; ++i)
            for (int j = 0; 3 * l + i + j <= bound; ++j)
                for (int k = 0; 3 * l + i + j + k <= bound; ++k) {
                    if (i > 0 && j > 0 && k > 0) continue;
                    const int rest = bound - (3 * l + i + j + k);
                    for (int r = 0; 2 * r <= rest; ++r)
                        for (int s = 0; 2 * (r + s) <= rest; ++s)
                            for (int t = 0; 2 * (r + s + t) <= rest; ++t) out.push_back({i, j, k, l, r, s, t});
                }
    return out;
}

/// Expansion of d in the Omega basis by an exact linear solve over all
/// Omega-basis monomials of weight <= bound. Throws BoundTooSmall when d is
/// not in their span.
inline OmegaExpansion to_omega_basis(const DeltaElement& d, int bound) {
    if (d.is_zero()) return {};
    const std::vector<OmegaMono> basis = omega_basis_upto(bound);
    std::map<DeltaMono, std::size_t> row;
    for (const auto& m : basis)
        for (const auto& [pm, c] : omega_monomial(m).terms()) row.try_emplace(pm, 0);
    for (const auto& [pm, c] : d.terms()) row.try_emplace(pm, 0);
    std::size_t idx = 0;
    for (auto& [pm, n] : row) n = idx++;

    Matrix<RatQ> a(row.size(), std::vector<RatQ>(basis.size()));
    std::vector<RatQ> b(row.size());
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [pm, c] : omega_monomial(basis[col]).terms()) a[row.at(pm)][col] = c;
    for (const auto& [pm, c] : d.terms()) b[row.at(pm)] = c;

    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol) throw BoundTooSmall(bound);
    OmegaExpansion out;
    for (std::size_t col = 0; col < basis.size(); ++col)
        if (!(*sol)[col].is_zero()) out.emplace(basis[col], (*sol)[col]);
    return out;
}

/// Iterative deepening from the weight of d up to max_bound.
inline OmegaExpansion to_omega_basis(const DeltaElement& d) {
    const int start = delta_weight(d);
    const int max_bound = start + 6;
    for (int bound = start;; ++bound) {
        try {
            return to_omega_basis(d, bound);
        } catch (const BoundTooSmall&) {
            if (bound >= max_bound) throw;
        }
    }
}

} // namespace askey
