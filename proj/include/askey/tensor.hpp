#pragma once

#include "askey/equitable.hpp"
#include "askey/error.hpp"
#include "askey/laurent.hpp"
#include "askey/uqsl2.hpp"

#include <map>
#include <string>
#include <string_view>

namespace askey {

/// Element of U (x) F[a^{+-1}, b^{+-1}, c^{+-1}]: PBW monomials with Laurent
/// coefficients. The Laurent factors are central.
using TensorElement = Pbw<LaurentABC>;

/// u (x) l
inline TensorElement tensor(const UElement& u, const LaurentABC& l = LaurentABC(1)) { return lift(u, l); }
/// 1 (x) l
inline TensorElement tensor_scalar(const LaurentABC& l) { return TensorElement(l); }

namespace t {

inline LaurentABC abc(int ea, int eb, int ec) { return LaurentABC::monomial({ea, eb, ec}); }

/// A = x (x) a + y (x) a^-1 + nu_z (x) b c^-1
inline TensorElement Anat() {
    return tensor(u::x(), abc(1, 0, 0)) + tensor(u::y(), abc(-1, 0, 0)) + tensor(u::nu_z(), abc(0, 1, -1));
}
/// B = y (x) b + z (x) b^-1 + nu_x (x) c a^-1
inline TensorElement Bnat() {
    return tensor(u::y(), abc(0, 1, 0)) + tensor(u::z(), abc(0, -1, 0)) + tensor(u::nu_x(), abc(-1, 0, 1));
}
/// C = z (x) c + x (x) c^-1 + nu_y (x) a b^-1
inline TensorElement Cnat() {
    return tensor(u::z(), abc(0, 0, 1)) + tensor(u::x(), abc(0, 0, -1)) + tensor(u::nu_y(), abc(1, -1, 0));
}

inline LaurentABC var_plus_inv(int var) {
    Exp3 e{0, 0, 0};
    e[static_cast<std::size_t>(var)] = 1;
    return LaurentABC::monomial(e) + LaurentABC::monomial(-e);
}

/// Lambda (x) (v1 + v1^-1) + 1 (x) (v2 + v2^-1)(v3 + v3^-1)
inline TensorElement central_image(int v1, int v2, int v3) {
    return tensor(u::Lambda(), var_plus_inv(v1)) + tensor_scalar(var_plus_inv(v2) * var_plus_inv(v3));
}
inline TensorElement alphanat() { return central_image(0, 1, 2); }
inline TensorElement betanat() { return central_image(1, 2, 0); }
inline TensorElement gammanat() { return central_image(2, 0, 1); }

/// The closed form of the image of the Casimir element of Delta:
/// (q+q^-1)^2 - (a+a^-1)^2 - (b+b^-1)^2 - (c+c^-1)^2
///   - Lambda (x) (a+a^-1)(b+b^-1)(c+c^-1) - Lambda^2 (x) 1
inline TensorElement Omeganat() {
    const LaurentABC sa = var_plus_inv(0), sb = var_plus_inv(1), sc = var_plus_inv(2);
    const RatQ qq = RatQ::q() + RatQ::q_pow(-1);
    const UElement lam = u::Lambda();
    return tensor_scalar(LaurentABC(qq * qq) - sa * sa - sb * sb - sc * sc) - tensor(lam, sa * sb * sc) -
           tensor(lam * lam);
}

/// R = nu_z (x) b c^-1 - q^-1 nu_z y^-1 (x) a
inline TensorElement R() {
    return tensor(u::nu_z(), abc(0, 1, -1)) - tensor(u::nu_z() * u::y_inv(), abc(1, 0, 0)).scaled(RatQ::q_pow(-1));
}
/// L = nu_x (x) a^-1 c - q^-1 y^-1 nu_x (x) b^-1
inline TensorElement L() {
    return tensor(u::nu_x(), abc(-1, 0, 1)) - tensor(u::y_inv() * u::nu_x(), abc(0, -1, 0)).scaled(RatQ::q_pow(-1));
}
/// theta = y^-1 (x) a
inline TensorElement theta() { return tensor(u::y_inv(), abc(1, 0, 0)); }
/// vartheta = y^-1 (x) b^-1
inline TensorElement vartheta() { return tensor(u::y_inv(), abc(0, -1, 0)); }
inline TensorElement Lambda1() { return tensor(u::Lambda()); }

} // namespace t

inline TensorElement t_named(std::string_view name) {
    static const std::map<std::string_view, TensorElement (*)()> table = {
        {"Anat", &t::Anat},       {"Bnat", &t::Bnat},       {"Cnat", &t::Cnat},
        {"alphanat", &t::alphanat}, {"betanat", &t::betanat}, {"gammanat", &t::gammanat},
        {"Omeganat", &t::Omeganat}, {"R", &t::R},           {"L", &t::L},
        {"theta", &t::theta},     {"vartheta", &t::vartheta}, {"Lambda1", &t::Lambda1},
    };
    auto it = table.find(name);
    if (it == table.end()) throw AlgebraError("unknown tensor element: " + std::string(name));
    return it->second();
}

inline TensorElement t_grade_project(const TensorElement& u, int n) { return grade_project(u, n); }

/// The involution sigma~: e (x) 1 -> f (x) a^-1 b^-1 c, f (x) 1 -> e (x) a b c^-1,
/// k (x) 1 -> k^-1 (x) 1, a <-> b, c fixed.
///
/// On the rescaled basis E^r k^s F^t (x) m the image is
/// F^r k^-s E^t (x) (a^-1 b^-1 c)^{r-t} sigma(m), and F^r k^-s = q^{-2rs} k^-s F^r.
inline TensorElement sigma_tilde(const TensorElement& v) {
    TensorElement out;
    for (const auto& [m, l] : v.terms()) {
        const LaurentABC lm = l.renamed({1, 0, 2}).shifted({-(m.r - m.t), -(m.r - m.t), m.r - m.t});
        const int s = -m.s;
        for (const auto& [pm, g] : detail::f_times_e(m.r, m.t)) {
            // q^{-2rs} k^{-s} E^a k^b F^c = q^{-2rs} q^{2(-s)a} E^a k^{b-s} F^c
            const RatQ factor = g.mul_q_pow(2 * m.r * s + 2 * s * pm.r);
            out.add_term({pm.r, pm.s + s, pm.t}, lm.scaled(factor));
        }
    }
    return out;
}

/// PBW form of y^h z^i x^j: the image of x^h y^i z^j under the cyclic
/// automorphism x -> y -> z -> x of U'.
inline const UElement& rotated_equitable_monomial(const EqMono& m) {
    thread_local std::map<EqMono, UElement> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    UElement v = u::k(m.h) * detail::z_pow(m.i) * detail::x_pow(m.j);
    return cache.emplace(m, std::move(v)).first->second;
}

/// The order-3 automorphism rho~ of U' (x) F[a^{+-1}, b^{+-1}, c^{+-1}]:
/// x -> y -> z -> x and a -> b -> c -> a. Throws NotInUPrime if some
/// equitable monomial of the input carries a negative power of y.
inline TensorElement rho_tilde(const TensorElement& v) {
    TensorElement out;
    for (const auto& [m, l] : to_equitable(v)) {
        if (m.i < 0)
            throw NotInUPrime("equitable monomial x^" + std::to_string(m.h) + " y^" + std::to_string(m.i) + " z^" +
                              std::to_string(m.j));
        const LaurentABC lm = l.renamed({1, 2, 0});
        for (const auto& [pm, g] : rotated_equitable_monomial(m).terms()) out.add_term(pm, lm.scaled(g));
    }
    return out;
}

} // namespace askey
