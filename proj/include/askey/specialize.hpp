#pragma once

#include "askey/error.hpp"
#include "askey/laurent.hpp"
#include "askey/ratq.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace askey {

/// Exact rational values for some of q, a, b, c. Unbound variables stay symbolic.
struct Bindings {
    std::optional<mpq_class> q, a, b, c;
};

/// Reject q = 0 and q^4 = 1 (q = +-1 over the rationals).
inline void check_q_value(const mpq_class& qv) {
    if (qv == 0) throw ForbiddenSpecialization("q = 0");
    const mpq_class q4 = qv * qv * qv * qv;
    if (q4 == 1) throw ForbiddenSpecialization("q^4 = 1 at q = " + qv.get_str());
}

inline mpq_class rational_pow(const mpq_class& x, int n) {
    mpq_class r = 1;
    mpq_class base = n >= 0 ? x : mpq_class(1) / x;
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) r *= base;
    return r;
}

/// Evaluate an element of Q(q) at a rational q.
inline mpq_class specialize(const RatQ& u, const mpq_class& qv) {
    check_q_value(qv);
    return u.eval(qv);
}

/// Substitute the bound variables of `bs`. The result is again a Laurent
/// polynomial; when everything is bound it is a constant and
/// `scalar_value().constant_value()` gives the exact rational.
inline LaurentABC specialize(const LaurentABC& u, const Bindings& bs) {
    if (bs.q) check_q_value(*bs.q);
    const std::optional<mpq_class>* vars[3] = {&bs.a, &bs.b, &bs.c};
    static const char* names[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i)
        if (*vars[i] && **vars[i] == 0) throw ZeroBinding(names[i]);
    LaurentABC r;
    for (const auto& [e, c] : u.terms()) {
        RatQ coeff = bs.q ? RatQ(c.eval(*bs.q)) : c;
        Exp3 rest = e;
        mpq_class factor = 1;
        for (int i = 0; i < 3; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            if (*vars[i]) {
                factor *= rational_pow(**vars[i], e[idx]);
                rest[idx] = 0;
            }
        }
        r.add_term(rest, coeff * RatQ(factor));
    }
    return r;
}

/// Evaluate an element of Q(q): a rational when q is bound, else unchanged.
inline RatQ specialize(const RatQ& u, const Bindings& bs) {
    if (!bs.q) return u;
    return RatQ(specialize(u, *bs.q));
}

} // namespace askey
