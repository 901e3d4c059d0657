#pragma once

#include "askey/delta.hpp"
#include "askey/laurent.hpp"
#include "askey/ratq.hpp"
#include "askey/tensor.hpp"
#include "askey/uqsl2.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace askey {

namespace detail {

struct SignedTerm {
    bool negative = false;
    std::string body;
};

inline std::string join_terms(const std::vector<SignedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

inline std::string power_factor(const std::string& base, int e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

inline std::string join_factors(const std::vector<std::string>& fs) {
    std::string out;
    for (const auto& f : fs) {
        if (f.empty()) continue;
        if (!out.empty()) out += "*";
        out += f;
    }
    return out;
}

/// Terms of c * q^e for the nonzero coefficients of a polynomial, highest first.
inline std::vector<SignedTerm> poly_terms(const IntPoly& p, int shift) {
    std::vector<SignedTerm> out;
    for (int d = p.degree(); d >= 0 && !p.is_zero(); --d) {
        const mpz_class& c = p.coeff(d);
        if (c == 0) continue;
        const mpz_class a = abs(c);
        const int e = d + shift;
        std::string body;
        if (e == 0)
            body = a.get_str();
        else
            body = (a == 1 ? std::string() : a.get_str() + "*") + power_factor("q", e);
        out.push_back({c < 0, body});
    }
    return out;
}

inline std::string poly_string(const IntPoly& p) { return join_terms(poly_terms(p, 0)); }

/// A coefficient times a monomial, as signed sum terms. An empty monomial
/// string means the constant monomial.
inline void append_scaled(std::vector<SignedTerm>& out, const RatQ& c, const std::string& mono) {
    if (c.is_laurent()) {
        std::vector<SignedTerm> ts = poly_terms(c.num(), -c.den().degree());
        if (mono.empty()) {
            out.insert(out.end(), ts.begin(), ts.end());
        } else if (ts.size() == 1) {
            const std::string& b = ts[0].body;
            out.push_back({ts[0].negative, b == "1" ? mono : b + "*" + mono});
        } else {
            const bool neg = ts[0].negative;
            if (neg)
                for (auto& t : ts) t.negative = !t.negative;
            out.push_back({neg, "(" + join_terms(ts) + ")*" + mono});
        }
        return;
    }
    const bool neg = c.num().lc() < 0;
    const std::string frac = "(" + poly_string(neg ? -c.num() : c.num()) + ")/(" + poly_string(c.den()) + ")";
    out.push_back({neg, mono.empty() ? frac : frac + "*" + mono});
}

inline std::string pbw_monomial_string(const PbwMono& m) {
    std::vector<std::string> fs;
    if (m.r > 0) fs.push_back(power_factor("e", m.r));
    if (m.s > 0) fs.push_back(power_factor("k", m.s));
    if (m.s < 0) fs.push_back(power_factor("K", -m.s));
    if (m.t > 0) fs.push_back(power_factor("f", m.t));
    return join_factors(fs);
}

inline std::string abc_monomial_string(const Exp3& e) {
    static const char* names[3] = {"a", "b", "c"};
    std::vector<std::string> fs;
    for (int i = 0; i < 3; ++i)
        if (e[static_cast<std::size_t>(i)] != 0) fs.push_back(power_factor(names[i], e[static_cast<std::size_t>(i)]));
    return join_factors(fs);
}

inline std::string delta_monomial_string(const DeltaMono& m) {
    return join_factors({m.i ? power_factor("A", m.i) : "", m.j ? power_factor("B", m.j) : "",
                         m.k ? power_factor("C", m.k) : "", m.r ? power_factor("al", m.r) : "",
                         m.s ? power_factor("be", m.s) : "", m.t ? power_factor("ga", m.t) : ""});
}

} // namespace detail

/// q-expression accepted back by the parser: a Laurent polynomial, or
/// (numerator)/(denominator).
inline std::string to_string(const RatQ& c) {
    std::vector<detail::SignedTerm> ts;
    detail::append_scaled(ts, c, "");
    return detail::join_terms(ts);
}

inline std::string to_string(const LaurentABC& l) {
    std::vector<detail::SignedTerm> ts;
    for (const auto& [e, c] : l.terms()) detail::append_scaled(ts, c, detail::abc_monomial_string(e));
    return detail::join_terms(ts);
}

/// Element of U on the e^r k^s f^t basis; K stands for k^-1.
inline std::string to_string(const UElement& u) {
    std::vector<detail::SignedTerm> ts;
    for (const auto& [m, c] : u.terms()) detail::append_scaled(ts, u.coeff_ef(m), detail::pbw_monomial_string(m));
    return detail::join_terms(ts);
}

/// Flat sum of coef*a^i*b^j*c^k*e^r*k^s*f^t terms.
inline std::string to_string(const TensorElement& v) {
    std::vector<detail::SignedTerm> ts;
    for (const auto& [m, l] : v.terms()) {
        const std::string pm = detail::pbw_monomial_string(m);
        const LaurentABC lef = l.scaled(TensorElement::ef_scale(m));
        for (const auto& [e, c] : lef.terms())
            detail::append_scaled(ts, c, detail::join_factors({detail::abc_monomial_string(e), pm}));
    }
    return detail::join_terms(ts);
}

inline std::string to_string(const DeltaElement& d) {
    std::vector<detail::SignedTerm> ts;
    for (const auto& [m, c] : d.terms()) detail::append_scaled(ts, c, detail::delta_monomial_string(m));
    return detail::join_terms(ts);
}

/// Grouped form u ⊗ (Laurent polynomial), one group per PBW monomial.
inline std::string to_pretty_string(const TensorElement& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [m, l] : v.terms()) {
        if (!out.empty()) out += " + ";
        const std::string pm = detail::pbw_monomial_string(m);
        out += (pm.empty() ? "1" : pm) + "⊗(" + to_string(l.scaled(TensorElement::ef_scale(m))) + ")";
    }
    return out;
}

} // namespace askey
