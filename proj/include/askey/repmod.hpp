#pragma once

#include "askey/delta_action.hpp"
#include "askey/error.hpp"
#include "askey/eval.hpp"
#include "askey/hom.hpp"
#include "askey/registry.hpp"
#include "askey/report.hpp"
#include "askey/specialize.hpp"
#include "askey/uqsl2.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace askey {

/// Square matrix over Q. Carries the value of q so that scaled(RatQ) can
/// evaluate its argument; a default-constructed matrix is an additive zero of
/// any size.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t n, mpq_class q) : n_(n), q_(std::move(q)), a_(n * n) {}

    static QMatrix identity(std::size_t n, const mpq_class& q, const mpq_class& lambda = 1) {
        QMatrix m(n, q);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
        return m;
    }

    std::size_t dim() const noexcept { return n_; }
    const mpq_class& q() const noexcept { return q_; }
    bool empty() const noexcept { return n_ == 0; }

    mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }
    /// lambda with *this == lambda I, if any.
    std::optional<mpq_class> scalar_value() const {
        if (n_ == 0) return mpq_class(0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && (*this)(i, j) != 0) return std::nullopt;
        for (std::size_t i = 1; i < n_; ++i)
            if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
        return (*this)(0, 0);
    }

    QMatrix scaled(const mpq_class& s) const {
        QMatrix r = *this;
        for (auto& v : r.a_) v *= s;
        return r;
    }
    QMatrix scaled(const RatQ& s) const { return empty() ? *this : scaled(s.eval(q_)); }

    /// Entries (i, j) with j - i = d, the part that shifts basis indices by -d.
    QMatrix band(int d) const {
        QMatrix r(n_, q_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (static_cast<long>(j) - static_cast<long>(i) == d) r(i, j) = (*this)(i, j);
        return r;
    }

    /// Inverse of an invertible diagonal matrix.
    std::optional<QMatrix> diagonal_inverse() const {
        QMatrix r(n_, q_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i != j && (*this)(i, j) != 0) return std::nullopt;
                if (i == j) {
                    if ((*this)(i, i) == 0) return std::nullopt;
                    r(i, i) = 1 / (*this)(i, i);
                }
            }
        return r;
    }

    QMatrix& operator+=(const QMatrix& o) {
        if (o.empty()) return *this;
        if (empty()) return *this = o;
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    QMatrix& operator-=(const QMatrix& o) { return *this += -o; }
    QMatrix operator-() const { return scaled(mpq_class(-1)); }
    friend QMatrix operator+(QMatrix u, const QMatrix& v) { return u += v; }
    friend QMatrix operator-(QMatrix u, const QMatrix& v) { return u -= v; }
    friend QMatrix operator*(const QMatrix& u, const QMatrix& v) {
        if (u.empty() || v.empty()) return {};
        QMatrix r(u.n_, u.q_);
        for (std::size_t i = 0; i < u.n_; ++i)
            for (std::size_t k = 0; k < u.n_; ++k) {
                const mpq_class& x = u(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < u.n_; ++j) r(i, j) += x * v(k, j);
            }
        return r;
    }
    friend bool operator==(const QMatrix& u, const QMatrix& v) { return (u - v).is_zero(); }

private:
    std::size_t n_ = 0;
    mpq_class q_;
    std::vector<mpq_class> a_;
};

inline std::string to_string(const QMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.dim(); ++j) s += (j ? " " : "") + m(i, j).get_str();
    }
    return s + "]";
}

/// [m]_q = (q^m - q^-m)/(q - q^-1)
inline mpq_class q_integer(int m, const mpq_class& q) {
    return (rational_pow(q, m) - rational_pow(q, -m)) / (q - 1 / q);
}

/// The (n+1)-dimensional module L(n, eps) at a rational q:
/// k v_i = eps q^{n-2i} v_i, f v_i = [i+1] v_{i+1}, e v_i = eps [n-i+1] v_{i-1}.
struct ModuleRep {
    int n = 0;
    int eps = 1;
    mpq_class q;
    QMatrix e, f, k, k_inv;
};

inline ModuleRep build_module(int n, int eps, const mpq_class& q) {
    check_q_value(q);
    if (n < 0) throw AlgebraError("module dimension parameter must be nonnegative");
    if (eps != 1 && eps != -1) throw AlgebraError("eps must be +1 or -1");
    const auto d = static_cast<std::size_t>(n + 1);
    ModuleRep m{n, eps, q, QMatrix(d, q), QMatrix(d, q), QMatrix(d, q), QMatrix(d, q)};
    for (int i = 0; i <= n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        m.k(ui, ui) = eps * rational_pow(q, n - 2 * i);
        m.k_inv(ui, ui) = 1 / m.k(ui, ui);
        if (i < n) m.f(ui + 1, ui) = q_integer(i + 1, q);
        if (i > 0) m.e(ui - 1, ui) = eps * q_integer(n - i + 1, q);
    }
    return m;
}

inline QMatrix matrix_power(const QMatrix& base, int n, const QMatrix& one) {
    QMatrix r = one;
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

/// The action of u on the module; coefficients evaluated at the module's q.
/// Throws PoleAtSpecialization when a coefficient has a pole there.
inline QMatrix represent(const UElement& u, const ModuleRep& m) {
    const QMatrix one = QMatrix::identity(static_cast<std::size_t>(m.n + 1), m.q);
    QMatrix out(static_cast<std::size_t>(m.n + 1), m.q);
    for (const auto& [mono, c] : u.terms()) {
        const QMatrix ks = mono.s >= 0 ? matrix_power(m.k, mono.s, one) : matrix_power(m.k_inv, -mono.s, one);
        out += (matrix_power(m.e, mono.r, one) * ks * matrix_power(m.f, mono.t, one)).scaled(u.coeff_ef(mono).eval(m.q));
    }
    return out;
}

/// Generator matrices from which every letter of U is built. The equitable
/// letters are formed from e, f, k by the isomorphism with the Chevalley
/// presentation; y, z, x may instead be given directly.
struct LetterMatrices {
    mpq_class q;
    QMatrix one, e, f, k, k_inv, x, y, z;
    bool equitable_lambda = false;

    static LetterMatrices from_module(const ModuleRep& m) {
        LetterMatrices l;
        l.q = m.q;
        l.one = QMatrix::identity(static_cast<std::size_t>(m.n + 1), m.q);
        l.e = m.e;
        l.f = m.f;
        l.k = m.k;
        l.k_inv = m.k_inv;
        l.set_equitable_from_chevalley();
        return l;
    }
    void set_equitable_from_chevalley() {
        const mpq_class d = q - 1 / q;
        y = k;
        z = k_inv + f.scaled(d);
        x = k_inv - (e * k_inv).scaled(d / q);
    }
    QMatrix nu_x() const { return (one - y * z).scaled(q); }
    QMatrix nu_y() const { return (one - z * x).scaled(q); }
    QMatrix nu_z() const { return (one - x * y).scaled(q); }
    /// From e, f, k, or as q x + q^-1 y + q z - q x y z when equitable_lambda is set.
    QMatrix lambda() const {
        if (equitable_lambda) return x.scaled(q) + y.scaled(1 / q) + z.scaled(q) - (x * y * z).scaled(q);
        const mpq_class d = q - 1 / q;
        return (e * f).scaled(d * d) + k.scaled(1 / q) + k_inv.scaled(q);
    }
};

/// Evaluates surface syntax to matrices. a, b, c are optional rational values.
struct MatrixContext {
    using Value = QMatrix;
    LetterMatrices l;
    std::optional<mpq_class> a, b, c;

    Value one() const { return l.one; }
    Value scalar(const RatQ& s) const { return l.one.scaled(s.eval(l.q)); }
    Value symbol(const std::string& n, std::size_t pos) const {
        if (n == "q") return l.one.scaled(l.q);
        if (n == "e") return l.e;
        if (n == "f") return l.f;
        if (n == "k") return l.k;
        if (n == "K" || n == "y_inv") return l.k_inv;
        if (n == "x") return l.x;
        if (n == "y") return l.y;
        if (n == "Y") return l.k_inv;
        if (n == "z") return l.z;
        if (n == "nx" || n == "nu_x") return l.nu_x();
        if (n == "ny" || n == "nu_y") return l.nu_y();
        if (n == "nz" || n == "nu_z") return l.nu_z();
        if (n == "Lam" || n == "Lambda") return l.lambda();
        if (n == "Phi") {
            const mpq_class d = l.q - 1 / l.q;
            return l.lambda().scaled(1 / (d * d));
        }
        if (n == "a" && a) return l.one.scaled(*a);
        if (n == "b" && b) return l.one.scaled(*b);
        if (n == "c" && c) return l.one.scaled(*c);
        throw ContextError("'" + n + "' has no matrix value", pos);
    }
    Value inverse(const Value& v, std::size_t pos, bool division) const {
        if (v.is_zero()) throw DivisionByZero();
        if (division) {
            const auto s = v.scalar_value();
            if (!s) throw ParseError("divisor must be a scalar", pos);
            return l.one.scaled(1 / *s);
        }
        if (auto inv = v.diagonal_inverse()) return *inv;
        throw ParseError("element is not invertible", pos);
    }
};

inline QMatrix evaluate_matrix(std::string_view text, const MatrixContext& ctx) {
    MatrixContext c = ctx;
    return evaluate(*parse_expr(text), c);
}

namespace repmod {

inline std::string module_tag(const ModuleRep& m) {
    return "L(" + std::to_string(m.n) + "," + (m.eps > 0 ? "+1" : "-1") + ") q=" + m.q.get_str();
}

/// Both sides of an identity as matrices on the module.
inline Check numeric_identity_check(const Identity& ident, const ModuleRep& m, Mutation mut = Mutation::None) {
    MatrixContext ctx{LetterMatrices::from_module(m), {}, {}, {}};
    QMatrix lhs = evaluate_matrix(ident.lhs, ctx);
    if (ident.degree) lhs = lhs.band(*ident.degree + (mut == Mutation::WrongGradingDegree ? 1 : 0));
    const QMatrix rhs = evaluate_matrix(ident.rhs, ctx);
    Check c = bool_check(ident.id, lhs == rhs, module_tag(m));
    if (!c.passed()) c.residual = to_string(rhs - lhs);
    return c;
}

/// The defining relations of U as matrix identities.
inline Check chevalley_check(const ModuleRep& m) {
    const QMatrix one = QMatrix::identity(static_cast<std::size_t>(m.n + 1), m.q);
    const mpq_class q2 = m.q * m.q;
    const bool ok = m.k * m.k_inv == one && m.k_inv * m.k == one && m.k * m.e == (m.e * m.k).scaled(q2) &&
                    m.k * m.f == (m.f * m.k).scaled(1 / q2) &&
                    m.e * m.f - m.f * m.e == (m.k - m.k_inv).scaled(1 / (m.q - 1 / m.q));
    return bool_check("module.chevalley", ok, module_tag(m));
}

/// Lambda acts as eps (q^{n+1} + q^{-n-1}).
inline Check casimir_scalar_check(const ModuleRep& m) {
    const mpq_class expected = m.eps * (rational_pow(m.q, m.n + 1) + rational_pow(m.q, -m.n - 1));
    const QMatrix lam = represent(u::Lambda(), m);
    return bool_check("module.casimir-scalar",
                      lam == QMatrix::identity(static_cast<std::size_t>(m.n + 1), m.q, expected), module_tag(m));
}

/// Matrices of the images of A, B, C, alpha, beta, gamma computed from x, y,
/// z matrices and values of a, b, c.
inline MonomialMap<QMatrix>::Images natural_matrices(const LetterMatrices& l, const mpq_class& a,
                                                     const mpq_class& b, const mpq_class& c) {
    const QMatrix A = l.x.scaled(a) + l.y.scaled(1 / a) + l.nu_z().scaled(b / c);
    const QMatrix B = l.y.scaled(b) + l.z.scaled(1 / b) + l.nu_x().scaled(c / a);
    const QMatrix C = l.z.scaled(c) + l.x.scaled(1 / c) + l.nu_y().scaled(a / b);
    const QMatrix lam = l.lambda();
    auto s = [](const mpq_class& v) -> mpq_class { return v + 1 / v; };
    return {A, B, C, lam.scaled(s(a)) + l.one.scaled(s(b) * s(c)), lam.scaled(s(b)) + l.one.scaled(s(c) * s(a)),
            lam.scaled(s(c)) + l.one.scaled(s(a) * s(b))};
}

/// The three defining relations of Delta and the closed form of the image of
/// the Casimir element, with every matrix computed from the module directly.
inline std::vector<Check> natural_checks(const ModuleRep& m, const mpq_class& a, const mpq_class& b,
                                         const mpq_class& c, Mutation mut = Mutation::None) {
    const LetterMatrices l = LetterMatrices::from_module(m);
    auto im = natural_matrices(l, a, b, c);
    if (mut == Mutation::PerturbedA) im[0] += l.one.scaled(a);
    if (mut == Mutation::DuplicatedImage) im[2] = im[0];
    const std::string tag = module_tag(m) + " a=" + a.get_str() + " b=" + b.get_str() + " c=" + c.get_str();
    auto rel = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
        return hom::relation_residual(im[x], im[y], im[z], im[w]).is_zero();
    };
    MonomialMap<QMatrix> nat(im, l.one);
    MatrixContext ctx{l, a, b, c};
    const QMatrix stated =
        evaluate_matrix(mut == Mutation::DroppedOmegaTerm ? hom::omega_form_dropped : hom::omega_form, ctx);
    return {
        bool_check("module.main.relation1", rel(0, 1, 2, 3), tag),
        bool_check("module.main.relation2", rel(1, 2, 0, 4), tag),
        bool_check("module.main.relation3", rel(2, 0, 1, 5), tag),
        bool_check("module.main2.omega", nat(delta::Omega()) == stated, tag),
    };
}

/// The two commuting diagrams on every monomial with exponents <= max_exp,
/// evaluated on the module. sigma~ and rho~ act by substituting twisted
/// generator matrices and permuted values of a, b, c.
inline std::vector<Check> diagram_checks(const ModuleRep& m, const mpq_class& a, const mpq_class& b,
                                         const mpq_class& c, int max_exp = 2) {
    const LetterMatrices l = LetterMatrices::from_module(m);
    MonomialMap<QMatrix> nat(natural_matrices(l, a, b, c), l.one);

    // sigma~: e -> f (x) a^-1 b^-1 c, f -> e (x) a b c^-1, k -> k^-1, a <-> b.
    LetterMatrices ls = l;
    ls.e = l.f.scaled(c / (a * b));
    ls.f = l.e.scaled(a * b / c);
    ls.k = l.k_inv;
    ls.k_inv = l.k;
    ls.set_equitable_from_chevalley();
    MonomialMap<QMatrix> nat_sigma(natural_matrices(ls, b, a, c), l.one);

    // rho~: x -> y, y -> z, z -> x, a -> b -> c -> a.
    LetterMatrices lr = l;
    lr.x = l.y;
    lr.y = l.z;
    lr.z = l.x;
    lr.equitable_lambda = true;
    MonomialMap<QMatrix> nat_rho(natural_matrices(lr, b, c, a), l.one);

    const std::string tag = module_tag(m) + " a=" + a.get_str() + " b=" + b.get_str() + " c=" + c.get_str();
    const auto monos = hom::delta_monomials_upto(max_exp);
    auto run = [&](const std::string& id, auto&& delta_side, MonomialMap<QMatrix>& twisted) {
        for (const auto& mono : monos) {
            const DeltaElement d = DeltaElement::monomial(mono);
            if (!(nat(delta_side(d)) == twisted.image(mono)))
                return bool_check(id, false, tag + " at " + to_string(d));
        }
        return bool_check(id, true, tag + ", " + std::to_string(monos.size()) + " monomials");
    };
    return {
        run("module.diagram.sigma", [](const DeltaElement& d) { return delta::sigma(d); }, nat_sigma),
        run("module.diagram.rho", [](const DeltaElement& d) { return delta::rho(d); }, nat_rho),
    };
}

/// Modules L(n, eps) for n <= max_n, eps = +-1 and the given values of q.
inline std::vector<ModuleRep> module_family(int max_n, const std::vector<mpq_class>& qs) {
    std::vector<ModuleRep> out;
    for (const auto& q : qs)
        for (int n = 0; n <= max_n; ++n)
            for (int eps : {1, -1}) out.push_back(build_module(n, eps, q));
    return out;
}

inline std::vector<mpq_class> standard_q_values() { return {mpq_class(2), mpq_class(3, 2), mpq_class(-2)}; }

} // namespace repmod

} // namespace askey
