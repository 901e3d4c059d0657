#pragma once

#include "askey/delta.hpp"
#include "askey/error.hpp"
#include "askey/expr.hpp"
#include "askey/tensor.hpp"
#include "askey/uqsl2.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace askey {

/// Folds an expression tree in an algebra described by Ctx, which provides
///   Value; Value one(); Value scalar(const RatQ&); Value symbol(name, pos);
///   Value inverse(const Value&, pos, bool division).
template <class Ctx>
typename Ctx::Value evaluate(const Expr& e, Ctx& ctx) {
    using V = typename Ctx::Value;
    switch (e.kind) {
    case Expr::Kind::Number: return ctx.scalar(RatQ(e.number));
    case Expr::Kind::Symbol: return ctx.symbol(e.name, e.pos);
    case Expr::Kind::Add: return evaluate(*e.args[0], ctx) + evaluate(*e.args[1], ctx);
    case Expr::Kind::Sub: return evaluate(*e.args[0], ctx) - evaluate(*e.args[1], ctx);
    case Expr::Kind::Neg: return -evaluate(*e.args[0], ctx);
    case Expr::Kind::Mul: return evaluate(*e.args[0], ctx) * evaluate(*e.args[1], ctx);
    case Expr::Kind::Div: {
        V num = evaluate(*e.args[0], ctx);
        return num * ctx.inverse(evaluate(*e.args[1], ctx), e.args[1]->pos, true);
    }
    case Expr::Kind::Pow: {
        V base = evaluate(*e.args[0], ctx);
        if (e.exponent < 0) base = ctx.inverse(base, e.args[0]->pos, false);
        V r = ctx.one();
        const int n = e.exponent < 0 ? -e.exponent : e.exponent;
        for (int i = 0; i < n; ++i) r = r * base;
        return r;
    }
    }
    throw AlgebraError("bad expression node");
}

/// Letters of U: e f k K x y Y z nx ny nz Phi Lam and the scalar q.
struct UContext {
    using Value = UElement;
    Value one() const { return u::one(); }
    Value scalar(const RatQ& c) const { return u::scalar(c); }
    Value symbol(const std::string& name, std::size_t pos) const {
        if (auto v = lookup(name)) return *v;
        throw ContextError("'" + name + "' is not a letter of U", pos);
    }
    static std::optional<Value> lookup(std::string_view n) {
        if (n == "q") return u::scalar(RatQ::q());
        if (n == "e") return u::e();
        if (n == "f") return u::f();
        if (n == "k" || n == "y") return u::k(1);
        if (n == "K" || n == "Y" || n == "y_inv") return u::k(-1);
        if (n == "x") return u::x();
        if (n == "z") return u::z();
        if (n == "nx" || n == "nu_x") return u::nu_x();
        if (n == "ny" || n == "nu_y") return u::nu_y();
        if (n == "nz" || n == "nu_z") return u::nu_z();
        if (n == "Phi") return u::Phi();
        if (n == "Lam" || n == "Lambda") return u::Lambda();
        return std::nullopt;
    }
    Value inverse(const Value& v, std::size_t pos, bool division) const {
        if (v.is_zero()) throw DivisionByZero();
        if (division && (v.size() != 1 || v.terms().begin()->first != PbwMono{0, 0, 0}))
            throw ParseError("divisor must be a scalar", pos);
        try {
            return v.inverse_monomial();
        } catch (const DivisionByZero&) {
            throw ParseError("element is not invertible", pos);
        }
    }
};

/// Letters of U together with a, b, c.
struct TensorContext {
    using Value = TensorElement;
    Value one() const { return tensor_scalar(LaurentABC(1)); }
    Value scalar(const RatQ& c) const { return tensor_scalar(LaurentABC(c)); }
    Value symbol(const std::string& name, std::size_t pos) const {
        if (name == "a") return tensor_scalar(LaurentABC::a());
        if (name == "b") return tensor_scalar(LaurentABC::b());
        if (name == "c") return tensor_scalar(LaurentABC::c());
        if (auto v = UContext::lookup(name)) return tensor(*v);
        throw ContextError("'" + name + "' is not a letter of U (x) F[a,b,c]", pos);
    }
    Value inverse(const Value& v, std::size_t pos, bool division) const {
        if (v.is_zero()) throw DivisionByZero();
        if (division && (v.size() != 1 || v.terms().begin()->first != PbwMono{0, 0, 0}))
            throw ParseError("divisor must be a scalar", pos);
        try {
            return v.inverse_monomial();
        } catch (const DivisionByZero&) {
            throw ParseError("element is not invertible", pos);
        }
    }
};

/// Letters of Delta: A B C al be ga Om and the scalar q.
struct DeltaContext {
    using Value = DeltaElement;
    Value one() const { return delta::one(); }
    Value scalar(const RatQ& c) const { return DeltaElement(c); }
    Value symbol(const std::string& name, std::size_t pos) const {
        if (name == "q") return DeltaElement(RatQ::q());
        if (name == "A") return delta::A();
        if (name == "B") return delta::B();
        if (name == "C") return delta::C();
        if (name == "al" || name == "alpha") return delta::alpha();
        if (name == "be" || name == "beta") return delta::beta();
        if (name == "ga" || name == "gamma") return delta::gamma();
        if (name == "Om" || name == "Omega") return delta::Omega();
        throw ContextError("'" + name + "' is not a letter of Delta", pos);
    }
    Value inverse(const Value& v, std::size_t pos, bool /*division*/) const {
        if (v.is_zero()) throw DivisionByZero();
        if (v.size() != 1 || v.terms().begin()->first != DeltaMono{})
            throw ParseError("only nonzero scalars are invertible in Delta", pos);
        return DeltaElement(v.terms().begin()->second.inv());
    }
};

inline UElement parse_u(std::string_view text) {
    UContext ctx;
    return evaluate(*parse_expr(text), ctx);
}
inline TensorElement parse_tensor(std::string_view text) {
    TensorContext ctx;
    return evaluate(*parse_expr(text), ctx);
}
inline DeltaElement parse_delta(std::string_view text) {
    DeltaContext ctx;
    return evaluate(*parse_expr(text), ctx);
}

} // namespace askey
