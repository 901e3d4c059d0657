#pragma once

#include "askey/error.hpp"

#include <gmpxx.h>

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace askey {

/// Expression tree of the ASCII surface syntax.
struct Expr {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    std::size_t pos = 0;
    mpz_class number;  // Number
    std::string name;  // Symbol
    int exponent = 0;  // Pow
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    static ExprPtr node(Expr::Kind k, std::size_t pos, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->pos = pos;
        e->args = std::move(args);
        return e;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    /// Unicode minus and multiplication-dot variants are accepted as ASCII.
    bool accept_minus() {
        skip_ws();
        if (accept('-')) return true;
        static constexpr std::string_view umin = "\xE2\x88\x92";
        if (s_.substr(pos_, umin.size()) == umin) {
            pos_ += umin.size();
            return true;
        }
        return false;
    }

    ExprPtr sum() {
        ExprPtr e = product();
        for (;;) {
            const std::size_t at = pos_;
            if (accept('+'))
                e = node(Expr::Kind::Add, at, {e, product()});
            else if (accept_minus())
                e = node(Expr::Kind::Sub, at, {e, product()});
            else
                return e;
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*'))
                e = node(Expr::Kind::Mul, at, {e, unary()});
            else if (accept('/'))
                e = node(Expr::Kind::Div, at, {e, unary()});
            else
                return e;
        }
    }

    ExprPtr unary() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept_minus()) return node(Expr::Kind::Neg, at, {unary()});
        if (accept('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->pos = at;
        e->exponent = exponent();
        e->args = {base};
        return e;
    }

    /// n, -n, (n), (-n), {n}, {-n}
    int exponent() {
        skip_ws();
        char close = 0;
        if (accept('('))
            close = ')';
        else if (accept('{'))
            close = '}';
        const bool neg = accept_minus();
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", start);
        if (pos_ - start > 6) throw ParseError("exponent too large", start);
        int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (close && !accept(close)) throw ParseError(std::string("expected '") + close + "'", pos_);
        return neg ? -v : v;
    }

    ExprPtr atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->pos = at;
            e->number = mpz_class(std::string(s_.substr(at, pos_ - at)));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Symbol;
            e->pos = at;
            e->name = std::string(s_.substr(at, pos_ - at));
            return e;
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the ASCII surface syntax: identifiers, integer literals, + - * /,
/// ^ with an integer exponent (^-1, ^(-1) and ^{-1} all accepted) and
/// parentheses.
inline ExprPtr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

} // namespace askey
