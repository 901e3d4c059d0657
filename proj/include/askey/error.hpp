#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace askey {

/// Base class for every error raised by the kernel.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
public:
    DivisionByZero() : AlgebraError("division by zero") {}
};

/// q bound to a value with q = 0 or q^4 = 1.
class ForbiddenSpecialization : public AlgebraError {
public:
    explicit ForbiddenSpecialization(const std::string& what)
        : AlgebraError("forbidden specialization: " + what) {}
};

/// a, b or c bound to zero.
class ZeroBinding : public AlgebraError {
public:
    explicit ZeroBinding(const std::string& var)
        : AlgebraError("variable " + var + " bound to zero") {}
};

/// A coefficient denominator vanishes at the chosen value of q.
class PoleAtSpecialization : public AlgebraError {
public:
    explicit PoleAtSpecialization(const std::string& what)
        : AlgebraError("pole at specialization: " + what) {}
};

class NotInUPrime : public AlgebraError {
public:
    explicit NotInUPrime(const std::string& what)
        : AlgebraError("element is not in U': " + what) {}
};

class BoundTooSmall : public AlgebraError {
public:
    explicit BoundTooSmall(int bound)
        : AlgebraError("no solution with filtration bound " + std::to_string(bound)), bound_(bound) {}
    int bound() const noexcept { return bound_; }

private:
    int bound_;
};

class ParseError : public AlgebraError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : AlgebraError("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// A letter that does not belong to the selected algebra.
class ContextError : public AlgebraError {
public:
    ContextError(const std::string& msg, std::size_t pos)
        : AlgebraError("context error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace askey
