#pragma once

#include <stdexcept>
#include <string>

namespace slicecheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed files, invalid parameters, unsupported shapes.
class InputError : public Error {
public:
    using Error::Error;
};

// exact
class SingularForm : public Error {
public:
    SingularForm() : Error("hermitian form is singular") {}
};

class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(unsigned bits)
        : Error("interval arithmetic could not certify a sign at " + std::to_string(bits) + " bits"),
          bits_(bits) {}
    unsigned bits() const noexcept { return bits_; }

private:
    unsigned bits_;
};

class UnsupportedExactOrder : public InputError {
public:
    explicit UnsupportedExactOrder(long order)
        : InputError("no exact representation for roots of unity of order " + std::to_string(order)) {}
};

// knots
class InvalidSeifertMatrix : public InputError {
public:
    using InputError::InputError;
};

class SignatureAtAlexanderRoot : public Error {
public:
    using Error::Error;
};

class UnsupportedTorusParameters : public InputError {
public:
    using InputError::InputError;
};

class UnresolvedAtom : public Error {
public:
    explicit UnresolvedAtom(const std::string& name)
        : Error("no signature data for atom '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// obstructions
class NotDivisible : public InputError {
public:
    using InputError::InputError;
};

class CongruenceUndefined : public InputError {
public:
    using InputError::InputError;
};

// solver
class UnsupportedGenusBound : public InputError {
public:
    using InputError::InputError;
};

class SymmetryCheckFailed : public Error {
public:
    using Error::Error;
};

class UnsupportedEquationShape : public InputError {
public:
    using InputError::InputError;
};

// knotdb
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InconsistentInvariant : public InputError {
public:
    InconsistentInvariant(const std::string& name, const std::string& field, const std::string& detail)
        : InputError(name + ": inconsistent " + field + " (" + detail + ")"), name_(name), field_(field) {}
    const std::string& name() const noexcept { return name_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::string name_;
    std::string field_;
};

}  // namespace slicecheck
