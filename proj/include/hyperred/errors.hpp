#pragma once

#include <stdexcept>
#include <string>

namespace hyperred {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg = "zero denominator") : Error(msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg = "no solution") : Error(msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

struct NotWeaklyNormalized : Error {
    explicit NotWeaklyNormalized(const std::string& msg = "input is not weakly normalized") : Error(msg) {}
};

struct NotDifferentialReduced : Error {
    explicit NotDifferentialReduced(const std::string& msg = "kernel is not differential reduced") : Error(msg) {}
};

// The tower (or the field the algorithm would need) is outside what the
// engine supports, e.g. a generator whose logarithmic derivative is not
// rational in x when a rationally hyperexponential tower is required.
struct UnsupportedTower : Error {
    explicit UnsupportedTower(const std::string& msg) : Error(msg) {}
};

struct UnsupportedCase : Error {
    explicit UnsupportedCase(const std::string& msg) : Error(msg) {}
};

struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& msg) : Error(msg) {}
};

// Intermediate polynomial degree exceeded HYPERRED_MAX_DEGREE.
struct MaxDegreeExceeded : UnsupportedCase {
    explicit MaxDegreeExceeded(const std::string& msg) : UnsupportedCase(msg) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (column " + std::to_string(pos + 1) + ")"), position(pos) {}
};

struct UnknownIdentifier : SyntaxError {
    UnknownIdentifier(const std::string& name, std::size_t pos)
        : SyntaxError("unknown identifier '" + name + "'", pos) {}
};

struct DuplicateGenerator : Error {
    explicit DuplicateGenerator(const std::string& name) : Error("duplicate generator '" + name + "'") {}
};

struct EvaluationError : Error {
    explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

// A broken internal invariant; callers map this to exit code 4.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal invariant violation: " + msg) {}
};

} // namespace hyperred
