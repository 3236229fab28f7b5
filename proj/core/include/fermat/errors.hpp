#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquareFree : Error {
    explicit NotSquareFree(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& what) : Error(what) {}
};

struct ZeroCoefficient : Error {
    explicit ZeroCoefficient(const std::string& what) : Error(what) {}
};

struct GeneratorNotFound : Error {
    explicit GeneratorNotFound(const std::string& what) : Error(what) {}
};

struct NonPrincipalGcd : Error {
    explicit NonPrincipalGcd(const std::string& what) : Error(what) {}
};

struct NotASolution : Error {
    explicit NotASolution(const std::string& what) : Error(what) {}
};

struct TrivialSolution : Error {
    explicit TrivialSolution(const std::string& what) : Error(what) {}
};

struct DegenerateLambda : Error {
    explicit DegenerateLambda(const std::string& what) : Error(what) {}
};

struct InvalidProfile : Error {
    explicit InvalidProfile(const std::string& what) : Error(what) {}
};

struct OutOfScope : Error {
    explicit OutOfScope(const std::string& what) : Error(what) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct LimitTooLarge : Error {
    explicit LimitTooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace fermat
