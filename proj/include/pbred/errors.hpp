#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pbred {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UncoveredVariableError : Error {
    explicit UncoveredVariableError(std::uint32_t v)
        : Error("assignment does not cover variable x" + std::to_string(v)), variable(v) {}
    std::uint32_t variable;
};

struct TooManyVariablesError : Error {
    TooManyVariablesError(std::size_t got, std::size_t cap)
        : Error("enumeration over " + std::to_string(got) + " variables exceeds cap of " +
                std::to_string(cap)) {}
};

struct InvalidProductError : Error {
    using Error::Error;
};

struct InfeasibleWidthsError : Error {
    using Error::Error;
};

struct InfeasibleError : Error {
    using Error::Error;
};

struct DegreeViolationError : Error {
    using Error::Error;
};

struct NoPlausibleStatesError : Error {
    using Error::Error;
};

struct InapplicableDeductionError : Error {
    using Error::Error;
};

// Raised when a user-supplied lambda cannot be shown sufficient by the
// conservative bound checks (the name covers lambda < 0 as the obvious case).
struct NegativeLambdaError : Error {
    using Error::Error;
};

struct PositiveCoefficientError : Error {
    using Error::Error;
};

struct NotASolutionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& what)
        : Error("parse error: line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

}  // namespace pbred
