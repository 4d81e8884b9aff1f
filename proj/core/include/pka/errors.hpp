#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pka {

enum class ErrorKind {
    UndefinedSum,
    UndefinedStar,
    MalformedAlgebra,
    NotFunctional,
    StarDivergence,
    CarrierOverflow,
    NotStarContinuous,
    NotTotal,
    NotAHomomorphism,
    KindMismatch,
    SearchBudgetExceeded,
    ParseError,
};

auto to_string(ErrorKind kind) -> std::string_view;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what) :
        std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind)
    {
    }

    [[nodiscard]] auto kind() const -> ErrorKind { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what) :
        Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what),
        line_(line)
    {
    }

    [[nodiscard]] auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

} // namespace pka
