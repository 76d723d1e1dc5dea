#pragma once

#include <stdexcept>
#include <string>

namespace cellq {

// Exit-code contract: 0 success, 1 verification failure, 2 usage error,
// 3 internal invariant breach.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& m) : std::runtime_error(m) {}
};

struct NotDivisible : InvariantError {
    explicit NotDivisible(const std::string& m) : InvariantError("NotDivisible: " + m) {}
};

struct PositivityViolation : InvariantError {
    explicit PositivityViolation(const std::string& m) : InvariantError("PositivityViolation: " + m) {}
};

struct CrossCheckMismatch : InvariantError {
    explicit CrossCheckMismatch(const std::string& m) : InvariantError("CrossCheckMismatch: " + m) {}
};

struct SplitFailure : InvariantError {
    explicit SplitFailure(const std::string& m) : InvariantError("SplitFailure: " + m) {}
};

struct RetryExhausted : InvariantError {
    explicit RetryExhausted(const std::string& m) : InvariantError("RetryExhausted: " + m) {}
};

struct HomomorphismViolation : InvariantError {
    explicit HomomorphismViolation(const std::string& m) : InvariantError("HomomorphismViolation: " + m) {}
};

struct OrthogonalityViolation : InvariantError {
    explicit OrthogonalityViolation(const std::string& m) : InvariantError("OrthogonalityViolation: " + m) {}
};

struct RankDeficient : InvariantError {
    explicit RankDeficient(const std::string& m) : InvariantError("RankDeficient: " + m) {}
};

struct UnsupportedRank : UsageError {
    explicit UnsupportedRank(const std::string& m) : UsageError("UnsupportedRank: " + m) {}
};

struct ParseError : UsageError {
    explicit ParseError(const std::string& m) : UsageError("ParseError: " + m) {}
};

struct OutOfRange : UsageError {
    explicit OutOfRange(const std::string& m) : UsageError("OutOfRange: " + m) {}
};

struct BadPrimeNotInvertible : UsageError {
    explicit BadPrimeNotInvertible(const std::string& m) : UsageError("BadPrimeNotInvertible: " + m) {}
};

struct UnsupportedField : UsageError {
    explicit UnsupportedField(const std::string& m) : UsageError("UnsupportedField: " + m) {}
};

} // namespace cellq
