#pragma once

#include <stdexcept>
#include <string>

namespace znz {

// Bad call: dimension mismatch, malformed arguments, out-of-range index.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of the operation
// (non-unimodular matrix, non-monic modulus, zero vector, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Text input that does not match the element/vector grammar.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
};

// The numeric stage of the orbit solver could not isolate a candidate
// even at the maximum working precision.  Never a wrong answer.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A --time-budget deadline fired.  `detail` carries the partial state
// of the aborted computation for the trace dump.
struct TimeBudgetError : std::runtime_error {
    TimeBudgetError(const std::string& msg, std::string detail_)
        : std::runtime_error(msg), detail(std::move(detail_)) {}
    std::string detail;
};

}  // namespace znz
