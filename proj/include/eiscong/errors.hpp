#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eiscong {

// Evaluation of a rational function at a zero of its denominator.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request for an exact Bernoulli number beyond the cache budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A p-adic result cannot be delivered at the requested precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Preset precondition violated (the message names the failed condition).
struct PresetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verification requested at a prime not exceeding the computed bound P.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Taylor-family evaluation at a weight outside the branch.
struct WrongBranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression or problem-file syntax error, with a byte offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace eiscong
