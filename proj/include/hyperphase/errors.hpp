#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperphase {

/// Invalid user input: bad parameters, malformed sets, out-of-range values.
/// The CLI maps this family to exit status 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A line-addressed failure while reading a hypergraph file.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A key-addressed failure while reading an experiment configuration.
class ConfigError : public ValidationError {
public:
    ConfigError(std::string key, const std::string& what)
        : ValidationError("config key '" + key + "': " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// A guardrail refused an allocation. The CLI maps this to exit status 2.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would exceed 64 bits.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An iterative numeric routine failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperphase
