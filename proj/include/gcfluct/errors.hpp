#pragma once

#include <stdexcept>
#include <string>

namespace gcfluct {

/// Shapes or dimensions of the operands do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An input lies outside the mathematical domain of an operation
/// (singular form, violated thermodynamic inequality, failed axiom, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A text document (config, matrix file) could not be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gcfluct
