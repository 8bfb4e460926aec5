#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monointerp {

/// Malformed textual input. column is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t column)
        : std::runtime_error(message), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Well-formed input outside the mathematical domain of an operation,
/// e.g. a scheme that is not zero-dimensional or an empty scheme where one is needed.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace monointerp
