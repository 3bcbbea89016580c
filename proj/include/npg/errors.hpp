#pragma once

#include <stdexcept>
#include <string>

namespace npg {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A numerical configuration (step, tolerance, grid) cannot be honoured.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace npg
