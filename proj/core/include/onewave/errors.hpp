#pragma once

#include <stdexcept>
#include <string>

namespace onewave {

/// Query outside a medium's declared domain, or a symbol evaluated where it
/// is undefined (evanescent point, tau = 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid configuration or malformed input file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked for more than its inputs can provide
/// (e.g. derivatives beyond the declared order with fallback disabled).
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// NaN/Inf detected mid-computation, or a singular linear system.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace onewave
