#pragma once

#include <stdexcept>
#include <string>

namespace polydecomp {

/// Malformed text input (polynomial or scalar literal, JSON parameters).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters that are individually well formed but do not describe a
/// valid construction (e.g. collision parameters with e a multiple of d).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside an operation's domain: a degree that
/// is not composite, a divisor that is not proper, a non-invertible series.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace polydecomp
