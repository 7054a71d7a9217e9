#pragma once

#include <stdexcept>
#include <string>

namespace udecide {

/// Argument outside the documented domain of a function or type.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rejection sampler ran out of retries.
class SamplerExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace udecide
