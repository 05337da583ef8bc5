#pragma once

#include <stdexcept>
#include <string>

namespace gpi {

/// Malformed input or a violated precondition.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured ceiling was exceeded. Never a mathematical verdict.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace gpi
