#pragma once

#include <stdexcept>
#include <string>

namespace nwr {

/// Malformed or inconsistent input (bad JSON, unknown vertex, invalid family, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact procedure was asked to run on an instance larger than its configured limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nwr
