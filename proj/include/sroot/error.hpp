#pragma once

#include <stdexcept>
#include <string>

namespace sroot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts a structural expectation of the model.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A required choice (unit, generator, ...) could not be made.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace sroot
