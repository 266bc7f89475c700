#pragma once

#include <stdexcept>
#include <string>

namespace citeheat {

// Base class for every error the pipeline reports to a user. The CLI maps
// the concrete subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or incomplete run configuration (exit 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (exit 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// File system failure (exit 3).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace citeheat
