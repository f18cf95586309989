#pragma once

#include <stdexcept>
#include <string>

namespace dipolar {

// Invalid physical or structural configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integration or decomposition failure. Exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lookup outside the basis or an unusable input series.
class QueryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure. Exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dipolar
