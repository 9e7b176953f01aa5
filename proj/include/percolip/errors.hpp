#pragma once

#include <stdexcept>
#include <string>

namespace percolip {

// Precondition and configuration violations (CLI exit code 2).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Requested object would exceed capacity limits (CLI exit code 2).
class SizeError : public std::length_error {
 public:
  explicit SizeError(const std::string& what) : std::length_error(what) {}
};

// Numerical failure such as solver non-convergence or a degenerate
// problem instance (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem and serialization failures (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace percolip
