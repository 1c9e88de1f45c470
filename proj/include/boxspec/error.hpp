#pragma once

#include <stdexcept>
#include <string>

namespace boxspec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid geometry, negative spectral parameter, out-of-range index etc.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured work or memory cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Not enough data for a statistical summary (e.g. rate fitting).
class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace boxspec
