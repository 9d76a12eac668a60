#pragma once

#include <stdexcept>
#include <string>

namespace svbell {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A photon number beyond the supported accuracy range was requested.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The truncation mass threshold cannot be reached under the photon-number cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace svbell
