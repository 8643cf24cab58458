#pragma once

#include <stdexcept>
#include <string>

namespace idist {

/// Precondition or configuration violation reported by the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size cap (for example q > 3^9 for distribution work) was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace idist
