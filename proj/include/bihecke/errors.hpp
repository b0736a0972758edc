#pragma once

#include <stdexcept>
#include <string>

namespace bihecke {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured element or dimension cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Arguments violate a precondition (bad descriptor, incomparable pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace bihecke
