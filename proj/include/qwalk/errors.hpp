#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible domain (e.g. a coin angle).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input that is well-typed but inconsistent (non-normalized spinor, bad config).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a preallocated or configured capacity.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The power-law fit cannot be carried out on the requested window.
class FitDomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
