#pragma once

#include <stdexcept>
#include <string>

namespace logjones {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented range of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Polynomial division left a remainder where the mathematics says it cannot.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// A limit q -> xi does not exist or could not be resolved.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds the hard-coded size bounds.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// A computation route lacks the data it needs (e.g. Habiro coefficients).
class RouteUnavailable : public Error {
 public:
  using Error::Error;
};

/// Multi-component link closures are rejected.
class NotAKnot : public Error {
 public:
  using Error::Error;
};

}  // namespace logjones
