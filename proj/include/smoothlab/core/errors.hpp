#pragma once

#include <stdexcept>
#include <string>

namespace smoothlab {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map the whole family onto one exit path.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed experiment configuration or an unnormalized/uncertified input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Arguments from incompatible domains (e.g. a grid distribution checked
// against the unit-interval base measure).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Violation of the round ordering of the online game, or a learner leaving
// its declared label domain.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// A stored realizability witness mislabels part of its stream.
class WitnessError : public Error {
 public:
  using Error::Error;
};

// A sample that no single separation hypothesis can label.
class RealizabilityError : public Error {
 public:
  using Error::Error;
};

// A label of the wrong variant was handed to an operation.
class LabelTypeError : public Error {
 public:
  using Error::Error;
};

// Numeric precondition failure (k > n/2, delta outside (0,1), ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace smoothlab
