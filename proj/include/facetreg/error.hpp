#pragma once

#include <stdexcept>
#include <string>

namespace facetreg {

// Base of everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: mismatched ambient sizes, nested facets, bad parent maps.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured cap (generators, lattice size, strand faces) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Something that a theorem guarantees did not happen.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace facetreg
