#pragma once

#include <stdexcept>
#include <string>

namespace qcrystal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter exceeds the rank n of the alphabet in use.
class RankError : public Error {
 public:
  using Error::Error;
};

// Compositions, partitions or tableaux of incompatible shape or weight.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A filling that violates the defining inequalities of its tableau family.
class InvalidTableau : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A built structure does not have the shape the theory guarantees
// (e.g. a component with two highest-weight vertices).
class StructureError : public Error {
 public:
  using Error::Error;
};

// A mechanically checked statement failed on a concrete input.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcrystal
