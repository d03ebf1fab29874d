#pragma once

#include <stdexcept>
#include <string>

namespace splitorder {

// Base for every error raised by the library. Subclasses name the failed
// precondition; callers that only care about "bad input" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
};

class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class ConstantTermNotOne : public Error {
 public:
  using Error::Error;
};

class DegreeBeyondTruncation : public Error {
 public:
  using Error::Error;
};

class SingleLetter : public Error {
 public:
  using Error::Error;
};

class NotOrderP : public Error {
 public:
  using Error::Error;
};

class NonFinite : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

}  // namespace splitorder
