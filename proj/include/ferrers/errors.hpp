#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

// Every failure a caller can act on derives from Error. Precondition
// violations that indicate a programming mistake throw std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotAPartition : public Error {
 public:
  using Error::Error;
};

class EmptyShape : public Error {
 public:
  using Error::Error;
};

class TooFewRows : public Error {
 public:
  using Error::Error;
};

class ShiftTooNegative : public Error {
 public:
  using Error::Error;
};

class EdgeNotPresent : public Error {
 public:
  using Error::Error;
};

class GraphTooLarge : public Error {
 public:
  using Error::Error;
};

class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

}  // namespace ferrers
