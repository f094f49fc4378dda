#pragma once

#include <stdexcept>
#include <string>

namespace thomcalc {

// Base for every computation failure. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnassignedVariable : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ConstantForm : public Error {
 public:
  using Error::Error;
};

class TruncationUnstable : public Error {
 public:
  using Error::Error;
};

class CoincidentPoles : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class MissingQhat : public Error {
 public:
  using Error::Error;
};

class CodimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InhomogeneousInput : public Error {
 public:
  using Error::Error;
};

class InfiniteMultiplicity : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace thomcalc
