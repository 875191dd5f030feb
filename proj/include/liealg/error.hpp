#pragma once

#include <stdexcept>
#include <string>

namespace liealg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotContained : public Error {
 public:
  using Error::Error;
};

class NotALieAlgebra : public Error {
 public:
  NotALieAlgebra(const std::string& what, int i, int j, int k)
      : Error(what), triple_{i, j, k} {}
  /// Offending basis triple, 1-based.
  const int* triple() const { return triple_; }

 private:
  int triple_[3];
};

class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("algebra is not nilpotent") {}
};

class DerivedNotLine : public Error {
 public:
  explicit DerivedNotLine(int dim)
      : Error("derived subalgebra has dimension " + std::to_string(dim) +
              ", expected 1") {}
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace liealg
