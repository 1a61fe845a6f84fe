#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftrisk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed, missing or inconsistent input data. The CLI maps these to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t row, std::size_t column, const std::string& what)
      : InputError(source + ": row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// A missing hour inside an hourly series.
class GapError : public InputError {
 public:
  GapError(const std::string& source, const std::string& first_missing)
      : InputError(source + ": missing hour " + first_missing), first_missing_(first_missing) {}

  const std::string& first_missing() const noexcept { return first_missing_; }

 private:
  std::string first_missing_;
};

class AlignmentError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Numerical failure (singular system, calibration that cannot reach its target). Exit status 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class CalibrationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A caller broke an operation's precondition. Exit status 3.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A weather shift reaches past the padding loaded around the winter window.
class BoundsError : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace shiftrisk
