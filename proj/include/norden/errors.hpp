#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace norden {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different, non-constant parameter lists.
class ParameterMismatch : public Error {
public:
  using Error::Error;
};

/// An evaluation assignment does not cover a parameter that occurs.
class MissingParameter : public Error {
public:
  explicit MissingParameter(std::string name)
      : Error("missing value for parameter '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

/// Gaussian elimination found no pivot in column `row()`.
class SingularMatrix : public Error {
public:
  explicit SingularMatrix(std::size_t row)
      : Error("matrix is singular: elimination failed at row " + std::to_string(row + 1)),
        row_(row) {}
  /// Zero-based row index at which elimination failed.
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

class NotSymmetric : public Error {
public:
  NotSymmetric(std::size_t i, std::size_t j)
      : Error("matrix is not symmetric at (" + std::to_string(i + 1) + ", " +
              std::to_string(j + 1) + ")"),
        i_(i), j_(j) {}
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

private:
  std::size_t i_, j_;
};

/// A symmetric form whose congruence diagonalization leaves a zero on the diagonal.
class DegenerateForm : public Error {
public:
  explicit DegenerateForm(std::size_t index)
      : Error("symmetric form is degenerate (zero diagonal entry at index " +
              std::to_string(index + 1) + " after congruence reduction)"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  /// One-based line number, or 0 when the input is a single expression.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Structure constants violate antisymmetry.
class InconsistentBrackets : public Error {
public:
  using Error::Error;
};

/// g and J do not form an almost complex structure with Norden metric.
class NordenViolation : public Error {
public:
  using Error::Error;
};

class DegeneratePlane : public Error {
public:
  using Error::Error;
};

} // namespace norden
