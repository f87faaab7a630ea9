// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lrspike {

/// Base class for all lrspike errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (carries a 1-based line number when known).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Matrix Market field this reader does not support (complex, pattern).
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Zero diagonal entry encountered while scaling.
class SingularScalingError : public Error {
 public:
  SingularScalingError(const std::string& msg, long row) : Error(msg), row_(row) {}
  long row() const { return row_; }

 private:
  long row_;
};

/// Requested partition layout cannot satisfy n_i > k.
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// A nonzero falls outside the block-tridiagonal pattern for (p, k).
class NotBlockTridiagonalError : public Error {
 public:
  NotBlockTridiagonalError(const std::string& msg, long row, long col)
      : Error(msg), row_(row), col_(col) {}
  long row() const { return row_; }
  long col() const { return col_; }

 private:
  long row_;
  long col_;
};

/// Exact zero pivot in the sparse block factorization.
class SingularBlockError : public Error {
 public:
  SingularBlockError(const std::string& msg, long column) : Error(msg), column_(column) {}
  long column() const { return column_; }

 private:
  long column_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// G_i or H_i of a truncated-preconditioner interface is numerically singular.
class IllConditionedInterfaceError : public Error {
 public:
  IllConditionedInterfaceError(const std::string& msg, int interface_index, double cond_estimate)
      : Error(msg), interface_(interface_index), cond_(cond_estimate) {}
  int interface_index() const { return interface_; }
  double cond_estimate() const { return cond_; }

 private:
  int interface_;
  double cond_;
};

}  // namespace lrspike
