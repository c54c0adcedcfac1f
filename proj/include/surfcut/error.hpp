#pragma once

#include <stdexcept>
#include <string>

namespace surfcut {

/// Malformed embedded graph: rotation system, dart bookkeeping, connectivity.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent curve (event list does not follow the faces of G).
class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input to an operation (unknown ids, empty terminal set, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cut graph or topology that does not match the surface it claims to cut.
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A crossing sequence that cannot be lifted through the disk schema.
class SequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run beyond its size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text instance could not be parsed; carries line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace surfcut
