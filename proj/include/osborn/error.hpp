#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace osborn {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadDimensions : public Error {
 public:
  using Error::Error;
};

/// A row or column of a candidate table repeats a value.
class NotLatinSquare : public Error {
 public:
  enum class Axis { row, column };

  NotLatinSquare(Axis axis, std::size_t index, int duplicate)
      : Error(std::string(axis == Axis::row ? "row " : "column ") +
              std::to_string(index) + " repeats value " +
              std::to_string(duplicate)),
        axis_(axis),
        index_(index),
        duplicate_(duplicate) {}

  Axis axis() const noexcept { return axis_; }
  std::size_t index() const noexcept { return index_; }
  int duplicate() const noexcept { return duplicate_; }

 private:
  Axis axis_;
  std::size_t index_;
  int duplicate_;
};

class NoIdentity : public Error {
 public:
  NoIdentity() : Error("no element is a two-sided identity") {}
};

/// Table file could not be parsed; message carries source and line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& tag) : Error("unknown identity tag '" + tag + "'") {}
};

class UnknownStatement : public Error {
 public:
  explicit UnknownStatement(const std::string& tag) : Error("unknown statement tag '" + tag + "'") {}
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ClosureBoundExceeded : public Error {
 public:
  ClosureBoundExceeded(std::size_t reached, std::size_t bound)
      : Error("group closure exceeded bound " + std::to_string(bound) + " (reached " +
              std::to_string(reached) + " elements)"),
        reached_(reached) {}

  std::size_t partial_size() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

class NotOsborn : public Error {
 public:
  NotOsborn() : Error("loop is not an Osborn loop") {}
};

class NotCC : public Error {
 public:
  NotCC() : Error("loop is not conjugacy closed") {}
};

class NotInMultGroup : public Error {
 public:
  NotInMultGroup() : Error("permutation is not in the multiplication group") {}
};

class SchemeInvariantViolated : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  OrderTooLarge(std::size_t n, std::size_t bound)
      : Error("order " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound)) {}
};

}  // namespace osborn
