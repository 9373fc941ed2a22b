#ifndef PGK_ERRORS_HPP
#define PGK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgk {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Presentation file could not be parsed.  Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateAtomError : public ParseError {
 public:
  DuplicateAtomError(const std::string& name, std::size_t line, std::size_t col)
      : ParseError("duplicate atom '" + name + "'", line, col) {}
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& name)
      : Error("unknown atom '" + name + "'") {}
};

class MalformedRelationError : public Error {
 public:
  explicit MalformedRelationError(const std::string& what)
      : Error("malformed relation: " + what) {}
};

// Two relations define f_L or f_R on the same ordered pair of atoms.
class ConflictingComplementError : public Error {
 public:
  explicit ConflictingComplementError(const std::string& what)
      : Error("conflicting complement: " + what) {}
};

// Garside-element search hit its length bound without success.
class SearchExhaustedError : public Error {
 public:
  explicit SearchExhaustedError(std::size_t max_word_length)
      : Error("no Garside element found within word length " +
              std::to_string(max_word_length)),
        max_word_length_(max_word_length) {}
  std::size_t max_word_length() const { return max_word_length_; }

 private:
  std::size_t max_word_length_;
};

// The rewriting-closure saturation hit its node budget.
class ClosureBudgetExceededError : public Error {
 public:
  explicit ClosureBudgetExceededError(std::size_t budget)
      : Error("rewriting closure exceeded node budget " +
              std::to_string(budget)),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

// The node's graph is incomplete but no admissible amalgam split exists.
class NoValidSplitError : public Error {
 public:
  explicit NoValidSplitError(const std::string& what)
      : Error("no valid FC split: " + what) {}
};

// Violates a structural guarantee of the construction; always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("internal inconsistency: " + what) {}
};

class IntersectionNotParabolicError : public InternalError {
 public:
  explicit IntersectionNotParabolicError(const std::string& what)
      : InternalError("intersection not parabolic: " + what) {}
};

}  // namespace pgk

#endif  // PGK_ERRORS_HPP
