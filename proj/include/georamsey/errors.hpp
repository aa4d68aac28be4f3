#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace georamsey {

// Every contract violation raised by the library derives from Error so the CLI
// can map the whole family onto a single exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadInput : public Error {
 public:
  using Error::Error;
};

class GeneralPositionViolated : public Error {
 public:
  GeneralPositionViolated(std::size_t a, std::size_t b, std::size_t c)
      : Error("collinear triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
              std::to_string(c) + ")"),
        triple_{a, b, c} {}

  const std::size_t* triple() const noexcept { return triple_; }

 private:
  std::size_t triple_[3];
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LevelTooLarge : public Error {
 public:
  using Error::Error;
};

class BadLabels : public Error {
 public:
  using Error::Error;
};

class BadBase : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class IncomparablePair : public Error {
 public:
  IncomparablePair(std::size_t a, std::size_t b)
      : Error("vertices " + std::to_string(a) + " and " + std::to_string(b) +
              " are comparable under neither order"),
        a_(a),
        b_(b) {}

  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t examined, std::uint64_t budget)
      : Error("enumeration budget of " + std::to_string(budget) + " exhausted after " +
              std::to_string(examined) + " subsets"),
        examined_(examined) {}

  std::uint64_t examined() const noexcept { return examined_; }

 private:
  std::uint64_t examined_;
};

}  // namespace georamsey
