#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tis {

// Root of every error the library throws on bad input or violated preconditions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidInstance : public Error {
public:
  using Error::Error;
};

class UnknownVertex : public Error {
public:
  explicit UnknownVertex(const std::string& name) : Error("unknown vertex '" + name + "'") {}
};

// The operation is only defined for unit interval instances.
class NonUnitInstance : public Error {
public:
  using Error::Error;
};

// An edges-mode layer that is not an interval graph.
class NotIntervalLayer : public Error {
public:
  using Error::Error;
};

class OrderingIncompatible : public Error {
public:
  OrderingIncompatible(std::size_t u, std::size_t v, const std::string& message)
      : Error(message), u_(u), v_(v) {}

  std::size_t u() const noexcept { return u_; }
  std::size_t v() const noexcept { return v_; }

private:
  std::size_t u_;
  std::size_t v_;
};

// An exhaustive oracle was asked to run above its configured size cap.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

} // namespace tis
