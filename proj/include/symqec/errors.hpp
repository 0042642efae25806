#pragma once

#include <stdexcept>
#include <string>

namespace symqec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WidthError : public Error {
 public:
  using Error::Error;
};

class PositionError : public Error {
 public:
  using Error::Error;
};

class UnitarityError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbolError : public Error {
 public:
  explicit UnboundSymbolError(const std::string& symbol)
      : Error("unbound symbol: " + symbol), symbol_(symbol) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// Parse failures carry the 1-based source location of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace symqec
