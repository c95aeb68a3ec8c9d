#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyctrl {

// Raised when a dense intermediate (unfolding, Kronecker power, symbolic
// enumeration) would exceed its configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(Format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polyctrl
