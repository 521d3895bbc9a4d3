#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bomc {

/// Input violates an operation's precondition (bad cut side, odd |T|, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive method was asked to run above its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what + " (size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap) + ")"),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace bomc
