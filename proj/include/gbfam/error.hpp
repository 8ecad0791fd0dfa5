#pragma once

#include <stdexcept>
#include <string>

namespace gbfam {

// Input-language diagnostic with a source location.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

// Violated analysis precondition: point off the base scheme, prime not
// containing the base relations, zero localizing element, ...
class analysis_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Broken internal contract: ring mismatch, exponent overflow, inexact
// division inside a colon computation.
class structural_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace gbfam
