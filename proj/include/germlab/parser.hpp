#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

// Expression grammar over + - * ^ ( ) with integer and p/q rational
// literals.  Implicit multiplication is rejected ("2*x", never "2x");
// ^ is right-associative, binds tighter than unary minus, and accepts
// nonnegative integer literal exponents only.
Polynomial parse_poly(const std::string& src, const std::vector<std::string>& vars);

// Canonical text form; parse_poly(format_poly(p, vars), vars) == p.
std::string format_poly(const Polynomial& p, const std::vector<std::string>& vars);

}  // namespace germlab
