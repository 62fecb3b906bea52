#pragma once

#include <stdexcept>
#include <string>

#include "picard/laurent.hpp"

namespace picard {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t offset);
  /// Byte offset into the input at which parsing failed.
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Parses a polynomial in the variables x0..xn.
///
/// Grammar (ASCII):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coeff] factor*          at least one of coeff, factor
///   coeff  := integer | integer '/' integer | '(' rational ')'
///   factor := 'x' index ['^' signed-integer]
/// Whitespace and '*' between factors are optional.
///
/// Throws ParseError (with offset) on syntax errors and on variable
/// indices exceeding n.
LaurentPoly parse_poly(const std::string& text, int n);

}  // namespace picard
