#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubicsurf/divisor.hpp"

namespace cubicsurf {

struct ParseError : std::runtime_error {
  std::size_t position;  // 0-based offset into the source text
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Grammar (ASCII, whitespace free between tokens allowed):
///   expr  := term (("+"|"-") term)*
///   term  := [integer "*"?] atom
///   atom  := "l" | "b"1-6 | "H" | "K" | named | "[" int{,int}x6 "]"
///   named := "L[i]" | "L[i,j]" | "L^[j]" | "C[i]" | "C^[i,j]" | "C^[j]"
///          | "T[]" | "T[i,j,k]" | "T[i|j]" | "T^[i,j,k]" | "T^[]"
/// "T[0]" and "T^[0]" are accepted as aliases for "T[]" and "T^[]".
DivisorClass parse_class(std::string_view text);

/// Canonical rendering, e.g. "3l-b1-b2-b3-b4-b5-b6"; parse_class is a left
/// inverse.  The zero class prints as "0l".
std::string print_class(const DivisorClass& d);

/// A parsed expression keeping its source text around.
struct ClassExpression {
  std::string source;
  DivisorClass value;

  static ClassExpression parse(std::string_view text) {
    return {std::string(text), parse_class(text)};
  }
  std::string canonical() const { return print_class(value); }
};

}  // namespace cubicsurf
