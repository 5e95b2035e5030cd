#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "realclass/polyring.hpp"

namespace realclass {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline constexpr int kMaxExponent = 64;

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := NUMBER | IDENT | '(' expr ')'
//   NUMBER  := INTEGER ('/' INTEGER)?
// Implicit multiplication is rejected; exponents are literal integers in
// [0, kMaxExponent].
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables);

// Splits "x,y,z" and validates identifiers and distinctness.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace realclass
