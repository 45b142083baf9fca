#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "coiso/ring/polynomial.hpp"

namespace coiso {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' unary) | ('/' integer))*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | name | '(' expr ')'
// Names match [a-zA-Z][a-zA-Z0-9_]* and must belong to the context.
Polynomial parse_polynomial(const std::string& text, const VariableContext& ctx);

}  // namespace coiso
