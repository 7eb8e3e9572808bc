#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "folocal/formula.hpp"

namespace folocal {

/// Parse failure with a byte offset into the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Concrete syntax:
///   formula  := or_expr ('->' formula)?                  (right associative)
///   or_expr  := and_expr ('or' and_expr)*
///   and_expr := unary ('and' unary)*
///   unary    := 'not' unary | quant | primary
///   quant    := ('exists' | 'forall') IDENT (quant | '(' formula ')')
///   primary  := IDENT '(' IDENT (',' IDENT)* ')'
///             | IDENT '=' IDENT
///             | 'dist' '(' IDENT ',' IDENT ')' ('<=' | '>') NUMBER
///             | '(' formula ')'
/// Rebinding a variable that is already in scope is rejected.
FormulaPtr parse_formula(std::string_view text);

} // namespace folocal
