#pragma once

#include <string>
#include <variant>

#include "arthur/groups.hpp"
#include "arthur/params.hpp"

namespace arthur {

// Error classes map to CLI exit codes: syntax -> 1, validation -> 2.
struct ParseError {
    std::size_t position = 0;
    std::string message;
};

template <class T>
using ParseResult = std::variant<T, ParseError>;

// Grammar: 'Sp(' EVEN ')' | 'SO(' INT ',' INT ')' | 'U(' INT ',' INT ')',
// whitespace-insensitive.
ParseResult<GroupDescriptor> parse_group(std::string_view text);

// Grammar: param := term ('+' term)*
//          term  := summand ('x'|'*') 'R[' INT ']'
//          summand := 'V(' s ',' INT ')' | 'W(' s ',' ('0'|'1') ')'
//          s := RATIONAL ['i']
// The result is validated; validation failures are reported separately
// from syntax errors.
struct ParamError {
    bool syntax = true;  // false: validation failure
    std::size_t position = 0;
    std::string message;
};
std::variant<ArthurParameter, ParamError> parse_param(std::string_view text,
                                                      const GroupDescriptor& group);

// Canonical rendering; parse_param(render_param(psi)) == psi.canonical().
std::string render_param(const ArthurParameter& psi);

}  // namespace arthur
