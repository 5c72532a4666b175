#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qforms/poly.hpp"

namespace qforms {

/// Error in the textual polynomial grammar; position is the 1-based column
/// of the offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position);

    std::size_t position;
};

/// Parses expressions like "2*t^3 + t - 1" over F_q: integer literals
/// (reduced mod q), the variable t, the operators + - * ^ (nonnegative
/// integer exponents), unary minus, and parentheses.  Whitespace is
/// ignored; multiplication must be written explicitly.
Poly parse_poly(std::string_view text, const Fq& field);

}  // namespace qforms
