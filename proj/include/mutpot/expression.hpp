#pragma once

// Exact parser for potentials: integers, rationals, x1..xr, + - * / ^ and
// parentheses. Division is allowed only by c * X^m * prod (1+X^a)^e.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mutpot/rational_function.hpp"

namespace mutpot {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    /// Zero-based byte offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

using Expression = std::variant<LaurentPoly, BinomialRationalFn>;

/// Laurent results come back as LaurentPoly, everything else as a
/// normalized BinomialRationalFn. Variables beyond x<rank> are rejected.
Expression parse_expression(std::string_view text, std::size_t rank = 2);

/// Same parse, always as a rational function.
BinomialRationalFn parse_function(std::string_view text, std::size_t rank = 2);

}  // namespace mutpot
