#ifndef BITENSOR_CLI_PARSE_HPP
#define BITENSOR_CLI_PARSE_HPP

#include <string_view>

#include "bitensor/element.hpp"

namespace bitensor::cli {

/// Parses an expression over the alphabet {x1..xd}.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := rational [product] | product
///   product  := tensor ('|' tensor)*
///   tensor   := factor ('*' factor)*
///   factor   := 'x' digits | '1' | '(' expr ')'
///   rational := digits ['/' digits]
///
/// '*' is the word tensor and binds tighter than '|', the phrase product.
/// A leading rational multiplies the whole product that follows it.
///
/// Throws SyntaxError (with a 0-based character position), LetterOutOfRange,
/// or NotWordSupported when '*' is applied to a multi-word operand.
Element parse_expression(std::string_view source, int dim);

}  // namespace bitensor::cli

#endif  // BITENSOR_CLI_PARSE_HPP
