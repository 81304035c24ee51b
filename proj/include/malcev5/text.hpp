#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "malcev5/alternative.hpp"
#include "malcev5/element.hpp"

namespace malcev5 {

/// Malformed element expression; offset() is the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Message used when a monomial lists its letters out of order ("ba").
inline constexpr std::string_view kLetterOrderMessage = "monomial letters must be in order a..e";

/// Parses an element such as "1/6 abcd^2e - 1/12 e^3" or "2*a*b*d + 3".
///
///   element  := ['+'|'-'] term (('+'|'-') term)*
///   term     := rational ['*'] monomial | monomial | rational
///   rational := uint ['/' uint]
///   monomial := factor (['*'] factor)*,  factor := letter ['^' uint]
///
/// Letters inside one monomial must be strictly increasing. Blanks may
/// separate any two tokens; U+2212 is accepted as a minus sign. Like terms
/// are combined.
UElement parse_element(std::string_view text);

/// Canonical text: terms in display order, reduced fractions, "0" for zero.
std::string format_element(const UElement& x);
std::string format_element(const AElement& x);

/// Structured form: a JSON array of {"coeff": "p/q", "exp": [i,j,k,l,m]},
/// with an extra "type" (1 or 2) for elements of A(M).
std::string format_json(const UElement& x);
std::string format_json(const AElement& x);

}  // namespace malcev5
