#pragma once

// Textual syntax for ring descriptors and elements.
//
//   ring    := "Q" | "Z" | "Z/" n | "poly(" ring ";" var ("," var)* [";" order] ")"
//   order   := "lex" | "deglex" | "degrevlex"            (default lex)
//   element := decimal integer | p/q | sum of terms c*x^e*y^f
//
// Whitespace is insignificant. In terms, "*" and "^1" may be omitted
// ("3x^2y", "-x + 1"); variable names are matched longest first.

#include <string>
#include <string_view>

#include "rrgb/ring.hpp"

namespace rrgb {

RingDescriptor parse_ring(std::string_view text);
std::string render_ring(const RingDescriptor& ring);

Element parse_element(std::string_view text, const RingDescriptor& ring);
std::string render_element(const Element& e, const RingDescriptor& ring);

}  // namespace rrgb
