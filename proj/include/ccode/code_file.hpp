#pragma once

#include <string>
#include <string_view>

#include "ccode/array_code.hpp"

namespace ccode {

// Text format, one code per file:
//
//   ccode/v1
//   length 8
//   kappa 2
//   S0: 1,2 3,5 4,6
//   S1: 0,3 2,7 4,5
//
// Lines starting with '#' are comments; pairs are written in canonical
// order. parse(write(code)) == code exactly.
std::string write_code_file(const ArrayCode& code);

// Throws ParseError (with position) for malformed text and ValidationError
// when the loaded starter or code invariants fail. With verify = false the
// two-column condition is skipped, so deliberately broken-but-well-shaped
// codes can be loaded for testing.
ArrayCode parse_code_file(std::string_view text, bool verify = true);

}  // namespace ccode
