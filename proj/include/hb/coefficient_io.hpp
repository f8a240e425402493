#pragma once

#include <string>

#include "hb/coefficients.hpp"

namespace hb {

// Self-describing coefficient file (JSON): format_version, basis metadata
// (kind, domain bounds or "real-line", K) and [re, im] entry pairs ordered
// from the lowest retained index upward. Values are written with 17
// significant digits so a write/read round trip reproduces every double
// bit-exactly.
//
// Failure mapping: unreadable/unwritable file or malformed JSON -> io_error;
// well-formed JSON violating the format contract -> invalid_input.

void write_coefficients(const std::string& path, const CoefficientVector& coeffs);
CoefficientVector read_coefficients(const std::string& path);

std::string format_double17(double v); // shortest %.17g rendering used above

} // namespace hb
