#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace opsplit {

// Exact rational. gmpxx keeps arithmetic results canonical.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q" with q > 0 in decimal. Throws Error(ParseError).
Scalar parse_scalar(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace opsplit
