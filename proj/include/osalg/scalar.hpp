#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace osalg {

/// Exact rational scalar. Values are kept in canonical form: fully reduced,
/// denominator positive. Arithmetic on canonical operands stays canonical;
/// anything built from raw numerator/denominator pairs must go through
/// make_scalar or parse_scalar.
using Scalar = mpq_class;

/// Builds a canonical rational from an integer pair. q must be nonzero.
Scalar make_scalar(long p, long q = 1);

/// Parses "p" or "p/q" with optional leading minus. Rejects empty input,
/// zero denominators and stray characters.
Scalar parse_scalar(std::string_view text);

/// Renders as "p" or "p/q", reduced, denominator positive and omitted when 1.
std::string scalar_to_string(const Scalar& s);

/// -1, 0 or +1.
int scalar_sign(const Scalar& s);

}  // namespace osalg
