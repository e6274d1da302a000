#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetob {

/// Exact rational number; canonicalized (lowest terms, positive denominator)
/// after every arithmetic operation.
using Scalar = mpq_class;

/// `p/q` in lowest terms, `q` omitted when 1.
std::string format_scalar(const Scalar& x);

/// Accepts `p` or `p/q` with optional sign. Throws Error(Parse).
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

} // namespace jetob
