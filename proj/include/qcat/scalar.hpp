#pragma once

#include "qcat/error.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcat {

/// Exact rational. mpq_class keeps the value canonical (positive
/// denominator, reduced) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(Parse) on malformed input or a
/// zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& x);

/// x^e for any integer e; x must be nonzero when e < 0.
Scalar power(const Scalar& x, long e);

inline int parity_sign(int parity) { return (parity & 1) ? -1 : 1; }

}  // namespace qcat
