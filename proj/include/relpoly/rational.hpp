#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace relpoly {

/// Exact rational number. All algebra in this library is carried out over
/// arbitrary-precision rationals; no floating point enters the core.
using Rat = mpq_class;

inline int sign(const Rat& x) { return sgn(x); }

/// Renders a rational in lowest terms as "p" or "p/q" with q > 0.
std::string rat_to_string(const Rat& x);

/// Parses "p", "p/q", or a plain decimal such as "0.25" / "-1.5".
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

/// Fixed-precision decimal rendering, rounding half away from zero.
std::string rat_to_decimal(const Rat& x, int digits);

/// Splits a comma-separated list of rationals.
std::vector<Rat> parse_rat_list(const std::string& csv);

/// Nearest double (GMP rounding); used only at the Monte Carlo boundary.
inline double rat_to_double(const Rat& x) { return x.get_d(); }

}  // namespace relpoly
