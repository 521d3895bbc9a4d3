#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace bomc {

/// Exact rational scalar. Always normalized (positive denominator, lowest
/// terms). Expression templates are disabled so `auto` behaves like a value.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "p", "p/q", or a decimal such as "-1.25" / "3." / ".5" into an exact
/// rational. Throws std::invalid_argument on malformed text or a zero
/// denominator.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" form, denominator always printed ("2/1" for integers).
std::string to_fraction_string(const Rat& r);

/// Shortest form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

double to_double(const Rat& r);

/// Exact square root when r is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

}  // namespace bomc
