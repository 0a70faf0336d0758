#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace supersplit {

// Exact coefficient arithmetic. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional leading sign; q must be nonzero.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace supersplit
