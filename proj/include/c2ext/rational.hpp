#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace c2ext {

/// Exact rational scalar. GMP-backed; always stored canonically
/// (lowest terms, positive denominator, 0 as 0/1).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

inline Rational rational_from_string(const std::string& text) {
    return Rational(text);
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace c2ext
