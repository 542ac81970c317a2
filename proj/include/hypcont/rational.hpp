#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace hypcont {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// "3", "-1/2"
std::string to_string(const Rational& q);

/// Accepts "3", "-7/2", "0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

/// Closest rational with denominator <= max_den (continued fractions).
Rational rational_approx(long double x, std::int64_t max_den = 1000000);

/// Converts to a floating type (builtin or multiprecision).
template <class T>
T rational_to(const Rational& q) {
  if constexpr (std::is_floating_point_v<T>)
    return static_cast<T>(to_long_double(q));
  else
    return T(numerator_of(q).str()) / T(denominator_of(q).str());
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace hypcont
