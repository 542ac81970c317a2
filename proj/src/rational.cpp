#include "hypcont/rational.hpp"

#include <algorithm>

#include <cmath>
#include <stdexcept>

namespace hypcont {

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool neg = s[0] == '-';
    std::string digits = s.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string all = whole + frac;
    if (all.empty() || all.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed rational '" + s + "'");
    // Leading zeros would make the digits read as octal.
    all.erase(0, std::min(all.find_first_not_of('0'), all.size() - 1));
    Integer num(all);
    Rational r(num, den);
    return neg ? Rational(-r) : r;
  }
  // Decimal digits only, so that "010" is ten rather than octal.
  auto integer = [&](std::string d) {
    bool neg = !d.empty() && (d[0] == '-' || d[0] == '+');
    std::string body = neg ? d.substr(1) : d;
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed rational '" + s + "'");
    body.erase(0, std::min(body.find_first_not_of('0'), body.size() - 1));
    Integer v(body);
    return d[0] == '-' ? Integer(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer(s));
  Integer den = integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  try {
    return Rational(integer(s.substr(0, slash)), den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

long double to_long_double(const Rational& q) {
  return static_cast<long double>(numerator_of(q).convert_to<long double>() /
                                  denominator_of(q).convert_to<long double>());
}

Rational rational_approx(long double x, std::int64_t max_den) {
  bool neg = x < 0;
  if (neg) x = -x;
  // Convergents h/k of the continued fraction of x.
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double rem = x;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(rem);
    Integer ai(static_cast<long long>(a));
    Integer h2 = ai * h1 + h0;
    Integer k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = rem - a;
    if (frac < 1e-18L) break;
    rem = 1.0L / frac;
  }
  if (k1 == 0) return Rational(0);
  Rational r(h1, k1);
  return neg ? Rational(-r) : r;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

}  // namespace hypcont
