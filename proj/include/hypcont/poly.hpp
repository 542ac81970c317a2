#pragma once

#include "hypcont/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypcont {

/// Dense univariate polynomial with rational coefficients; coeffs()[i] multiplies x^i.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly x();
  /// alpha * x + beta
  static UPoly linear(const Rational& alpha, const Rational& beta);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  UPoly pow(int k) const;
  bool operator==(const UPoly&) const = default;

  /// Quotient and remainder; throws on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and the sign of the original leading coefficient.
  UPoly primitive() const;

  Rational operator()(const Rational& x) const;
  long double eval(long double x) const;
  int sign_at(const Rational& x) const;

  /// Ascending text in `var`, e.g. "1 - 12 r".
  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);

/// Yun's square-free decomposition: p = lc * prod f_i^{m_i} with monic, pairwise coprime f_i.
struct SquareFree {
  Rational lc;
  std::vector<std::pair<UPoly, int>> factors;
};
SquareFree square_free(const UPoly& p);

/// A real algebraic number given by a square-free polynomial and an isolating interval (lo, hi].
/// `exact` is set when the number is rational.
struct RealRoot {
  UPoly poly;
  Rational lo, hi;
  std::optional<Rational> exact;
  long double approx() const;
  /// Shrinks the isolating interval below `width`.
  void refine(const Rational& width);
};

/// Distinct real roots of p strictly inside (lo, hi), ascending; hi = nullopt means +infinity.
std::vector<RealRoot> real_roots(const UPoly& p, const Rational& lo, const std::optional<Rational>& hi);

/// Polynomial in (r, s) with rational coefficients; key (i, j) multiplies r^i s^j.
class BPoly {
 public:
  BPoly() = default;
  const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }
  void add(int i, int j, const Rational& c);
  bool is_zero() const { return t_.empty(); }
  int deg_r() const;
  int deg_s() const;
  int total_degree() const;

  BPoly operator*(const BPoly& o) const;
  BPoly operator-() const;
  bool operator==(const BPoly&) const = default;

  /// Coefficients in s as polynomials in r: result[j] multiplies s^j.
  std::vector<UPoly> coeffs_in_s() const;
  static BPoly from_coeffs_in_s(const std::vector<UPoly>& cs);
  std::vector<UPoly> coeffs_in_r() const;
  static BPoly from_coeffs_in_r(const std::vector<UPoly>& cs);

  Rational operator()(const Rational& r, const Rational& s) const;
  long double eval(long double r, long double s) const;

  /// Integer primitive form with the lexicographically largest (r-degree, s-degree) monomial positive.
  BPoly normalized() const;
  /// Removes every factor depending on r only or on s only (polynomial content in either variable).
  BPoly without_univariate_content() const;

  /// Ascending text with the given variable renderings, e.g. "1 + 8 r + 16 r^2 - s".
  std::string str(const std::string& r, const std::string& s) const;

 private:
  std::map<std::pair<int, int>, Rational> t_;
};

/// Resultant in t of r*Dr(t) - Nr(t) and s*Ds(t) - Ns(t) (formal degrees), as a polynomial in (r, s).
BPoly eliminate(const UPoly& Nr, const UPoly& Dr, const UPoly& Ns, const UPoly& Ds);

/// Resultant in t of T(t) and y*D(t) - N(t), as a polynomial in y: it vanishes at N(t0)/D(t0) for every root t0 of T.
UPoly image_polynomial(const UPoly& T, const UPoly& N, const UPoly& D);

/// Determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace hypcont
