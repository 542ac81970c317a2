#pragma once

#include "hypcont/linear_form.hpp"
#include "hypcont/var_expr.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace hypcont {

struct GammaFactor {
  LinearForm arg;
  int exponent_sign = 1;  // +1 numerator, -1 denominator
};

/// (base)_shift = Gamma(base + shift) / Gamma(base)
struct PochFactor {
  LinearForm base;
  LinearForm shift;
  int exponent_sign = 1;
};

struct PochKey {
  LinearForm base;
  LinearForm shift;
  auto operator<=>(const PochKey&) const = default;
  bool operator==(const PochKey&) const = default;
};

/// Product of Gamma functions, Pochhammer symbols, a sign (-1)^L, powers base^L and a rational.
/// Identical factors are merged and cancelled on construction, so equal products compare equal.
class FactorProduct {
 public:
  FactorProduct() = default;
  FactorProduct(Rational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  static FactorProduct gamma(const LinearForm& arg, int multiplicity = 1);
  static FactorProduct poch(const LinearForm& base, const LinearForm& shift, int multiplicity = 1);
  /// m! represented as (1)_m.
  static FactorProduct factorial(const Index& i, int multiplicity = 1);
  static FactorProduct sign(const LinearForm& exponent);
  static FactorProduct power(const VarExpr& base, const LinearForm& exponent);

  const std::map<LinearForm, int>& gammas() const { return gammas_; }
  const std::map<PochKey, int>& pochs() const { return pochs_; }
  const LinearForm& sign_exponent() const { return sign_; }
  const std::map<VarExpr, LinearForm>& powers() const { return powers_; }
  const Rational& constant() const { return constant_; }

  std::vector<GammaFactor> gamma_factors() const;
  std::vector<PochFactor> poch_factors() const;

  bool is_one() const;
  bool has_index_content() const;
  bool has_index_content(std::span<const Index> idx) const;

  FactorProduct& operator*=(const FactorProduct& o);
  FactorProduct& operator/=(const FactorProduct& o) { return *this *= o.inverse(); }
  friend FactorProduct operator*(FactorProduct a, const FactorProduct& b) { return a *= b; }
  friend FactorProduct operator/(FactorProduct a, const FactorProduct& b) { return a /= b; }
  FactorProduct inverse() const;

  void add_gamma(const LinearForm& arg, int mult);
  void add_poch(const LinearForm& base, const LinearForm& shift, int mult);
  void add_sign(const LinearForm& exponent);
  void add_power(const VarExpr& base, const LinearForm& exponent);
  void scale(const Rational& c) { constant_ *= c; }
  void clear_sign() { sign_ = LinearForm(); }
  void clear_powers() { powers_.clear(); }

  /// Maps every linear form (bases, shifts, arguments, exponents) through `fn`.
  template <class Fn>
  FactorProduct map_forms(Fn fn) const {
    FactorProduct out(constant_);
    for (const auto& [g, e] : gammas_) out.add_gamma(fn(g), e);
    for (const auto& [p, e] : pochs_) out.add_poch(fn(p.base), fn(p.shift), e);
    out.add_sign(fn(sign_));
    for (const auto& [b, x] : powers_) out.add_power(b, fn(x));
    return out;
  }

  FactorProduct rename(const std::map<Index, Index>& m) const;

  /// Mathematica-like rendering, e.g. "(x^m Pochhammer[a, m])/(m! Pochhammer[c, m])".
  std::string str() const { return str(""); }
  /// With `extra` written as one more numerator factor right after the powers.
  std::string str(const std::string& extra) const;
  std::string latex() const { return latex(""); }
  std::string latex(const std::string& extra) const;
  /// Parseable rendering in the series grammar.
  std::string grammar() const;

  bool operator==(const FactorProduct& o) const = default;

 private:
  std::map<LinearForm, int> gammas_;
  std::map<PochKey, int> pochs_;
  LinearForm sign_;
  std::map<VarExpr, LinearForm> powers_;
  Rational constant_{1};
};

/// True when (base)_shift is a factorial idx!.
bool is_factorial(const PochKey& k);

}  // namespace hypcont
