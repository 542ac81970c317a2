#pragma once

#include "hypcont/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace hypcont {

/// A base variable v, or the affine atom (1 - v).
struct Atom {
  std::string var;
  bool one_minus = false;
  auto operator<=>(const Atom&) const = default;
};

/// Argument expression of a series variable: coeff * prod(atom^k).
/// Closed under product, reciprocal and negation; x/y, -y, 1/y, 1-y, z/(z-1) all fit.
class VarExpr {
 public:
  VarExpr() = default;
  VarExpr(Rational c) : coeff_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  static VarExpr var(const std::string& name) { return atom(Atom{name, false}); }
  static VarExpr one_minus_var(const std::string& name) { return atom(Atom{name, true}); }
  static VarExpr atom(const Atom& a, std::int64_t k = 1);

  const Rational& coeff() const { return coeff_; }
  const std::map<Atom, std::int64_t>& atoms() const { return atoms_; }
  bool is_constant() const { return atoms_.empty(); }
  bool is_one() const { return atoms_.empty() && coeff_ == 1; }
  std::set<std::string> variables() const;

  VarExpr operator*(const VarExpr& o) const;
  VarExpr operator/(const VarExpr& o) const { return *this * o.inverse(); }
  VarExpr operator-() const;
  VarExpr inverse() const;
  VarExpr pow(std::int64_t k) const;
  /// 1 - this, when the result is again a monomial in v and (1 - v); nullopt otherwise.
  std::optional<VarExpr> one_minus() const;
  /// Drops the sign of the coefficient.
  VarExpr abs() const;

  /// Mathematica-like text: "x/y", "-y", "1 - y".
  std::string str() const;
  /// Parseable text for the series grammar.
  std::string grammar() const;
  std::string latex() const;
  /// "Abs[x/y]", "1/Abs[y]".
  std::string abs_str() const;

  template <class T>
  T eval(const std::map<std::string, T>& values) const {
    T out = rational_to<T>(coeff_);
    for (const auto& [a, k] : atoms_) {
      auto it = values.find(a.var);
      if (it == values.end()) throw std::out_of_range("no value for variable " + a.var);
      T base = a.one_minus ? T(1) - it->second : it->second;
      T p = 1;
      for (std::int64_t j = 0; j < (k < 0 ? -k : k); ++j) p *= base;
      out = k < 0 ? T(out / p) : T(out * p);
    }
    return out;
  }

  bool operator==(const VarExpr& o) const = default;
  std::strong_ordering operator<=>(const VarExpr& o) const;

 private:
  Rational coeff_{1};
  std::map<Atom, std::int64_t> atoms_;
};

}  // namespace hypcont
