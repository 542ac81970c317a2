#pragma once

#include "hypcont/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hypcont {

/// Symbolic hypergeometric parameter (a, b1, c2, ...). Equality is name equality.
struct Param {
  std::string name;
  auto operator<=>(const Param&) const = default;
};

/// Summation index; only ever takes non-negative integer values.
struct Index {
  std::string name;
  auto operator<=>(const Index&) const = default;
};

/// Values for parameters and indices, keyed by symbol name.
using Bindings = std::map<std::string, Rational>;

/// Exact affine form: constant + sum(q_i * param_i) + sum(k_j * index_j), q rational, k integer.
/// Zero coefficients are never stored, so structural equality is value equality.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(int c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  LinearForm(Rational c) : constant_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  LinearForm(const Param& p) { params_[p] = 1; }  // NOLINT(google-explicit-constructor)
  LinearForm(const Index& i) { indices_[i] = 1; }  // NOLINT(google-explicit-constructor)

  static LinearForm param(const std::string& name, const Rational& c = 1);
  static LinearForm index(const std::string& name, std::int64_t c = 1);

  const Rational& constant() const { return constant_; }
  const std::map<Param, Rational>& params() const { return params_; }
  const std::map<Index, std::int64_t>& indices() const { return indices_; }

  Rational coeff(const Param& p) const;
  std::int64_t coeff(const Index& i) const;

  bool is_zero() const { return constant_ == 0 && params_.empty() && indices_.empty(); }
  bool has_indices() const { return !indices_.empty(); }
  bool has_params() const { return !params_.empty(); }
  bool is_constant() const { return params_.empty() && indices_.empty(); }
  bool is_index_only() const { return constant_ == 0 && params_.empty(); }
  bool contains(const Index& i) const { return indices_.count(i) != 0; }
  bool contains_any(std::span<const Index> idx) const;

  /// Projection onto the index terms (all of them, or only those in `idx`).
  LinearForm index_part() const;
  LinearForm index_part(std::span<const Index> idx) const;
  /// Constant plus parameter terms.
  LinearForm free_part() const;
  /// Everything except the terms of the given indices.
  LinearForm without(std::span<const Index> idx) const;

  /// gcd of the index coefficients (0 when there are none).
  std::int64_t index_content() const;
  bool all_index_coeffs_positive() const;
  bool all_index_coeffs_negative() const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  LinearForm scaled(std::int64_t k) const;
  /// Scales by a rational; throws std::domain_error if an index coefficient would become fractional.
  LinearForm scaled(const Rational& q) const;

  /// Substitutes bound symbols; the result is a rational iff every symbol is bound.
  std::variant<Rational, LinearForm> substitute(const Bindings& b) const;
  /// Partial substitution always returning a form.
  LinearForm bind(const Bindings& b) const;
  /// Renames indices (unmapped names are kept).
  LinearForm rename(const std::map<Index, Index>& m) const;
  /// Replaces index `i` by the form `repl`.
  LinearForm replace(const Index& i, const LinearForm& repl) const;

  /// Human-readable: constant, then parameters, then indices, e.g. "1/3 + a/3 - 2 m".
  std::string str() const;
  /// Parseable form using '*' for products, e.g. "1/3 + a/3 - 2*m".
  std::string grammar() const;
  /// LaTeX form, primes for parameters named like b_p.
  std::string latex() const;

  bool operator==(const LinearForm& o) const = default;
  std::strong_ordering operator<=>(const LinearForm& o) const;

 private:
  void prune();

  Rational constant_{0};
  std::map<Param, Rational> params_;
  std::map<Index, std::int64_t> indices_;
};

std::vector<Index> make_indices(std::initializer_list<const char*> names);

/// LaTeX rendering of a parameter name: b_p -> b', c1 -> c_1.
std::string latex_symbol(const std::string& name);

}  // namespace hypcont
