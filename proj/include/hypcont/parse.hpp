#pragma once

#include "hypcont/errors.hpp"
#include "hypcont/series.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hypcont {

/// Parse failure with the 1-based column of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error(ErrorKind::Parse, "column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Series grammar:
///   product   := unary (('*' | '/') unary)*
///   unary     := '-' unary | primary
///   primary   := number | '(' product ')' | poch(form, form) | gamma(form) | fact(index)
///              | pow(var, form) | sign(form)
///   form      := affine combination of numbers, parameters and indices ("1/3 + a/3 - 2*m", "2m + n")
///   var       := monomial in variables and (1 - v) atoms with integer powers ("x/y", "-(1 - y)^2")
/// Identifiers listed in `indices` are summation indices; every other identifier in a form is a parameter.
FactorProduct parse_factors(std::string_view text, const std::vector<Index>& indices);
HypSeries parse_series(std::string_view text, const std::vector<Index>& indices);
LinearForm parse_form(std::string_view text, const std::vector<Index>& indices);
VarExpr parse_var(std::string_view text);

/// "m,n" or "m n".
std::vector<Index> parse_indices(std::string_view text);
/// Comma-separated forms, "m+n,m,n".
std::vector<LinearForm> parse_form_list(std::string_view text, const std::vector<Index>& indices);
/// Comma-separated variable expressions, "x/y,y".
std::vector<VarExpr> parse_var_list(std::string_view text);
/// "a=1/3,b=0.25".
Bindings parse_bindings(std::string_view text);
/// "x=0.1,y=0.85".
std::map<std::string, double> parse_point(std::string_view text);

/// Round-trippable rendering of a series as its summand in the grammar.
std::string grammar(const HypSeries& s);

/// Versioned JSON ("hypcont.terms/1") holding each term as grammar text.
std::string terms_to_json(const TermSum& ts);
TermSum terms_from_json(std::string_view text);

}  // namespace hypcont
