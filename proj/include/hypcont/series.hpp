#pragma once

#include "hypcont/errors.hpp"
#include "hypcont/factors.hpp"

#include <string>
#include <vector>

namespace hypcont {

/// One series variable raised to an index-only exponent.
struct VarArg {
  VarExpr expr;
  LinearForm exponent;
  bool operator==(const VarArg&) const = default;
};

/// Multivariable hypergeometric series: sum over `indices` of factors * prod(var.expr ^ var.exponent).
/// Factorials live in `factors` as denominator Pochhammers (1)_idx. `factors` carries no powers and no
/// index-bearing sign; those are folded into `vars`, one per index in index order.
struct HypSeries {
  std::vector<Index> indices;
  FactorProduct factors;
  std::vector<VarArg> vars;

  /// The full summand, variables included.
  FactorProduct summand() const;
  std::string str() const { return summand().str(); }
  std::string latex() const { return summand().latex(); }
  bool operator==(const HypSeries&) const = default;
};

struct Term {
  FactorProduct prefactor;
  HypSeries series;
  bool operator==(const Term&) const = default;
};

struct TermSum {
  std::vector<Term> terms;
  bool operator==(const TermSum&) const = default;
};

/// Separates index-free content into the prefactor and folds index-bearing signs and powers into one
/// variable per index: (-1)^m x^m -> (-x)^m, 3^(3 m) -> 27^m, (1-y)^(c-m) -> (1-y)^c * ((1-y)^-1)^m.
Term split_term(const FactorProduct& summand, const std::vector<Index>& indices);

/// split_term with the prefactor kept inside the series factors.
HypSeries make_series(const FactorProduct& summand, const std::vector<Index>& indices);

struct CharacteristicList {
  std::vector<Index> indices;
  std::vector<LinearForm> numerator;
  std::vector<LinearForm> denominator;
  std::vector<VarExpr> vars;

  /// "{{m + p, m, p}, {m + p}}"
  std::string forms_str() const;
  /// "{{{{m + p, m, p}, {m + p}}, {x, y}}}"
  std::string str() const;
};

/// Index parts of numerator and denominator Pochhammers in factor order. One factorial per index is
/// left out. Throws NotSimplified when a Pochhammer base still carries an index.
CharacteristicList characteristic_list(const HypSeries& s);

/// Sorted copy for display: single-index forms by index then coefficient, then multi-index forms.
CharacteristicList ordered(CharacteristicList c);

/// Rewrites (b)_L with a negative coefficient of the first index as (-1)^L / (1-b)_{-L}, on either side
/// of the fraction, so that every shift containing the first index has it with a positive coefficient.
HypSeries normalize_first_index_positive(const HypSeries& s);

}  // namespace hypcont
