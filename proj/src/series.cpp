#include "hypcont/series.hpp"

#include <algorithm>

namespace hypcont {

FactorProduct HypSeries::summand() const {
  FactorProduct out = factors;
  for (const auto& v : vars) out.add_power(v.expr, v.exponent);
  return out;
}

Term split_term(const FactorProduct& summand, const std::vector<Index>& indices) {
  FactorProduct pre(summand.constant());
  FactorProduct body;
  std::vector<VarExpr> var_of(indices.size(), VarExpr(Rational(1)));
  auto slot = [&](const Index& i) -> std::size_t {
    auto it = std::find(indices.begin(), indices.end(), i);
    if (it == indices.end()) throw Error(ErrorKind::NotSimplified, "index " + i.name + " is not summed over");
    return static_cast<std::size_t>(it - indices.begin());
  };

  for (const auto& [g, mult] : summand.gammas()) (g.has_indices() ? body : pre).add_gamma(g, mult);
  for (const auto& [key, mult] : summand.pochs()) {
    bool indexed = key.base.has_indices() || key.shift.has_indices();
    (indexed ? body : pre).add_poch(key.base, key.shift, mult);
  }

  const LinearForm& sign = summand.sign_exponent();
  pre.add_sign(sign.free_part());
  for (const auto& [i, c] : sign.indices())
    if (c % 2 != 0) var_of[slot(i)] = -var_of[slot(i)];

  for (const auto& [base, exponent] : summand.powers()) {
    pre.add_power(base, exponent.free_part());
    for (const auto& [i, c] : exponent.indices()) var_of[slot(i)] = var_of[slot(i)] * base.pow(c);
  }

  HypSeries s{indices, body, {}};
  for (std::size_t k = 0; k < indices.size(); ++k) s.vars.push_back({var_of[k], LinearForm(indices[k])});
  return {pre, s};
}

HypSeries make_series(const FactorProduct& summand, const std::vector<Index>& indices) {
  Term t = split_term(summand, indices);
  t.series.factors *= t.prefactor;
  return t.series;
}

namespace {

std::string join_forms(const std::vector<LinearForm>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

}  // namespace

std::string CharacteristicList::forms_str() const {
  return "{" + join_forms(numerator) + ", " + join_forms(denominator) + "}";
}

std::string CharacteristicList::str() const {
  std::string v = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) v += (i ? ", " : "") + vars[i].str();
  return "{{" + forms_str() + ", " + v + "}}}";
}

CharacteristicList characteristic_list(const HypSeries& s) {
  CharacteristicList out;
  out.indices = s.indices;
  std::vector<Index> factorial_left = s.indices;
  for (const auto& [key, mult] : s.factors.pochs()) {
    if (key.base.has_indices())
      throw Error(ErrorKind::NotSimplified, "Pochhammer base " + key.base.str() + " carries an index");
    if (!key.shift.has_indices()) continue;
    int count = std::abs(mult);
    if (mult < 0 && is_factorial(key)) {
      auto it = std::find(factorial_left.begin(), factorial_left.end(), key.shift.indices().begin()->first);
      if (it != factorial_left.end()) {
        factorial_left.erase(it);
        --count;
      }
    }
    for (int k = 0; k < count; ++k) (mult > 0 ? out.numerator : out.denominator).push_back(key.shift.index_part());
  }
  for (const auto& v : s.vars) out.vars.push_back(v.expr);
  return out;
}

CharacteristicList ordered(CharacteristicList c) {
  auto key = [&](const LinearForm& f) {
    std::vector<std::size_t> positions;
    std::vector<std::int64_t> coeffs;
    for (std::size_t k = 0; k < c.indices.size(); ++k) {
      if (std::int64_t x = f.coeff(c.indices[k])) {
        positions.push_back(k);
        coeffs.push_back(x);
      }
    }
    return std::make_tuple(positions.size(), positions, coeffs);
  };
  auto less = [&](const LinearForm& a, const LinearForm& b) { return key(a) < key(b); };
  std::sort(c.numerator.begin(), c.numerator.end(), less);
  std::sort(c.denominator.begin(), c.denominator.end(), less);
  return c;
}

HypSeries normalize_first_index_positive(const HypSeries& s) {
  if (s.indices.empty()) return s;
  const Index& first = s.indices.front();
  FactorProduct out(s.factors.constant());
  out.add_sign(s.factors.sign_exponent());
  for (const auto& [g, mult] : s.factors.gammas()) out.add_gamma(g, mult);
  for (const auto& [key, mult] : s.factors.pochs()) {
    if (key.shift.coeff(first) >= 0) {
      out.add_poch(key.base, key.shift, mult);
      continue;
    }
    FactorProduct flipped = FactorProduct::sign(key.shift) / FactorProduct::poch(LinearForm(1) - key.base, -key.shift);
    for (int k = 0; k < std::abs(mult); ++k) out *= mult > 0 ? flipped : flipped.inverse();
  }
  for (const auto& v : s.vars) out.add_power(v.expr, v.exponent);
  return make_series(out, s.indices);
}

}  // namespace hypcont
