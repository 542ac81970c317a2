#pragma once

#include "hypcont/series.hpp"

namespace fixtures {

using namespace hypcont;

inline LinearForm P(const std::string& n) { return LinearForm::param(n); }
inline LinearForm I(const char* n, std::int64_t c = 1) { return LinearForm::index(n, c); }
inline FactorProduct poch(const std::string& b, const LinearForm& s, int mult = 1) {
  return FactorProduct::poch(P(b), s, mult);
}
inline FactorProduct pw(const char* v, const LinearForm& e) { return FactorProduct::power(VarExpr::var(v), e); }
inline FactorProduct fact(const char* i) { return FactorProduct::factorial(Index{i}); }

inline HypSeries appell_f1(const char* i, const char* j) {
  auto f = poch("a", I(i) + I(j)) * poch("b", I(i)) * poch("b1", I(j)) * pw("x", I(i)) * pw("y", I(j)) /
           (poch("c", I(i) + I(j)) * fact(i) * fact(j));
  return make_series(f, {Index{i}, Index{j}});
}

inline HypSeries appell_f2(const char* i, const char* j) {
  auto f = poch("a", I(i) + I(j)) * poch("b1", I(i)) * poch("b2", I(j)) * pw("x", I(i)) * pw("y", I(j)) /
           (poch("c1", I(i)) * poch("c2", I(j)) * fact(i) * fact(j));
  return make_series(f, {Index{i}, Index{j}});
}

/// Gauss 2F1(a, b; c; z) summed over `i`.
inline HypSeries gauss(const char* i = "k", const char* z = "z") {
  auto f = poch("a", I(i)) * poch("b", I(i)) * pw(z, I(i)) / (poch("c", I(i)) * fact(i));
  return make_series(f, {Index{i}});
}

}  // namespace fixtures
