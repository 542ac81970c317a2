#include "doctest.h"
#include "hypcont/rewrite.hpp"

using namespace hypcont;

namespace {
LinearForm P(const char* n) { return LinearForm::param(n); }
LinearForm I(const char* n, std::int64_t c = 1) { return LinearForm::index(n, c); }
}  // namespace

TEST_CASE("linear form rendering and arithmetic") {
  CHECK((LinearForm(Rational(1, 3)) + P("a").scaled(Rational(1, 3))).str() == "1/3 + a/3");
  CHECK((LinearForm(1) - P("a") - P("b")).str() == "1 - a - b");
  CHECK((P("a") + I("m", 2)).str() == "a + 2 m");
  CHECK((P("a") + I("m", 2)).grammar() == "a + 2*m");
  CHECK((I("m") - I("m")).is_zero());
  CHECK((I("m", 4) + I("n", 6)).index_content() == 2);
  CHECK_THROWS_AS(I("m").scaled(Rational(1, 2)), std::domain_error);
  auto v = (P("a") + I("m")).substitute({{"a", Rational(1, 2)}, {"m", 3}});
  REQUIRE(std::holds_alternative<Rational>(v));
  CHECK(std::get<Rational>(v) == Rational(7, 2));
}

TEST_CASE("var expr") {
  auto x = VarExpr::var("x"), y = VarExpr::var("y");
  CHECK((x / y).str() == "x/y");
  CHECK((-y).str() == "-y");
  CHECK(VarExpr::one_minus_var("y").str() == "1 - y");
  CHECK((x / y).abs_str() == "Abs[x/y]");
  CHECK(y.inverse().abs_str() == "1/Abs[y]");
  auto om = y.one_minus();
  REQUIRE(om);
  CHECK(*om == VarExpr::one_minus_var("y"));
  CHECK(!(x / y).one_minus());
  std::map<std::string, double> vals{{"x", 0.25}, {"y", 0.5}};
  CHECK((x / VarExpr::one_minus_var("y")).eval(vals) == doctest::Approx(0.5));
}

TEST_CASE("factor product merges and cancels") {
  auto f = FactorProduct::gamma(P("a")) * FactorProduct::poch(P("a"), I("m")) / FactorProduct::gamma(P("a"));
  CHECK(f == FactorProduct::poch(P("a"), I("m")));
  CHECK(FactorProduct::sign(LinearForm(3)).constant() == -1);
  CHECK(FactorProduct::power(VarExpr(Rational(3)), LinearForm(2)).constant() == 9);
  auto s = FactorProduct::poch(P("a"), I("m")) * FactorProduct::power(VarExpr::var("x"), I("m"))
           / (FactorProduct::factorial(Index{"m"}) * FactorProduct::poch(P("c"), I("m")));
  CHECK(s.str() == "(x^m Pochhammer[a, m])/(m! Pochhammer[c, m])");
}

TEST_CASE("gamma to pochhammer") {
  auto n = make_indices({"n"});
  auto nm = make_indices({"n", "m"});
  auto g = FactorProduct::gamma(P("a") + I("n") + I("m", 2));
  CHECK(gamma_to_poch(g, n, false).str() == "Gamma[a + 2 m] Pochhammer[a + 2 m, n]");
  CHECK(gamma_to_poch(g, nm, true).str() == "Gamma[a] Pochhammer[a, 2 m + n]");
}

TEST_CASE("positive pochhammer") {
  auto mn = make_indices({"m", "n"});
  auto x = FactorProduct::poch(P("a") + P("b"), -I("m") - I("n", 2));
  CHECK(positive_poch(x, mn).str() == "(-1)^(m + 2 n)/Pochhammer[1 - a - b, m + 2 n]");
  // Mixed signs stay.
  auto y = FactorProduct::poch(P("a"), I("m") - I("n"));
  CHECK(positive_poch(y, mn) == y);
}

TEST_CASE("pochhammer multiplication formula") {
  auto x = FactorProduct::poch(P("a"), I("m", 3));
  CHECK(poch_dim(x).str() ==
        "3^(3 m) Pochhammer[a/3, m] Pochhammer[1/3 + a/3, m] Pochhammer[2/3 + a/3, m]");
  auto neg = FactorProduct::poch(P("a"), I("m", -3));
  CHECK(poch_dim(neg) == neg);
}

TEST_CASE("unsim and merge are inverse") {
  auto x = FactorProduct::poch(P("a"), I("m", 2) + I("n", 3) + I("p"));
  auto u = unsim(x, Index{"n"});
  CHECK(u == FactorProduct::poch(P("a"), I("m", 2) + I("p")) *
                 FactorProduct::poch(P("a") + I("m", 2) + I("p"), I("n", 3)));
  CHECK(merge_pochs(u) == x);
}

TEST_CASE("sim") {
  auto mn = make_indices({"m", "n"});
  auto x = FactorProduct::gamma(P("a") + I("m") + I("n")) / FactorProduct::gamma(P("a") + I("m"));
  CHECK(sim(x, mn) == FactorProduct::poch(P("a"), I("m") + I("n")) / FactorProduct::poch(P("a"), I("m")));
  auto mixed = FactorProduct::gamma(P("a") + I("m") - I("n"));
  CHECK(sim(mixed, mn) == FactorProduct::gamma(P("a")) * FactorProduct::poch(P("a"), I("m") - I("n")));
  // An index missing from the list is left in a base and reported.
  auto partial = FactorProduct::gamma(P("a") + I("m") + I("p"));
  CHECK_THROWS_AS(sim(partial, mn), SimIncomplete);
}
