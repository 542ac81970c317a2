#include "doctest.h"
#include "fixtures.hpp"
#include "hypcont/catalog.hpp"
#include "hypcont/numeric.hpp"
#include "hypcont/olsson.hpp"

using namespace hypcont;
using namespace fixtures;

namespace {

const auto MP = make_indices({"m", "p"});
const auto MN = make_indices({"m", "n"});

}  // namespace

TEST_CASE("inner sum over either index of F2") {
  auto f2 = appell_f2("m", "p");
  auto over_m = inner_sum(1, MP, f2);
  CHECK(over_m.str() ==
        "(y^p HypergeometricPFQ[{b1, a + p}, {c1}, x] Pochhammer[a, p] Pochhammer[b2, p])/(p! Pochhammer[c2, p])");
  auto over_p = inner_sum(2, MP, f2);
  CHECK(over_p.str() ==
        "(x^m HypergeometricPFQ[{b2, a + m}, {c2}, y] Pochhammer[a, m] Pochhammer[b1, m])/(m! Pochhammer[c1, m])");
  CHECK(over_p.upper.size() == 2);
  CHECK(over_p.lower.size() == 1);
  CHECK(over_p.outer_indices() == make_indices({"m"}));
  CHECK(olsson(1, MP, f2, {OlssonOption::Sum}).str() == over_m.str());
}

TEST_CASE("inner sum of F1 over n") {
  auto form = inner_sum(2, MN, appell_f1("m", "n"));
  CHECK(form.pfq_str() == "HypergeometricPFQ[{b1, a + m}, {c + m}, y]");
  CHECK(form.outer == poch("a", I("m")) * poch("b", I("m")) * pw("x", I("m")) / (poch("c", I("m")) * fact("m")));
}

TEST_CASE("re-expanding an inner sum gives the series back") {
  for (auto s : {appell_f1("m", "n"), appell_f2("m", "n")}) {
    for (int q : {1, 2}) {
      auto form = inner_sum(q, MN, s);
      auto back = expand_and_sim({form});
      REQUIRE(back.terms.size() == 1);
      CHECK(back.terms[0].prefactor.is_one());
      CHECK(back.terms[0].series.summand() == s.summand());
    }
  }
}

TEST_CASE("unsimplified expansion reproduces the series value") {
  PrecisionGuard guard(40);
  EvalConfig cfg;
  cfg.max_terms_per_index = 60;
  Bindings p{{"a", Rational(1, 3)}, {"b", Rational(1, 7)}, {"b1", Rational(2, 5)}, {"c", Rational(9, 4)}};
  auto f1 = appell_f1("m", "n");
  Point at{{"x", 0.2}, {"y", -0.3}};
  Real direct = eval_series(f1, p, at, cfg).value;
  for (int q : {1, 2}) {
    Real rebuilt = eval_series(expanded_series(inner_sum(q, MN, f1)), p, at, cfg).value;
    CHECK(static_cast<double>(Real(abs(rebuilt - direct))) < 1e-30);
  }
}

TEST_CASE("one on F2 over p gives the two Gamma-weighted terms") {
  auto r = olsson(2, MP, appell_f2("m", "p"), {OlssonOption::One});
  REQUIRE(r.pending.size() == 2);
  CHECK(r.pending[0].outer.gammas().count(P("c2") - P("a") - P("b2") - I("m")) == 1);
  CHECK(r.pending[0].arg == VarExpr::one_minus_var("y"));
  CHECK(r.pending[1].outer.powers().at(VarExpr::one_minus_var("y")) == P("c2") - P("a") - P("b2") - I("m"));
  CHECK(r.pending[1].outer.gammas().count(P("a") + P("b2") - P("c2") + I("m")) == 1);
  CHECK(!r.terms);
}

TEST_CASE("inf on F2 over p leads with (-y)^-b2 and (-y)^(-a - m)") {
  auto r = olsson(2, MP, appell_f2("m", "p"), {OlssonOption::Inf});
  REQUIRE(r.pending.size() == 2);
  VarExpr minus_y = -VarExpr::var("y");
  CHECK(r.pending[0].outer.powers().at(minus_y) == -P("b2"));
  CHECK(r.pending[0].outer.gammas().count(P("a") - P("b2") + I("m")) == 1);
  CHECK(r.pending[1].outer.powers().at(minus_y) == -P("a") - I("m"));
  CHECK(r.pending[1].outer.gammas().count(P("b2") - P("a") - I("m")) == 1);
  CHECK(r.pending[0].arg == VarExpr::var("y").inverse());
}

TEST_CASE("inf with sim on F2 yields the Pochhammer structure at infinity") {
  auto r = olsson(2, MP, appell_f2("m", "p"), {OlssonOption::Inf, OlssonOption::Sim});
  REQUIRE(r.terms);
  REQUIRE(r.terms->terms.size() == 2);
  const Term& t = r.terms->terms[1];
  auto expect_series = poch("a", I("m") + I("p")) * poch("b1", I("m")) *
                       FactorProduct::poch(LinearForm(1) + P("a") - P("c2"), I("m") + I("p")) /
                       (FactorProduct::poch(LinearForm(1) + P("a") - P("b2"), I("m") + I("p")) * poch("c1", I("m")) *
                        fact("m") * fact("p"));
  CHECK(t.series.factors == expect_series);
  REQUIRE(t.series.vars.size() == 2);
  CHECK(t.series.vars[0].expr == -(VarExpr::var("x") / VarExpr::var("y")));
  CHECK(t.series.vars[1].expr == VarExpr::var("y").inverse());
  auto expect_pre = FactorProduct::gamma(P("b2") - P("a")) * FactorProduct::gamma(P("c2")) /
                    (FactorProduct::gamma(P("b2")) * FactorProduct::gamma(P("c2") - P("a"))) *
                    FactorProduct::power(-VarExpr::var("y"), -P("a"));
  CHECK(t.prefactor == expect_pre);
}

TEST_CASE("inf, sim and roc on F2 give the five-conjunct common region") {
  auto r = olsson(2, MP, appell_f2("m", "p"), {OlssonOption::Inf, OlssonOption::Sim, OlssonOption::Roc});
  REQUIRE(r.region);
  CHECK(r.region->str() ==
        "Abs[x] < 1 && Abs[x/y] < 1 && 1/Abs[y] < 1 && 1/Abs[y] < 1/(1 + Abs[x]) && Abs[x/y] + 1/Abs[y] < 1");
  CHECK(r.str().rfind("{Abs[x] < 1 && ", 0) == 0);
}

TEST_CASE("one with sim on F1 gives two F2 series in x and 1 - y") {
  auto r = olsson(2, MN, appell_f1("m", "n"), {OlssonOption::One, OlssonOption::Sim});
  REQUIRE(r.terms);
  REQUIRE(r.terms->terms.size() == 2);
  Catalog cat;
  auto G = [](const LinearForm& f) { return FactorProduct::gamma(f); };
  VarExpr one_minus_y = VarExpr::one_minus_var("y");
  // Gamma(c) Gamma(c - a - b')/(Gamma(c - a) Gamma(c - b'))
  auto pre0 = G(P("c")) * G(P("c") - P("a") - P("b1")) / (G(P("c") - P("a")) * G(P("c") - P("b1")));
  // (1 - y)^(c - a - b') Gamma(c) Gamma(a + b' - c)/(Gamma(a) Gamma(b'))
  auto pre1 = FactorProduct::power(one_minus_y, P("c") - P("a") - P("b1")) * G(P("c")) *
              G(P("a") + P("b1") - P("c")) / (G(P("a")) * G(P("b1")));
  CHECK(r.terms->terms[0].prefactor == pre0);
  CHECK(r.terms->terms[1].prefactor == pre1);
  for (const auto& t : r.terms->terms) {
    auto rec = serrecog(t, cat);
    CHECK(rec.name.value_or("") == "F2");
    CHECK(rec.prefactor == t.prefactor);
    REQUIRE(t.series.vars.size() == 2);
    CHECK(t.series.vars[0].expr == VarExpr::var("x"));
    CHECK(t.series.vars[1].expr == one_minus_y);
  }
  CHECK(serrecog2var(r.terms->terms[0].series, cat).str() == "F2[a, b, b1, -b1 + c, 1 + a + b1 - c, x, 1 - y]");
  CHECK(serrecog2var(r.terms->terms[1].series, cat).str() == "F2[-b1 + c, b, -a + c, -b1 + c, 1 - a - b1 + c, x, 1 - y]");
}

TEST_CASE("term counts") {
  auto g = inner_sum(1, make_indices({"k"}), gauss());
  CHECK(apply_2f1(g, Transformation::One).size() == 2);
  CHECK(apply_2f1(g, Transformation::Inf).size() == 2);
  CHECK(apply_2f1(g, Transformation::Pet1).size() == 1);
  CHECK(apply_2f1(g, Transformation::Pet3).size() == 1);
  CHECK(pfq_inf(g).size() == 2);
  InnerHypForm f3 = g;
  f3.upper = {P("a"), P("b"), P("c")};
  f3.lower = {P("d"), P("e")};
  CHECK(pfq_inf(f3).size() == 3);
  CHECK(apply_2f1(f3, Transformation::Inf).size() == 3);
}

TEST_CASE("pfq_inf parameter lists for 3F2") {
  InnerHypForm f;
  f.indices = make_indices({"k"});
  f.upper = {P("a"), P("b"), P("c")};
  f.lower = {P("d"), P("e")};
  f.arg = VarExpr::var("z");
  auto terms = pfq_inf(f);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].pfq_str() == "HypergeometricPFQ[{a, 1 + a - d, 1 + a - e}, {1 + a - b, 1 + a - c}, 1/z]");
  CHECK(terms[0].outer.powers().at(-VarExpr::var("z")) == -P("a"));
  auto G = [](const LinearForm& x) { return FactorProduct::gamma(x); };
  CHECK(terms[0].outer == G(P("b") - P("a")) * G(P("c") - P("a")) * G(P("d")) * G(P("e")) /
                              (G(P("b")) * G(P("c")) * G(P("d") - P("a")) * G(P("e") - P("a"))) *
                              FactorProduct::power(-VarExpr::var("z"), -P("a")));
}

TEST_CASE("pfq_inf at p = 2 matches the 2F1 formula at infinity") {
  auto g = inner_sum(1, make_indices({"k"}), gauss());
  auto generic = pfq_inf(g);
  // apply_2f1 takes its own route for a 2F1.
  auto direct = apply_2f1(g, Transformation::Inf);
  REQUIRE(generic.size() == direct.size());
  for (std::size_t k = 0; k < generic.size(); ++k) {
    CHECK(generic[k].outer == direct[k].outer);
    CHECK(generic[k].upper == direct[k].upper);
    CHECK(generic[k].lower == direct[k].lower);
    CHECK(generic[k].arg == direct[k].arg);
  }
}

TEST_CASE("Euler and Pfaff transformations are involutions") {
  for (const auto& [s, idx, q] : {std::tuple{gauss(), make_indices({"k"}), 1}, std::tuple{appell_f1("m", "n"), MN, 2},
                                   std::tuple{appell_f2("m", "n"), MN, 1}}) {
    auto form = inner_sum(q, idx, s);
    auto original = expand_and_sim({form});
    for (auto t : {Transformation::Pet3, Transformation::Pet1, Transformation::Pet2}) {
      CAPTURE(to_string(t));
      auto once = apply_2f1(form, t);
      REQUIRE(once.size() == 1);
      auto twice = apply_2f1(once[0], t);
      REQUIRE(twice.size() == 1);
      // PET2 applied twice is PET3, not the identity.
      if (t != Transformation::Pet2) CHECK(expand_and_sim(twice) == original);
    }
  }
}

TEST_CASE("applying PET1 twice restores the argument and parameters") {
  auto form = inner_sum(1, make_indices({"k"}), gauss());
  auto twice = apply_2f1(apply_2f1(form, Transformation::Pet1)[0], Transformation::Pet1)[0];
  CHECK(twice.arg == VarExpr::var("z"));
  CHECK(twice.upper == form.upper);
  CHECK(twice.lower == form.lower);
  CHECK(twice.outer.is_one());
}

TEST_CASE("failure contracts of the Olsson pipeline") {
  // Index coefficient 2 in the summed index.
  auto f = poch("a", I("m", 2) + I("n")) * pw("x", I("m")) * pw("y", I("n")) /
           (poch("c", I("m")) * fact("m") * fact("n"));
  auto s = make_series(f, MN);
  CHECK_THROWS_AS(inner_sum(1, MN, s), Error);
  try {
    inner_sum(1, MN, s);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedSubseries);
  }
  // The other index is fine.
  CHECK_NOTHROW(inner_sum(2, MN, s));

  try {
    olsson(2, MP, appell_f2("m", "p"), {OlssonOption::One, OlssonOption::Inf});
    FAIL("conflicting options accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOptions);
  }
  try {
    olsson(3, MP, appell_f2("m", "p"), {OlssonOption::Sum});
    FAIL("q out of range accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOptions);
  }
  // One needs 1 - z as a monomial; x/y does not qualify.
  auto g = inner_sum(1, make_indices({"k"}), gauss());
  g.arg = VarExpr::var("x") / VarExpr::var("y");
  try {
    apply_2f1(g, Transformation::One);
    FAIL("non-monomial 1 - z accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedSubseries);
  }
  // A 3F2 inner series is not a 2F1.
  InnerHypForm f3 = inner_sum(1, make_indices({"k"}), gauss());
  f3.upper.push_back(P("e"));
  f3.lower.push_back(P("d"));
  CHECK_THROWS_AS(apply_2f1(f3, Transformation::Pet3), Error);
}

TEST_CASE("olsson result rendering") {
  auto r = olsson(2, MP, appell_f2("m", "p"), {OlssonOption::Inf, OlssonOption::Sim});
  std::string text = r.str();
  CHECK(text.find("Pochhammer[1 + a - c2, m + p]") != std::string::npos);
  CHECK(text.find("(-y)^-a") != std::string::npos);
  CHECK(latex(*r.terms).find("\\sum_{m,p=0}^{\\infty}") != std::string::npos);
}
