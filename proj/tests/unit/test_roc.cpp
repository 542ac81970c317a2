#include "doctest.h"
#include "fixtures.hpp"
#include "horn_lists.hpp"
#include "horn_oracle.hpp"
#include "hypcont/roc.hpp"

#include <cmath>

using namespace hypcont;

namespace {

const VarExpr X = VarExpr::var("x"), Y = VarExpr::var("y");

std::vector<IndexForm> forms(const std::vector<std::pair<int, int>>& v) { return {v.begin(), v.end()}; }

// Counts disagreements between the region and the oracle over a log grid of (r, s) points.
int disagreements(const Region& region, const oracle::HornOracle& o, int per_axis, int& judged) {
  int bad = 0;
  judged = 0;
  for (int i = 0; i < per_axis; ++i)
    for (int j = 0; j < per_axis; ++j) {
      double r = std::pow(10.0, -3 + 3.7 * (i + 0.5) / per_axis), s = std::pow(10.0, -3 + 3.7 * (j + 0.5) / per_axis);
      auto [in, near] = o.contains(r, s);
      if (near) continue;
      ++judged;
      if (in != region.contains_rs(r, s)) ++bad;
    }
  return bad;
}

}  // namespace

TEST_CASE("ratio functions") {
  auto h5 = ratio_functions({{2, 1}, {-1, 1}}, {{0, 1}});
  CHECK(h5.rho.str() == "-m (m - n)/(2 m + n)^2");
  CHECK(h5.sigma.str() == "-n^2/((m - n) (2 m + n))");
  auto f2 = ratio_functions({{1, 1}, {1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
  CHECK(f2.rho.str() == "m/(m + n)");
  auto e = ratio_functions({}, {});
  CHECK(e.rho.kind == RatioFn::Kind::Infinite);
  CHECK(e.sigma.kind == RatioFn::Kind::Infinite);
}

TEST_CASE("rectangle and sign cases") {
  auto h5 = ratio_functions({{2, 1}, {-1, 1}}, {{0, 1}});
  auto rect = rectangle(h5);
  CHECK(rect.R == Extended{false, Rational(1, 4)});
  CHECK(rect.S == Extended{false, 1});
  auto cases = sign_cases(h5);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].interval_str() == "t > 0 && t < 1");
  CHECK(cases[1].interval_str() == "t > 1");
  // Case 1: r = -(t-1) t/(2t+1)^2, s = -1/((t-1)(2t+1)).
  for (long double t : {0.1L, 0.5L, 0.9L}) {
    CHECK(cases[0].r(t) == doctest::Approx(static_cast<double>(-(t - 1) * t / ((2 * t + 1) * (2 * t + 1)))));
    CHECK(cases[0].s(t) == doctest::Approx(static_cast<double>(-1 / ((t - 1) * (2 * t + 1)))));
  }
  auto f4 = sign_cases(ratio_functions({{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}));
  CHECK(f4.size() == 1);
  auto f3 = sign_cases(ratio_functions({{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {{1, 1}}));
  REQUIRE(f3.size() == 1);
  CHECK_THROWS_AS(eliminate_boundary(sign_cases(ratio_functions({{1, 1}, {1, 0}, {0, 1}}, {{1, 1}}))[0]), Error);
}

TEST_CASE("boundary polynomials vanish on the parametric curve") {
  auto cases = sign_cases(ratio_functions({{2, 1}, {-1, 1}}, {{0, 1}}));
  auto p1 = eliminate_boundary(cases[0]), p2 = eliminate_boundary(cases[1]);
  CHECK(p1.str("r", "s") == "1 + 8 r - s + 16 r^2 - 36 r s + 27 r s^2");
  CHECK(p2.str("r", "s") == "1 - 8 r + s + 16 r^2 - 36 r s - 27 r s^2");
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    const auto& c = cases[ci];
    const auto& p = ci == 0 ? p1 : p2;
    for (int k = 1; k <= 100; ++k) {
      Rational t = ci == 0 ? Rational(k, 101) : Rational(101 + k, 101);
      CHECK(p(c.rn(t) / c.rd(t), c.sn(t) / c.sd(t)) == 0);
    }
  }
}

TEST_CASE("solved branches") {
  auto cases = sign_cases(ratio_functions({{2, 1}, {-1, 1}}, {{0, 1}}));
  auto b1 = solve_boundary(eliminate_boundary(cases[0]));
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].str("Abs[x]") == "(1 - (1 - 12 Abs[x])^(3/2) + 36 Abs[x])/(54 Abs[x])");
  CHECK(b1[1].str("Abs[x]") == "(1 + (1 - 12 Abs[x])^(3/2) + 36 Abs[x])/(54 Abs[x])");
  auto b2 = solve_boundary(eliminate_boundary(cases[1]));
  REQUIRE(b2.size() == 2);
  // ((12 r + 1)^(3/2) - 36 r + 1)/(54 r)
  for (double r : {0.01, 0.05, 0.2}) {
    double expect = (std::pow(12 * r + 1, 1.5) - 36 * r + 1) / (54 * r);
    CHECK(static_cast<double>(b2[1].eval(r).value()) == doctest::Approx(expect));
  }
  CHECK(!b1[0].eval(0.1).has_value());
  auto f2 = solve_boundary(eliminate_boundary(sign_cases(ratio_functions({{1, 1}, {1, 0}, {0, 1}}, {{1, 0}, {0, 1}}))[0]));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].str("Abs[x]") == "1 - Abs[x]");
}

TEST_CASE("roc2 golden outputs") {
  auto f2 = roc2({{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {0, 1}}, X, Y);
  CHECK(f2.str() == "{\"{R,S}, Cartesian Curve, ROC -> \", {1, 1}, {Abs[x] + Abs[y] == 1}, {Abs[x] < 1 && Abs[y] < 1 && Abs[y] < 1 - Abs[x]}}");
  auto f3 = roc2({{1, 0}, {0, 1}, {1, 0}, {0, 1}}, {{1, 1}}, X, Y);
  CHECK(f3.str() == "{\"{R,S}, Cartesian Curve, ROC -> \", {1, 1}, {}, {Abs[x] < 1 && Abs[y] < 1}}");
  auto f2xy = roc2({{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {0, 1}}, X / Y, Y);
  CHECK(f2xy.region.curves_str() == "{Abs[x/y] + Abs[y] == 1}");
  CHECK(f2xy.region.str() == "Abs[x/y] < 1 && Abs[y] < 1 && Abs[y] < 1 - Abs[x/y]");
  auto f1 = roc2({{1, 1}, {1, 0}, {0, 1}}, {{1, 1}}, X, Y);
  CHECK(f1.region.str() == "Abs[x] < 1 && Abs[y] < 1");
}

TEST_CASE("H5 region") {
  auto h5 = roc2({{2, 1}, {-1, 1}}, {{0, 1}}, X, Y);
  const std::string b1 = "(1 - (1 - 12 Abs[x])^(3/2) + 36 Abs[x])/(54 Abs[x])";
  const std::string b2 = "(1 + (1 - 12 Abs[x])^(3/2) + 36 Abs[x])/(54 Abs[x])";
  const std::string b3 = "(1 + (1 + 12 Abs[x])^(3/2) - 36 Abs[x])/(54 Abs[x])";
  CHECK(h5.region.str() == "Abs[x] < 1/4 && Abs[y] < 1 && Abs[y] < Piecewise[{{Min[" + b1 + ", " + b2 + ", " + b3 +
                               "], Abs[x] < 1/12}}, " + b3 + "]");
  CHECK(h5.region.min_str() == "Abs[x] < 1/4 && Abs[y] < 1 && Abs[y] < Min[" + b1 + ", " + b2 + ", " + b3 + "]");
  // The min form, read with complex branches left out, is the same set.
  for (int i = 1; i < 50; ++i) {
    double r = 0.25 * i / 50;
    double m = 1;
    for (const auto& b : h5.region.branches)
      if (auto v = b.eval(r)) m = std::min(m, static_cast<double>(*v));
    CHECK(static_cast<double>(std::min<long double>(1, h5.region.bound(r))) == doctest::Approx(m));
  }
}

TEST_CASE("regions agree with the Horn oracle") {
  auto lists = oracle::horn_lists();
  for (const auto& c : oracle::confluent_lists()) lists.push_back(c);
  for (const auto& l : lists) {
    CAPTURE(l.name);
    auto region = roc2_region(ratio_functions(forms(l.num), forms(l.den)), X, Y);
    oracle::HornOracle o{{l.num, l.den}};
    int judged = 0;
    CHECK(disagreements(region, o, 46, judged) == 0);
    CHECK(judged >= 2000);
    // The library's own numeric predicate agrees as well.
    auto rf = ratio_functions(forms(l.num), forms(l.den));
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) {
        double r = std::pow(10.0, -2 + 2.5 * i / 12), s = std::pow(10.0, -2 + 2.5 * j / 12);
        auto [in, near] = o.contains(r, s, 1e-6);
        if (!near) CHECK(horn_raw_predicate(rf, r, s) == in);
      }
  }
}

TEST_CASE("literature regions") {
  auto check = [](const Region& region, auto pred) {
    for (int i = 0; i < 40; ++i)
      for (int j = 0; j < 40; ++j) {
        double r = std::pow(10.0, -3 + 3.3 * (i + 0.5) / 40), s = std::pow(10.0, -3 + 3.3 * (j + 0.5) / 40);
        auto [in, margin] = pred(r, s);
        if (std::fabs(margin) > 1e-9) CHECK(region.contains_rs(r, s) == in);
      }
  };
  check(roc2({{1, 1}, {1, 0}, {0, 1}}, {{1, 1}}, X, Y).region, [](double r, double s) {
    return std::make_pair(std::max(r, s) < 1, 1 - std::max(r, s));
  });
  check(roc2({{1, 1}, {1, 0}, {0, 1}}, {{1, 0}, {0, 1}}, X, Y).region, [](double r, double s) {
    return std::make_pair(r + s < 1, 1 - r - s);
  });
  check(roc2({{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}, X, Y).region, [](double r, double s) {
    return std::make_pair(std::sqrt(r) + std::sqrt(s) < 1, 1 - std::sqrt(r) - std::sqrt(s));
  });
}

TEST_CASE("swapping the indices transposes the region") {
  for (const auto& l : oracle::horn_lists()) {
    CAPTURE(l.name);
    std::vector<IndexForm> num, den, snum, sden;
    for (auto [a, b] : l.num) num.emplace_back(a, b), snum.emplace_back(b, a);
    for (auto [a, b] : l.den) den.emplace_back(a, b), sden.emplace_back(b, a);
    auto reg = roc2_region(ratio_functions(num, den), X, Y);
    auto swapped = roc2_region(ratio_functions(snum, sden), Y, X);
    oracle::HornOracle o{{l.num, l.den}};
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        double r = std::pow(10.0, -2 + 2.4 * i / 20), s = std::pow(10.0, -2 + 2.4 * j / 20);
        if (o.contains(r, s, 1e-7).second) continue;
        CHECK(reg.contains_rs(r, s) == swapped.contains_rs(s, r));
      }
  }
}

TEST_CASE("confluent directions give infinite radii") {
  auto phi2 = roc2({{1, 0}, {0, 1}}, {{1, 1}}, X, Y);
  CHECK(phi2.rect.R.infinite);
  CHECK(phi2.rect.S.infinite);
  CHECK(phi2.region.str() == "True");
  auto psi2 = roc2({{1, 1}}, {{1, 0}, {0, 1}}, X, Y);
  CHECK(psi2.rect.R.infinite);
  auto e = roc2({}, {}, X, Y);
  CHECK(e.region.contains_rs(1e6, 1e6));
}

TEST_CASE("degree three boundary falls back to an implicit curve") {
  auto r = roc2({{3, 1}}, {{1, 0}, {1, 0}}, X, Y);
  REQUIRE(r.region.implicits.size() == 1);
  CHECK(r.region.branches.empty());
  CHECK(r.region.curves[0].str("r", "s") == "-1 + 27 r + 3 s - 3 s^2 + s^3");
  CHECK_THROWS_AS(solve_boundary(r.region.curves[0]), Error);
  oracle::HornOracle o{{{{3, 1}}, {{1, 0}, {1, 0}}}};
  int judged = 0;
  CHECK(disagreements(r.region, o, 46, judged) == 0);
  CHECK(judged >= 2000);
}

TEST_CASE("single index radius") {
  CHECK(roc1({1, 1}, {1}, X).str() == "Abs[x] < 1");
  CHECK(roc1({2}, {1}, X).str() == "Abs[x] < 1/4");
  CHECK(roc1({}, {}, X).str() == "True");
  CHECK(roc1({1, 1}, {}, X).empty);
}

TEST_CASE("region json and plot data") {
  auto h5 = roc2({{2, 1}, {-1, 1}}, {{0, 1}}, X, Y);
  auto j = h5.region.json();
  CHECK(j.find("\"op\":\"piecewise\"") != std::string::npos);
  CHECK(j.find("\"value\":\"1/4\"") != std::string::npos);
  auto csv = plot_csv(h5.region, 10);
  CHECK(csv.rfind("r,s\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
}

TEST_CASE("callroc and the common region") {
  using namespace fixtures;
  auto f2 = appell_f2("m", "p");
  auto regions = callroc(TermSum{{Term{FactorProduct(1), f2}}});
  REQUIRE(regions.size() == 1);
  auto common = common_roc(regions);
  CHECK(common.simplified_str() == "Abs[x] + Abs[y] < 1");
  CHECK(common.contains({{"x", 0.3}, {"y", -0.6}}));
  CHECK(!common.contains({{"x", 0.5}, {"y", 0.6}}));

  // Single geometric series.
  auto geo = make_series(pw("x", I("k")), {Index{"k"}});
  auto one = common_roc(callroc(TermSum{{Term{FactorProduct(1), geo}}}));
  CHECK(one.simplified_str() == "Abs[x] < 1");

  // Two series give one region each; the conjunction keeps shared radii once.
  auto both = callroc(TermSum{{Term{FactorProduct(1), f2}, Term{FactorProduct(2), appell_f1("m", "p")}}});
  REQUIRE(both.size() == 2);
  CHECK(common_roc(both).simplified_str() == "Abs[x] + Abs[y] < 1");

  auto three = make_series(pw("x", I("m")) * pw("y", I("n")) * pw("z", I("p")), make_indices({"m", "n", "p"}));
  CHECK_THROWS_AS(callroc(TermSum{{Term{FactorProduct(1), three}}}), Error);
}
