#include "doctest.h"
#include "hypcont/poly.hpp"

using namespace hypcont;

namespace {
UPoly P(std::initializer_list<Rational> cs) { return UPoly(std::vector<Rational>(cs)); }
}  // namespace

TEST_CASE("univariate arithmetic") {
  auto [q, r] = P({-1, 0, 1}).divmod(P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(P({1, -12}).str("r") == "1 - 12 r");
  CHECK(P({2, 4, 6}).primitive() == P({1, 2, 3}));
  CHECK(P({1, 1}).pow(3) == P({1, 3, 3, 1}));
}

TEST_CASE("square-free decomposition") {
  auto sf = square_free(P({1, -12}).pow(3) * UPoly::x());
  CHECK(sf.lc == -1728);
  REQUIRE(sf.factors.size() == 2);
  CHECK(sf.factors[0].first == UPoly::x());
  CHECK(sf.factors[0].second == 1);
  CHECK(sf.factors[1].first == P({Rational(-1, 12), 1}));
  CHECK(sf.factors[1].second == 3);
}

TEST_CASE("real root isolation") {
  // (2t - 1)(t^2 - 2)(t + 3)
  auto p = P({-1, 2}) * P({-2, 0, 1}) * P({3, 1});
  auto all = real_roots(p, -10, std::nullopt);
  REQUIRE(all.size() == 4);
  CHECK(all[0].exact == Rational(-3));
  CHECK(all[1].approx() == doctest::Approx(-1.41421356));
  CHECK(!all[1].exact);
  CHECK(all[2].exact == Rational(1, 2));
  CHECK(all[3].approx() == doctest::Approx(1.41421356));
  auto inside = real_roots(p, 0, Rational(1, 2));
  CHECK(inside.empty());
  auto refined = real_roots(p, 1, std::nullopt);
  REQUIRE(refined.size() == 1);
  refined[0].refine(Rational(1, 1000000));
  CHECK(refined[0].hi - refined[0].lo <= Rational(1, 1000000));
  CHECK(real_roots(P({1, 0, 1}), -100, std::nullopt).empty());
}

TEST_CASE("determinant") {
  std::vector<std::vector<Rational>> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(determinant(m) == 18);
}

TEST_CASE("elimination of rational parametrizations") {
  // r = t/(1 + t), s = 1/(1 + t): the simplex boundary r + s = 1.
  auto f2 = eliminate(UPoly::x(), P({1, 1}), P({1}), P({1, 1})).without_univariate_content().normalized();
  CHECK(f2.str("r", "s") == "-1 + r + s");

  // r = t(1 - t)/(2t + 1)^2, s = -1/((t - 1)(2t + 1))
  auto c1 = eliminate(P({0, 1, -1}), P({1, 4, 4}), P({-1}), P({-1, -1, 2})).without_univariate_content().normalized();
  CHECK(c1.str("r", "s") == "1 + 8 r - s + 16 r^2 - 36 r s + 27 r s^2");
  for (int k : {1, 2, 4, 5, 7, 11}) {
    Rational t(k, 3);
    Rational r = t * (1 - t) / ((2 * t + 1) * (2 * t + 1)), s = Rational(-1) / ((t - 1) * (2 * t + 1));
    CHECK(c1(r, s) == 0);
  }

  // Discriminant in s of the curve carries (1 - 12 r)^3.
  auto cs = c1.coeffs_in_s();
  REQUIRE(cs.size() == 3);
  auto disc = cs[1] * cs[1] - UPoly(4) * cs[2] * cs[0];
  auto sf = square_free(disc);
  bool found = false;
  for (const auto& [f, m] : sf.factors) found = found || (m == 3 && f == P({Rational(-1, 12), 1}));
  CHECK(found);
}

TEST_CASE("bivariate normalization") {
  BPoly b;
  b.add(0, 0, Rational(-1, 2));
  b.add(1, 0, Rational(3, 2));
  CHECK(b.normalized().str("r", "s") == "-1 + 3 r");
  BPoly c;
  c.add(1, 1, 2);
  c.add(2, 0, 2);
  c.add(1, 0, 2);
  // 2 r (1 + r + s): the factor in r alone and the constant both go.
  CHECK(c.without_univariate_content().normalized().str("r", "s") == "1 + r + s");
}

TEST_CASE("image polynomial of a rational function at polynomial roots") {
  // t^2 - 2 = 0, y = t/(t + 1): y = 2 - sqrt(2) or 2 + sqrt(2), roots of y^2 - 4 y + 2.
  UPoly T(std::vector<Rational>{-2, 0, 1});
  auto img = image_polynomial(T, UPoly::x(), UPoly::linear(1, 1));
  CHECK(img.monic() == UPoly(std::vector<Rational>{2, -4, 1}));
}
