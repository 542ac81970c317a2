#pragma once

#include "hypcont/poly.hpp"
#include "hypcont/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypcont {

/// Nonnegative rational or +infinity.
struct Extended {
  bool infinite = false;
  Rational value;
  static Extended inf() { return {true, 0}; }
  long double approx() const;
  std::string str() const;
  bool operator==(const Extended&) const = default;
};

/// Real algebraic number: exact rational, or a root of an integer polynomial pinned by an isolating interval.
class Algebraic {
 public:
  Algebraic(Rational v);  // NOLINT(google-explicit-constructor)
  /// The real root of p closest to `near`.
  static Algebraic root_near(const UPoly& p, const Rational& near);
  /// N(t0)/D(t0) for the root t0; D(t0) must be nonzero.
  static Algebraic image(const RealRoot& t0, const UPoly& N, const UPoly& D);

  bool is_rational() const { return exact_.has_value(); }
  const Rational& rational() const { return *exact_; }
  long double approx() const { return approx_; }
  /// A rational within `width` of the value.
  Rational rational_approx(const Rational& width) const;
  /// "1/12", or Mathematica-style "Root[1 - 3 #1 + #1^3 &, 2]".
  std::string str() const;
  const UPoly& poly() const { return poly_; }
  int root_index() const { return index_; }

 private:
  Algebraic() = default;
  UPoly poly_;
  std::optional<RealRoot> root_;
  std::optional<Rational> exact_;
  long double approx_ = 0;
  int index_ = 0;
};

/// A linear form a m + b n (a, b coprime, first nonzero positive) raised to an integer power.
struct RayFactor {
  std::int64_t m = 0, n = 0;
  int exp = 0;
};

/// Homogeneous degree-0 rational function of (m, n), or the constant limits 0 and infinity that arise when
/// the term ratio grows or decays along every ray.
struct RatioFn {
  enum class Kind { Finite, Zero, Infinite };
  Kind kind = Kind::Finite;
  Rational constant = 1;
  std::vector<RayFactor> factors;

  bool is_constant() const { return kind != Kind::Finite || factors.empty(); }
  /// Numerator and denominator at (m, n) = (t, 1), signed.
  UPoly num_t() const;
  UPoly den_t() const;
  /// "-m (m - n)/(2 m + n)^2"
  std::string str(const std::string& m = "m", const std::string& n = "n") const;
};

/// An index form given by its coefficients on the two summation indices.
using IndexForm = std::pair<std::int64_t, std::int64_t>;

struct RatioFunctions {
  RatioFn rho, sigma;
};

/// Horn's rho and sigma for the characteristic list; the factorials of both indices are implied.
RatioFunctions ratio_functions(const std::vector<IndexForm>& num, const std::vector<IndexForm>& den);

struct Rectangle {
  Extended R, S;
};

Rectangle rectangle(const RatioFunctions& rf);

/// One interval of t = m/n on which every linear factor keeps its sign; r and s are |rho| and |sigma| there.
struct SignCase {
  Rational lo;
  std::optional<Rational> hi;  // nullopt = infinity
  UPoly rn, rd, sn, sd;
  bool r_constant = false, s_constant = false;

  long double r(long double t) const;
  long double s(long double t) const;
  /// "t > 0 && t < 1"
  std::string interval_str() const;
};

std::vector<SignCase> sign_cases(const RatioFunctions& rf);

/// Boundary polynomial P(r, s) of one case: the resultant with content in r alone or s alone removed.
/// Throws DegenerateCurve when r or s is constant on the case.
BPoly eliminate_boundary(const SignCase& c);

/// s = (num(r) + sign * coeff * radical(r)) / den(r) with radical = Sqrt[radicand_const * prod g^(k odd)] *
/// prod g^floor(k/2) over `factors` (g, k).
struct Branch {
  UPoly num, den;
  Integer coeff = 0;  // 0 for a rational branch
  int sign = 1;
  Integer radicand_const = 1;
  std::vector<std::pair<UPoly, int>> factors;
  std::size_t curve = 0;  // owning curve, set by the region builder

  std::optional<long double> eval(long double r) const;
  std::string str(const std::string& rname) const;
  bool operator==(const Branch&) const = default;
};

/// Explicit branches of a boundary polynomial of degree 1 or 2 in s. Throws UnsolvableDegree otherwise.
std::vector<Branch> solve_boundary(const BPoly& curve);

/// Curve handled without radicals: bound(r) is the least |sigma| over the case's solutions of |rho| = r.
struct ImplicitCurve {
  BPoly poly;
  SignCase sign_case;
  std::optional<long double> eval(long double r) const;
};

struct BoundItem {
  enum class Kind { Branch, Constant, Implicit };
  Kind kind;
  std::size_t index;
  auto operator<=>(const BoundItem&) const = default;
};

/// Pieces of (0, R): piece k covers r < upper (the last piece has no upper bound).
struct Piece {
  std::optional<Algebraic> upper;
  std::vector<BoundItem> items;
};

class Region {
 public:
  VarExpr X, Y;
  bool has_y = true;
  bool empty = false;
  Extended R, S;
  std::vector<BPoly> curves;
  std::vector<Branch> branches;
  std::vector<Algebraic> constants;
  std::vector<ImplicitCurve> implicits;
  std::vector<Piece> pieces;

  /// Upper bound on s at r, infinity when unconstrained; nullopt outside all pieces.
  long double bound(long double r) const;
  bool contains_rs(long double r, long double s) const;
  /// With margin < 1 the point must stay inside after |X| and |Y| are divided by the margin.
  bool contains(const std::map<std::string, double>& values, double margin = 1) const;
  bool has_curve_bound() const;

  std::string rx() const { return X.abs_str(); }
  std::string sy() const { return Y.abs_str(); }
  /// "Abs[x] < 1/4 && Abs[y] < 1 && Abs[y] < Piecewise[...]"
  std::string str() const;
  /// The same region with a single Min over every bound item.
  std::string min_str() const;
  /// "{Abs[x] + Abs[y] == 1}" for linear curves, otherwise one "Abs[y] == branch" per branch in use.
  std::string curves_str() const;
  /// The s-bound as text, e.g. "1 - Abs[x]" or "Piecewise[...]"; empty when unconstrained.
  std::string bound_str(bool use_min) const;
  /// True when the bound is one linear branch with positive r and s coefficients: r + s < c.
  std::optional<std::string> linear_str() const;
  std::string json() const;

  /// One conjunct of the displayed region, with its own membership test over the base variables.
  struct Conjunct {
    enum class Kind { XRadius, YRadius, Curve, Empty };
    Kind kind;
    std::string text;
    std::function<bool(const std::map<std::string, double>&)> holds;
  };
  std::vector<Conjunct> conjuncts(bool linear_curves) const;
};

struct Roc2Result {
  Rectangle rect;
  Region region;
  RatioFunctions rf;
  std::vector<SignCase> cases;
  /// {"{R,S}, Cartesian Curve, ROC -> ", {1/4, 1}, {...}, {...}}
  std::string str() const;
};

Roc2Result roc2(const std::vector<IndexForm>& num, const std::vector<IndexForm>& den, const VarExpr& X,
                const VarExpr& Y);
Region roc2_region(const RatioFunctions& rf, const VarExpr& X, const VarExpr& Y);

/// Region of a single-index series with variable X.
Region roc1(const std::vector<std::int64_t>& num, const std::vector<std::int64_t>& den, const VarExpr& X);

/// Raw Horn predicate: r < R, s < S and, for all t > 0, r < |rho(t)| or s < |sigma(t)|, evaluated numerically.
bool horn_raw_predicate(const RatioFunctions& rf, long double r, long double s);

/// Region of one series with one or two indices. Throws NotTwoVariable otherwise.
Region series_region(const HypSeries& s);
std::vector<Region> callroc(const TermSum& sum);

struct CommonRegion {
  std::vector<Region> parts;
  bool contains(const std::map<std::string, double>& values, double margin = 1) const;
  /// Radius conjuncts in term order, then the distinct y-radii, then the curve conjuncts.
  std::string str() const;
  /// Conjuncts implied by the others on a sample grid are dropped.
  std::string simplified_str() const;
  std::string json() const;
};

CommonRegion common_roc(std::vector<Region> regions);

/// CSV "r,s" samples of the boundary s = min(S, bound(r)) for r in (0, min(R, r_max)).
std::string plot_csv(const Region& region, int samples, long double r_max = 4);

}  // namespace hypcont
