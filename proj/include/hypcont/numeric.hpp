#pragma once

#include "hypcont/roc.hpp"
#include "hypcont/series.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypcont {

using Real = boost::multiprecision::mpfr_float;
using Point = std::map<std::string, double>;

struct EvalConfig {
  /// Each index runs up to max_terms_per_index - 1; the sum covers the diagonal shells up to that total degree.
  int max_terms_per_index = 200;
  unsigned precision = 50;  // decimal digits
  double tolerance = 1e-8;
};

/// Sets the working precision of Real for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

struct SeriesValue {
  Real value;
  /// Sum of |term| over the last shell included.
  Real tail;
};

/// Index-free product at exact parameter values and real variable values. Throws PoleHit when a numerator
/// Gamma sits on a pole, BranchRequired for a negative base under a non-integer or symbolic exponent.
Real eval_factors(const FactorProduct& f, const Bindings& params, const Point& vars);

/// Truncated sum in increasing diagonal shells, lexicographic inside a shell. Gamma and Pochhammer factors
/// may carry indices anywhere. Throws PoleHit when a denominator factor vanishes at a lattice point and
/// NotConverging when the shell sums do not decrease over the last quarter of shells.
SeriesValue eval_series(const HypSeries& s, const Bindings& params, const Point& vars, const EvalConfig& cfg);

/// Sum over terms of prefactor * series; tails are weighted by |prefactor|.
SeriesValue eval_terms(const TermSum& ts, const Bindings& params, const Point& vars, const EvalConfig& cfg);

struct PointRecord {
  Point point;
  Real lhs, rhs;
  double relative_error = 0;
  double tail = 0;  // largest relative tail of the two sides
  bool pass = false;
};

struct VerificationReport {
  std::vector<PointRecord> points;
  double tolerance = 0;
  /// Sampled points dropped because a prefactor needed a branch choice.
  int rejected_branch = 0;

  bool pass() const;
  std::string json() const;
};

struct SampleConfig {
  int n_points = 5;
  std::uint64_t seed = 1;
  /// Points must stay inside both regions with |X|, |Y| divided by this factor.
  double margin = 0.9;
  int max_draws = 200000;
};

/// Rejection-samples points inside both regions, log-uniform in the magnitude of each base variable with a
/// random sign, and compares the two sides. Throws EmptyOverlap when no draw lands in both regions.
VerificationReport verify_transformation(const HypSeries& lhs, const TermSum& rhs, const CommonRegion& lhs_region,
                                         const CommonRegion& rhs_region, const Bindings& params,
                                         const SampleConfig& sampling, const EvalConfig& cfg);

/// Comparison at given points, skipping the sampler.
VerificationReport verify_at(const HypSeries& lhs, const TermSum& rhs, const Bindings& params,
                             const std::vector<Point>& points, const EvalConfig& cfg);

}  // namespace hypcont
