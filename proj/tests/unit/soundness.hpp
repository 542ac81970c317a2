#pragma once

// Two-sided numeric check of the single-variable continuation formulas: the original pFq is summed
// directly inside its disk and integrated along its ODE outside it; the transformed side is summed
// from the simplified term sum.

#include "fixtures.hpp"
#include "hypcont/numeric.hpp"
#include "hypcont/olsson.hpp"
#include "ode_oracle.hpp"

#include <random>

namespace soundness {

using namespace hypcont;
using namespace fixtures;

inline HypSeries pfq(const std::vector<std::string>& upper, const std::vector<std::string>& lower) {
  FactorProduct f = pw("z", I("k")) / fact("k");
  for (const auto& u : upper) f *= poch(u, I("k"));
  for (const auto& l : lower) f /= poch(l, I("k"));
  return make_series(f, {Index{"k"}});
}

inline double distance_to_pole(const Rational& q) {
  double v = to_double(q);
  if (v > 0.5) return 1;
  return std::abs(v - std::round(v));
}

// Every Gamma argument and Pochhammer base at least 0.1 away from the non-positive integers.
inline bool generic(const FactorProduct& f, const Bindings& b) {
  auto ok = [&](const LinearForm& x) {
    auto v = x.free_part().substitute(b);
    return distance_to_pole(std::get<Rational>(v)) >= 0.1;
  };
  for (const auto& [g, e] : f.gammas())
    if (!ok(g)) return false;
  for (const auto& [p, e] : f.pochs())
    if (!is_factorial(p) && !ok(p.base)) return false;
  return true;
}

inline bool generic(const HypSeries& lhs, const TermSum& rhs, const Bindings& b) {
  if (!generic(lhs.factors, b)) return false;
  for (const auto& t : rhs.terms)
    if (!generic(t.prefactor, b) || !generic(t.series.factors, b)) return false;
  return true;
}

struct Case {
  const char* name;
  Transformation t;
  int p;
  double z_lo, z_hi;
};

inline std::vector<Case> cases() {
  return {
      {"one", Transformation::One, 2, 0.3, 0.7},       {"inf", Transformation::Inf, 2, -6, -1.6},
      {"PET1", Transformation::Pet1, 2, -0.8, 0.45},  {"PET2", Transformation::Pet2, 2, -0.8, 0.45},
      {"PET3", Transformation::Pet3, 2, -0.7, 0.7},    {"pfq_inf p=2", Transformation::PfqInf, 2, -6, -1.6},
      {"pfq_inf p=3", Transformation::PfqInf, 3, -6, -1.6},
  };
}

struct Result {
  int points = 0;
  int failures = 0;
  double worst = 0;
};

// `draws` generic parameter sets, five points each, relative agreement below `tol`.
inline Result run(const Case& c, std::mt19937_64& rng, int draws = 50, double tol = 1e-8) {
  std::uniform_int_distribution<int> num(-180, 270);
  std::uniform_real_distribution<double> unit(0, 1);
  EvalConfig cfg;
  cfg.max_terms_per_index = 400;
  PrecisionGuard guard(cfg.precision);

  std::vector<std::string> upper = c.p == 2 ? std::vector<std::string>{"a", "b"}
                                            : std::vector<std::string>{"a", "b", "e"};
  std::vector<std::string> lower = c.p == 2 ? std::vector<std::string>{"c"} : std::vector<std::string>{"c", "d"};
  HypSeries lhs = pfq(upper, lower);
  auto form = inner_sum(1, make_indices({"k"}), lhs);
  TermSum rhs = expand_and_sim(c.t == Transformation::PfqInf ? pfq_inf(form) : apply_2f1(form, c.t));

  Result out;
  int done = 0;
  while (done < draws) {
    Bindings b;
    for (const auto& n : upper) b[n] = Rational(num(rng), 97);
    for (const auto& n : lower) b[n] = Rational(num(rng), 97);
    if (!generic(lhs, rhs, b)) continue;
    ++done;
    for (int k = 0; k < 5; ++k) {
      double z = c.z_lo + (c.z_hi - c.z_lo) * unit(rng);
      Point at{{"z", z}};
      double right = static_cast<double>(eval_terms(rhs, b, at, cfg).value);
      double left;
      if (z < -1) {
        std::vector<long double> av, bv;
        for (const auto& n : upper) av.push_back(to_long_double(b[n]));
        for (const auto& n : lower) bv.push_back(to_long_double(b[n]));
        left = static_cast<double>(oracle::pfq_negative(av, bv, z));
      } else {
        left = static_cast<double>(eval_series(lhs, b, at, cfg).value);
      }
      double err = std::abs(left - right) / std::max(std::abs(left), 1e-300);
      out.worst = std::max(out.worst, err);
      ++out.points;
      if (!(err < tol)) ++out.failures;
    }
  }
  return out;
}

}  // namespace soundness
