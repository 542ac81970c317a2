#include "hypcont/numeric.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

namespace hypcont {

namespace {

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Rational value_of(const LinearForm& f, const Bindings& b) {
  auto v = f.substitute(b);
  if (auto* q = std::get_if<Rational>(&v)) return *q;
  throw std::invalid_argument("unbound symbol in " + std::get<LinearForm>(v).str());
}

bool nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

// Gamma(x + k)/Gamma(x) for integer k of either sign, exactly; nullopt when it is a pole.
std::optional<Rational> rising(const Rational& x, std::int64_t k) {
  Rational p = 1;
  if (k >= 0) {
    for (std::int64_t j = 0; j < k; ++j) p *= x + j;
    return p;
  }
  for (std::int64_t j = 1; j <= -k; ++j) {
    Rational d = x - j;
    if (d == 0) return std::nullopt;
    p *= d;
  }
  return Rational(1 / p);
}

std::map<std::string, Real> real_values(const Point& vars) {
  std::map<std::string, Real> out;
  for (const auto& [k, v] : vars) out[k] = Real(v);
  return out;
}

Real power_value(const Real& base, const Rational& e) {
  if (is_integer(e)) {
    if (base == 0 && e < 0) throw Error(ErrorKind::PoleHit, "zero raised to a negative power");
    return boost::multiprecision::pow(base, to_real(e));
  }
  if (base < 0) throw Error(ErrorKind::BranchRequired, "negative base under a non-integer exponent");
  if (base == 0) {
    if (e < 0) throw Error(ErrorKind::PoleHit, "zero raised to a negative power");
    return Real(0);
  }
  return boost::multiprecision::pow(base, to_real(e));
}

Real gamma_value(const Rational& a, int exponent) {
  if (nonpositive_integer(a)) {
    if (exponent > 0) throw Error(ErrorKind::PoleHit, "Gamma at the pole " + to_string(a));
    return Real(0);
  }
  Real g = boost::multiprecision::tgamma(to_real(a));
  return exponent > 0 ? g : Real(1 / g);
}

// (b)_s raised to the sign of `exponent`.
Real poch_value(const Rational& b, const Rational& s, int exponent) {
  std::optional<Rational> exact;
  if (is_integer(s)) exact = rising(b, static_cast<std::int64_t>(numerator_of(s)));
  if (is_integer(s) && !exact) {
    if (exponent > 0) throw Error(ErrorKind::PoleHit, "Pochhammer[" + to_string(b) + ", " + to_string(s) + "] is infinite");
    return Real(0);
  }
  Real v;
  if (exact) {
    v = to_real(*exact);
  } else if (nonpositive_integer(b)) {
    v = 0;
  } else {
    v = boost::multiprecision::tgamma(to_real(b + s)) / boost::multiprecision::tgamma(to_real(b));
  }
  if (exponent > 0) return v;
  if (v == 0) throw Error(ErrorKind::PoleHit, "vanishing Pochhammer[" + to_string(b) + ", " + to_string(s) + "] in a denominator");
  return Real(1 / v);
}

Real int_pow(const Real& x, int k) {
  Real r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= x;
  return k < 0 ? Real(1 / r) : r;
}

// One Gamma-type factor: Gamma(arg)^e, or (base)_shift^e, with base and shift split into their value at
// the origin and their integer index coefficients.
struct Fac {
  bool is_gamma;
  LinearForm base, shift;
  int e;
  Rational base0, shift0;
  std::vector<std::int64_t> base_k, shift_k;
};

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real eval_factors(const FactorProduct& f, const Bindings& params, const Point& vars) {
  if (f.has_index_content()) throw std::invalid_argument("factor product still carries an index");
  Real out = to_real(f.constant());
  if (!f.sign_exponent().is_zero()) {
    Rational e = value_of(f.sign_exponent(), params);
    if (!is_integer(e)) throw Error(ErrorKind::BranchRequired, "(-1) raised to a non-integer power");
    if (numerator_of(e) % 2 != 0) out = -out;
  }
  auto rv = real_values(vars);
  for (const auto& [base, exponent] : f.powers()) out *= power_value(base.eval(rv), value_of(exponent, params));
  for (const auto& [g, e] : f.gammas())
    for (int k = 0; k < std::abs(e); ++k) out *= gamma_value(value_of(g, params), e);
  for (const auto& [p, e] : f.pochs())
    for (int k = 0; k < std::abs(e); ++k) out *= poch_value(value_of(p.base, params), value_of(p.shift, params), e);
  return out;
}

SeriesValue eval_series(const HypSeries& s, const Bindings& params, const Point& vars, const EvalConfig& cfg) {
  if (cfg.max_terms_per_index < 1) throw std::invalid_argument("max_terms_per_index must be at least 1");
  const std::size_t n = s.indices.size();
  Bindings at_origin = params;
  for (const auto& i : s.indices) at_origin[i.name] = 0;

  std::vector<Fac> facs;
  FactorProduct plain(s.factors.constant());
  plain.add_sign(s.factors.sign_exponent());
  for (const auto& [b, x] : s.factors.powers()) plain.add_power(b, x);
  for (const auto& [g, e] : s.factors.gammas()) facs.push_back({true, g, LinearForm(), e, 0, 0, {}, {}});
  for (const auto& [p, e] : s.factors.pochs()) facs.push_back({false, p.base, p.shift, e, 0, 0, {}, {}});
  for (auto& f : facs) {
    f.base0 = value_of(f.base, at_origin);
    f.shift0 = value_of(f.shift, at_origin);
    for (const auto& i : s.indices) {
      f.base_k.push_back(f.base.coeff(i));
      f.shift_k.push_back(f.shift.coeff(i));
    }
  }

  // Value at the origin.
  Real t0 = eval_factors(plain, params, vars);
  for (const auto& f : facs)
    for (int k = 0; k < std::abs(f.e); ++k)
      t0 *= f.is_gamma ? gamma_value(value_of(f.base, at_origin), f.e)
                       : poch_value(value_of(f.base, at_origin), value_of(f.shift, at_origin), f.e);

  // Variable factor per unit step in each index.
  auto rv = real_values(vars);
  std::vector<Real> step_var(n, Real(1));
  for (const auto& v : s.vars) {
    if (!v.exponent.is_index_only()) throw std::invalid_argument("variable exponent " + v.exponent.str() + " is not index-only");
    Real x = v.expr.eval(rv);
    for (std::size_t i = 0; i < n; ++i)
      if (std::int64_t c = v.exponent.coeff(s.indices[i])) step_var[i] *= int_pow(x, static_cast<int>(c));
  }

  // Exact ratio term(N + e_i)/term(N); nullopt for a pole, zero when a numerator factor vanishes.
  auto ratio = [&](const std::vector<int>& N, std::size_t i) -> std::optional<Rational> {
    Rational top = 1, bottom = 1;
    for (const auto& f : facs) {
      std::int64_t beta = f.base_k[i];
      std::int64_t sigma = f.is_gamma ? 0 : f.shift_k[i];
      if (beta == 0 && sigma == 0) continue;
      Rational bv = f.base0, sv = f.shift0;
      for (std::size_t k = 0; k < n; ++k) {
        if (f.base_k[k]) bv += f.base_k[k] * N[k];
        if (f.shift_k[k]) sv += f.shift_k[k] * N[k];
      }
      std::optional<Rational> r;
      if (f.is_gamma) {
        r = rising(bv, beta);
      } else {
        auto up = rising(bv + sv, beta + sigma);
        auto down = rising(bv, beta);
        if (!up || !down || *down == 0) return std::nullopt;
        r = *up / *down;
      }
      if (!r) {
        if (f.e > 0) return std::nullopt;
        r = 0;  // a denominator Gamma reaching a pole zeroes the term
        top = 0;
        continue;
      }
      for (int k = 0; k < std::abs(f.e); ++k) (f.e > 0 ? top : bottom) *= *r;
    }
    if (bottom == 0) return std::nullopt;
    return Rational(top / bottom);
  };

  const int D = cfg.max_terms_per_index - 1;
  std::map<std::vector<int>, Real> prev, cur;
  std::vector<Real> shell_mag;
  Real total = 0;
  prev[std::vector<int>(n, 0)] = t0;
  total = t0;
  shell_mag.push_back(abs(t0));
  if (n == 0) return {t0, Real(0)};

  for (int d = 1; d <= D; ++d) {
    cur.clear();
    Real mag = 0;
    // Compositions of d into n parts, lexicographic.
    std::vector<int> N(n, 0);
    N[n - 1] = d;
    std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int left) {
      if (pos == n - 1) {
        N[pos] = left;
        Real term = 0;
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i) {
          if (N[i] == 0) continue;
          std::vector<int> P = N;
          --P[i];
          const Real& pv = prev.at(P);
          if (pv == 0) continue;
          auto r = ratio(P, i);
          if (!r) throw Error(ErrorKind::PoleHit, "a denominator factor vanishes at a lattice point");
          term = pv * to_real(*r) * step_var[i];
          found = true;
        }
        total += term;
        mag += abs(term);
        cur.emplace(N, term);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        N[pos] = k;
        walk(pos + 1, left - k);
      }
    };
    walk(0, d);
    shell_mag.push_back(mag);
    std::swap(prev, cur);
  }

  int quarter = std::max(1, static_cast<int>(shell_mag.size()) / 4);
  if (static_cast<int>(shell_mag.size()) > 4 && shell_mag.back() > 0) {
    bool rising_tail = true;
    for (std::size_t k = shell_mag.size() - static_cast<std::size_t>(quarter); k < shell_mag.size(); ++k)
      rising_tail = rising_tail && shell_mag[k] >= shell_mag[k - 1];
    if (rising_tail) throw Error(ErrorKind::NotConverging, "shell sums do not decrease over the last quarter of shells");
  }
  return {total, shell_mag.back()};
}

SeriesValue eval_terms(const TermSum& ts, const Bindings& params, const Point& vars, const EvalConfig& cfg) {
  SeriesValue out{Real(0), Real(0)};
  for (const auto& t : ts.terms) {
    Real pre = eval_factors(t.prefactor, params, vars);
    SeriesValue v = eval_series(t.series, params, vars, cfg);
    out.value += pre * v.value;
    out.tail += abs(pre) * v.tail;
  }
  return out;
}

bool VerificationReport::pass() const {
  return !points.empty() && std::all_of(points.begin(), points.end(), [](const PointRecord& p) { return p.pass; });
}

std::string VerificationReport::json() const {
  nlohmann::ordered_json j;
  j["schema"] = "hypcont.verify/1";
  j["tolerance"] = tolerance;
  j["pass"] = pass();
  j["rejected_branch"] = rejected_branch;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json o;
    o["point"] = p.point;
    o["lhs"] = p.lhs.str(20, std::ios_base::scientific);
    o["rhs"] = p.rhs.str(20, std::ios_base::scientific);
    o["relative_error"] = p.relative_error;
    o["tail"] = p.tail;
    o["pass"] = p.pass;
    arr.push_back(o);
  }
  j["points"] = arr;
  return j.dump(2);
}

namespace {

void collect_vars(const FactorProduct& f, std::set<std::string>& out) {
  for (const auto& [b, x] : f.powers())
    for (const auto& v : b.variables()) out.insert(v);
}

std::set<std::string> base_variables(const HypSeries& lhs, const TermSum& rhs) {
  std::set<std::string> out;
  for (const auto& v : lhs.vars)
    for (const auto& name : v.expr.variables()) out.insert(name);
  for (const auto& t : rhs.terms) {
    collect_vars(t.prefactor, out);
    for (const auto& v : t.series.vars)
      for (const auto& name : v.expr.variables()) out.insert(name);
  }
  return out;
}

PointRecord compare(const HypSeries& lhs, const TermSum& rhs, const Bindings& params, const Point& p,
                    const EvalConfig& cfg) {
  SeriesValue l = eval_series(lhs, params, p, cfg);
  SeriesValue r = eval_terms(rhs, params, p, cfg);
  PointRecord rec;
  rec.point = p;
  rec.lhs = l.value;
  rec.rhs = r.value;
  Real scale = std::max(abs(l.value), abs(r.value));
  Real floor = Real(1e-300);
  if (scale < floor) scale = floor;
  rec.relative_error = static_cast<double>(Real(abs(l.value - r.value) / scale));
  rec.tail = static_cast<double>(Real(std::max(l.tail, r.tail) / scale));
  rec.pass = rec.relative_error < cfg.tolerance && rec.tail < cfg.tolerance;
  return rec;
}

}  // namespace

VerificationReport verify_at(const HypSeries& lhs, const TermSum& rhs, const Bindings& params,
                             const std::vector<Point>& points, const EvalConfig& cfg) {
  PrecisionGuard guard(cfg.precision);
  VerificationReport rep;
  rep.tolerance = cfg.tolerance;
  for (const auto& p : points) rep.points.push_back(compare(lhs, rhs, params, p, cfg));
  return rep;
}

VerificationReport verify_transformation(const HypSeries& lhs, const TermSum& rhs, const CommonRegion& lhs_region,
                                         const CommonRegion& rhs_region, const Bindings& params,
                                         const SampleConfig& sampling, const EvalConfig& cfg) {
  if (sampling.n_points < 1) throw std::invalid_argument("at least one sample point is needed");
  PrecisionGuard guard(cfg.precision);
  VerificationReport rep;
  rep.tolerance = cfg.tolerance;
  const auto names = base_variables(lhs, rhs);
  std::mt19937_64 rng(sampling.seed);
  std::uniform_real_distribution<double> expo(-2.0, 0.5);
  std::bernoulli_distribution negative(0.5);
  int overlap = 0;
  for (int draw = 0; draw < sampling.max_draws && static_cast<int>(rep.points.size()) < sampling.n_points; ++draw) {
    Point p;
    for (const auto& v : names) p[v] = (negative(rng) ? -1.0 : 1.0) * std::pow(10.0, expo(rng));
    if (!lhs_region.contains(p, sampling.margin) || !rhs_region.contains(p, sampling.margin)) continue;
    ++overlap;
    try {
      rep.points.push_back(compare(lhs, rhs, params, p, cfg));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BranchRequired) throw;
      ++rep.rejected_branch;
    }
  }
  if (overlap == 0) throw Error(ErrorKind::EmptyOverlap, "no sampled point lies in both convergence regions");
  return rep;
}

}  // namespace hypcont
