#pragma once

// pFp-1(a; b; z) for real z < 0 by integrating its differential equation from a point near the origin.
// Independent of the series code: the start values come from a plain long double sum and the path is
// z = -exp(u), on which theta = z d/dz becomes d/du.

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <vector>

namespace oracle {

using State = std::vector<long double>;

// Coefficients of prod (theta + r_i) in ascending powers of theta.
inline std::vector<long double> poly_from_roots(const std::vector<long double>& shifts) {
  std::vector<long double> c{1};
  for (long double r : shifts) {
    std::vector<long double> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += r * c[k];
      next[k + 1] += c[k];
    }
    c = next;
  }
  return c;
}

inline long double pfq_negative(const std::vector<long double>& a, const std::vector<long double>& b, long double z) {
  const std::size_t p = a.size();
  std::vector<long double> lower_shift{0};
  for (long double bi : b) lower_shift.push_back(bi - 1);
  const auto P = poly_from_roots(lower_shift);  // theta prod (theta + b - 1)
  const auto Q = poly_from_roots(a);            // prod (theta + a)

  const long double z0 = -0.25L;
  State y(p, 0);
  long double term = 1;
  for (int n = 0; n < 200; ++n) {
    long double nk = 1;
    for (std::size_t k = 0; k < p; ++k, nk *= n) y[k] += nk * term;
    long double r = z0 / (n + 1);
    for (long double ai : a) r *= ai + n;
    for (long double bi : b) r /= bi + n;
    term *= r;
  }

  auto rhs = [&](const State& s, State& ds, long double u) {
    long double zz = -std::exp(u);
    for (std::size_t k = 0; k + 1 < p; ++k) ds[k] = s[k + 1];
    long double acc = 0;
    for (std::size_t k = 0; k < p; ++k) acc += (P[k] - zz * Q[k]) * s[k];
    ds[p - 1] = -acc / (1 - zz);
  };
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(1e-17L, 1e-16L, ode::runge_kutta_fehlberg78<State, long double>());
  ode::integrate_adaptive(stepper, rhs, y, std::log(-z0), std::log(-z), 1e-3L);
  return y[0];
}

}  // namespace oracle
