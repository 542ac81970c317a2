#pragma once

// Direct numerical reading of Horn's theorem from a characteristic list, independent of the library's
// ratio functions: rho and sigma are products over the forms evaluated in doubles, and the ray condition
// is minimized over a dense logarithmic t-grid with local refinement.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

struct HornList {
  std::vector<std::pair<int, int>> num, den;
};

struct HornOracle {
  HornList list;
  explicit HornOracle(HornList l) : list(std::move(l)) {}

  // Degree of the leading term ratio in direction k (0: first index, 1: second index).
  int degree(int k) const {
    int d = -1;
    for (auto [a, b] : list.num) d += k == 0 ? a : b;
    for (auto [a, b] : list.den) d -= k == 0 ? a : b;
    return d;
  }

  // |1/f| or |1/g| at the ray (m, n); infinity or zero when the ratio decays or grows on every ray.
  double radius(int k, double m, double n) const {
    const double inf = std::numeric_limits<double>::infinity();
    int d = degree(k);
    if (d < 0) return inf;
    if (d > 0) return 0;
    double f = 1 / (k == 0 ? m : n);
    for (auto [a, b] : list.num) f *= std::pow(a * m + b * n, k == 0 ? a : b);
    for (auto [a, b] : list.den) f /= std::pow(a * m + b * n, k == 0 ? a : b);
    return 1 / std::fabs(f);
  }

  double R() const { return radius(0, 1, 0); }
  double S() const { return radius(1, 0, 1); }

  // Minimum over t of max(rho/r - 1, sigma/s - 1): positive inside Z, negative outside.
  double margin(double r, double s) const {
    if (degree(0) < 0 || degree(1) < 0) return std::numeric_limits<double>::infinity();
    const int n = 8000;
    const double lo = -9, hi = 9;
    if (grid_rho.empty())
      for (int k = 0; k <= n; ++k) {
        double t = std::pow(10.0, lo + (hi - lo) * k / n);
        grid_rho.push_back(radius(0, t, 1));
        grid_sigma.push_back(radius(1, t, 1));
      }
    auto h = [&](double u) {
      double t = std::pow(10.0, u);
      return std::max(radius(0, t, 1) / r - 1, radius(1, t, 1) / s - 1);
    };
    std::vector<double> vals(n + 1);
    for (int k = 0; k <= n; ++k) vals[k] = std::max(grid_rho[k] / r - 1, grid_sigma[k] / s - 1);
    double best = *std::min_element(vals.begin(), vals.end());
    // Refine around the few deepest grid minima; flat stretches produce many shallow ones.
    std::vector<std::pair<double, int>> minima;
    for (int k = 1; k < n; ++k)
      if (vals[k] <= vals[k - 1] && vals[k] <= vals[k + 1] && (vals[k] < vals[k - 1] || vals[k] < vals[k + 1]))
        minima.emplace_back(vals[k], k);
    std::sort(minima.begin(), minima.end());
    if (minima.size() > 6) minima.resize(6);
    for (auto [v, k] : minima) {
      double a = lo + (hi - lo) * (k - 1) / n, b = lo + (hi - lo) * (k + 1) / n;
      for (int it = 0; it < 80; ++it) {
        double c = a + (b - a) * 0.381966, d = b - (b - a) * 0.381966;
        if (h(c) < h(d))
          b = d;
        else
          a = c;
      }
      best = std::min(best, h((a + b) / 2));
    }
    return best;
  }

  mutable std::vector<double> grid_rho, grid_sigma;

  // Membership with a flag for points too close to the boundary to judge.
  std::pair<bool, bool> contains(double r, double s, double band = 1e-9) const {
    double R0 = R(), S0 = S();
    double mr = (R0 - r) / std::max(r, 1e-300), ms = (S0 - s) / std::max(s, 1e-300);
    double m = margin(r, s);
    bool near = std::fabs(mr) < band || std::fabs(ms) < band || std::fabs(m) < band;
    return {mr > 0 && ms > 0 && m > 0, near};
  }
};

}  // namespace oracle
