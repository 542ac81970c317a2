#include "hypcont/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypcont {

UPoly::UPoly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

UPoly UPoly::linear(const Rational& alpha, const Rational& beta) { return UPoly(std::vector<Rational>{beta, alpha}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly UPoly::pow(int k) const {
  UPoly r(Rational(1));
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly rem = *this;
  if (degree() < d.degree()) return {UPoly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  const Rational lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rational f = rem.leading() / lead;
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= d.degree(); ++i) rem.c_[static_cast<std::size_t>(i + shift)] -= f * d.c_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  return {UPoly(std::move(q)), rem};
}

UPoly UPoly::derivative() const {
  std::vector<Rational> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational l = leading();
  for (auto& v : r.c_) v /= l;
  return r;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& v : c_) den = lcm(den, denominator_of(v));
  UPoly r = *this;
  for (auto& v : r.c_) {
    v *= den;
    num = gcd(num, numerator_of(v));
  }
  for (auto& v : r.c_) v /= num;
  return r;
}

Rational UPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

long double UPoly::eval(long double x) const {
  long double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_long_double(*it);
  return r;
}

int UPoly::sign_at(const Rational& x) const {
  Rational v = (*this)(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    Rational a = v < 0 ? Rational(-v) : v;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (i == 0)
      term = to_string(a);
    else if (a == 1)
      term = mono;
    else
      term = to_string(a) + " " + mono;
    if (out.empty())
      out = (v < 0 ? "-" : "") + term;
    else
      out += (v < 0 ? " - " : " + ") + term;
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SquareFree square_free(const UPoly& p) {
  SquareFree out{p.leading(), {}};
  if (p.degree() < 1) return out;
  UPoly f = p.monic();
  UPoly d = f.derivative();
  UPoly a = gcd(f, d);
  UPoly b = f.divmod(a).first;
  UPoly c = d.divmod(a).first;
  UPoly e = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    UPoly g = gcd(b, e);
    if (g.degree() >= 1) out.factors.emplace_back(g, i);
    b = b.divmod(g).first;
    c = e.divmod(g).first;
    e = c - b.derivative();
  }
  return out;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int variations(const std::vector<UPoly>& chain, const std::optional<Rational>& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = x ? q.sign_at(*x) : (q.leading() > 0 ? 1 : (q.leading() < 0 ? -1 : 0));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = p.coeff(i) / p.leading();
    if (v < 0) v = -v;
    if (v > m) m = v;
  }
  return m + 1;
}

std::optional<Rational> rational_root_in(const UPoly& sqfree, const Rational& lo, const Rational& hi) {
  UPoly prim = sqfree.primitive();
  Integer lead = numerator_of(prim.leading());
  if (lead < 0) lead = -lead;
  if (lead > Integer(1000000000)) return std::nullopt;
  std::vector<Integer> divisors;
  for (Integer d = 1; d * d <= lead; ++d)
    if (lead % d == 0) {
      divisors.push_back(d);
      if (d * d != lead) divisors.push_back(lead / d);
    }
  for (const auto& d : divisors) {
    Rational scaled_lo = lo * Rational(d), scaled_hi = hi * Rational(d);
    Integer k = numerator_of(scaled_lo) / denominator_of(scaled_lo);
    for (Integer j = k - 1; Rational(j) <= scaled_hi + 1; ++j) {
      Rational cand(j, d);
      if (cand > lo && cand <= hi && prim(cand) == 0) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

long double RealRoot::approx() const {
  if (exact) return to_long_double(*exact);
  RealRoot tight = *this;
  tight.refine(Rational(1, Integer(1) << 70));
  if (tight.exact) return to_long_double(*tight.exact);
  return (to_long_double(tight.lo) + to_long_double(tight.hi)) / 2;
}

void RealRoot::refine(const Rational& width) {
  if (exact) return;
  int slo = poly.sign_at(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int s = poly.sign_at(mid);
    if (s == 0) {
      exact = mid;
      lo = hi = mid;
      return;
    }
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
}

std::vector<RealRoot> real_roots(const UPoly& p, const Rational& lo, const std::optional<Rational>& hi_in) {
  std::vector<RealRoot> out;
  if (p.degree() < 1) return out;
  SquareFree sf = square_free(p);
  UPoly q(Rational(1));
  for (const auto& [f, m] : sf.factors) q *= f;
  auto chain = sturm_chain(q);
  Rational hi = hi_in ? *hi_in : cauchy_bound(q);
  if (!hi_in && hi <= lo) hi = lo + 1;

  struct Span {
    Rational a, b;
  };
  std::vector<Span> todo{{lo, hi}};
  while (!todo.empty()) {
    Span sp = todo.back();
    todo.pop_back();
    int n = variations(chain, sp.a) - variations(chain, sp.b);
    if (n == 0) continue;
    if (n == 1) {
      RealRoot r{q, sp.a, sp.b, std::nullopt};
      if (q.sign_at(sp.b) == 0) r.exact = sp.b;
      out.push_back(std::move(r));
      continue;
    }
    Rational mid = (sp.a + sp.b) / 2;
    todo.push_back({mid, sp.b});
    todo.push_back({sp.a, mid});
  }
  // A root sitting exactly at the open upper end does not belong to (lo, hi).
  if (hi_in) std::erase_if(out, [&](const RealRoot& r) { return r.exact && *r.exact == *hi_in; });
  for (auto& r : out) {
    if (r.exact) continue;
    Integer lead = numerator_of(q.primitive().leading());
    if (lead < 0) lead = -lead;
    r.refine(Rational(1, 4 * (lead + 1) * (lead + 1)));
    if (!r.exact) r.exact = rational_root_in(q, r.lo, r.hi);
    if (r.exact) r.lo = r.hi = *r.exact;
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.hi < b.hi; });
  return out;
}

void BPoly::add(int i, int j, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  Rational& v = t_[key];
  v += c;
  if (v == 0) t_.erase(key);
}

int BPoly::deg_r() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}

int BPoly::deg_s() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

int BPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
  return d;
}

BPoly BPoly::operator*(const BPoly& o) const {
  BPoly r;
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) r.add(a.first + b.first, a.second + b.second, x * y);
  return r;
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& [k, v] : r.t_) v = -v;
  return r;
}

std::vector<UPoly> BPoly::coeffs_in_s() const {
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(deg_s() + 1));
  for (const auto& [k, v] : t_) {
    auto& row = raw[static_cast<std::size_t>(k.second)];
    if (row.size() <= static_cast<std::size_t>(k.first)) row.resize(static_cast<std::size_t>(k.first) + 1, Rational(0));
    row[static_cast<std::size_t>(k.first)] = v;
  }
  std::vector<UPoly> out;
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

BPoly BPoly::from_coeffs_in_s(const std::vector<UPoly>& cs) {
  BPoly r;
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (int i = 0; i <= cs[j].degree(); ++i) r.add(i, static_cast<int>(j), cs[j].coeff(i));
  return r;
}

std::vector<UPoly> BPoly::coeffs_in_r() const {
  BPoly swapped;
  for (const auto& [k, v] : t_) swapped.add(k.second, k.first, v);
  return swapped.coeffs_in_s();
}

BPoly BPoly::from_coeffs_in_r(const std::vector<UPoly>& cs) {
  BPoly swapped = from_coeffs_in_s(cs), r;
  for (const auto& [k, v] : swapped.t_) r.add(k.second, k.first, v);
  return r;
}

Rational BPoly::operator()(const Rational& r, const Rational& s) const {
  Rational out = 0;
  for (const auto& [k, v] : t_) {
    Rational term = v;
    for (int i = 0; i < k.first; ++i) term *= r;
    for (int j = 0; j < k.second; ++j) term *= s;
    out += term;
  }
  return out;
}

long double BPoly::eval(long double r, long double s) const {
  long double out = 0;
  for (const auto& [k, v] : t_) out += to_long_double(v) * std::pow(r, k.first) * std::pow(s, k.second);
  return out;
}

BPoly BPoly::normalized() const {
  if (t_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [k, v] : t_) den = lcm(den, denominator_of(v));
  for (const auto& [k, v] : t_) num = gcd(num, numerator_of(v * den));
  Rational scale = Rational(den) / Rational(num);
  if (t_.rbegin()->second < 0) scale = -scale;
  BPoly r;
  for (const auto& [k, v] : t_) r.add(k.first, k.second, v * scale);
  return r;
}

BPoly BPoly::without_univariate_content() const {
  BPoly cur = *this;
  for (bool changed = true; changed;) {
    changed = false;
    for (int pass = 0; pass < 2; ++pass) {
      auto cs = pass == 0 ? cur.coeffs_in_s() : cur.coeffs_in_r();
      UPoly g;
      for (const auto& c : cs) g = gcd(g, c);
      if (g.degree() < 1) continue;
      for (auto& c : cs) c = c.divmod(g).first;
      cur = pass == 0 ? from_coeffs_in_s(cs) : from_coeffs_in_r(cs);
      changed = true;
    }
  }
  return cur;
}

std::string BPoly::str(const std::string& r, const std::string& s) const {
  if (t_.empty()) return "0";
  // Ascending by total degree, then by r-degree.
  std::vector<std::pair<std::pair<int, int>, Rational>> items(t_.begin(), t_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [k, v] : items) {
    Rational a = v < 0 ? Rational(-v) : v;
    std::vector<std::string> parts;
    if (a != 1 || (k.first == 0 && k.second == 0)) parts.push_back(to_string(a));
    if (k.first) parts.push_back(k.first == 1 ? r : r + "^" + std::to_string(k.first));
    if (k.second) parts.push_back(k.second == 1 ? s : s + "^" + std::to_string(k.second));
    std::string term;
    for (std::size_t i = 0; i < parts.size(); ++i) term += (i ? " " : "") + parts[i];
    if (out.empty())
      out = (v < 0 ? "-" : "") + term;
    else
      out += (v < 0 ? " - " : " + ") + term;
  }
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

namespace {

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= UPoly::linear(1, -xs[j]);
      denom *= xs[i] - xs[j];
    }
    out += basis * UPoly(ys[i] / denom);
  }
  return out;
}

}  // namespace

namespace {

// Sylvester matrix of two coefficient vectors (ascending), sized by their formal degrees.
std::vector<std::vector<Rational>> sylvester(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const int dp = static_cast<int>(p.size()) - 1, dq = static_cast<int>(q.size()) - 1;
  const auto n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int row = 0; row < dq; ++row)
    for (int k = 0; k <= dp; ++k) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + dp - k)] = p[static_cast<std::size_t>(k)];
  for (int row = 0; row < dp; ++row)
    for (int k = 0; k <= dq; ++k) m[static_cast<std::size_t>(dq + row)][static_cast<std::size_t>(row + dq - k)] = q[static_cast<std::size_t>(k)];
  return m;
}

}  // namespace

UPoly image_polynomial(const UPoly& T, const UPoly& N, const UPoly& D) {
  const int dt = T.degree();
  const int dq = std::max(N.degree(), D.degree());
  if (dt < 1) throw std::invalid_argument("image_polynomial needs a non-constant T");
  if (dq < 1) {
    // N/D constant: the image is that constant.
    return UPoly::linear(D.coeff(0), -N.coeff(0));
  }
  std::vector<Rational> ys, vals;
  for (int j = 0; j <= dt; ++j) {
    Rational y(j);
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
    for (int k = 0; k <= dq; ++k) q[static_cast<std::size_t>(k)] = y * D.coeff(k) - N.coeff(k);
    ys.push_back(y);
    vals.push_back(determinant(sylvester(T.coeffs(), q)));
  }
  return interpolate(ys, vals);
}

BPoly eliminate(const UPoly& Nr, const UPoly& Dr, const UPoly& Ns, const UPoly& Ds) {
  const int dp = std::max(Nr.degree(), Dr.degree());
  const int dq = std::max(Ns.degree(), Ds.degree());
  if (dp < 1 || dq < 1) throw std::invalid_argument("eliminate needs non-constant parametrizations");
  auto sylvester_det = [&](const Rational& r, const Rational& s) {
    std::vector<Rational> p(static_cast<std::size_t>(dp) + 1), q(static_cast<std::size_t>(dq) + 1);
    for (int k = 0; k <= dp; ++k) p[static_cast<std::size_t>(k)] = r * Dr.coeff(k) - Nr.coeff(k);
    for (int k = 0; k <= dq; ++k) q[static_cast<std::size_t>(k)] = s * Ds.coeff(k) - Ns.coeff(k);
    return determinant(sylvester(p, q));
  };

  std::vector<Rational> rs, ss;
  for (int i = 0; i <= dq; ++i) rs.emplace_back(i);
  for (int j = 0; j <= dp; ++j) ss.emplace_back(j);
  // For each sample r, the resultant as a polynomial in s; then interpolate each s-coefficient in r.
  std::vector<UPoly> in_s;
  for (const auto& r : rs) {
    std::vector<Rational> vals;
    for (const auto& s : ss) vals.push_back(sylvester_det(r, s));
    in_s.push_back(interpolate(ss, vals));
  }
  std::vector<UPoly> cs;
  for (int j = 0; j <= dp; ++j) {
    std::vector<Rational> vals;
    for (const auto& p : in_s) vals.push_back(p.coeff(j));
    cs.push_back(interpolate(rs, vals));
  }
  return BPoly::from_coeffs_in_s(cs);
}

}  // namespace hypcont
