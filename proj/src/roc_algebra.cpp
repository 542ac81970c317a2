#include "hypcont/roc.hpp"

#include "roc_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hypcont {

long double Extended::approx() const {
  return infinite ? std::numeric_limits<long double>::infinity() : to_long_double(value);
}

std::string Extended::str() const { return infinite ? "Infinity" : to_string(value); }

namespace {

Rational root_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = p.coeff(i) / p.leading();
    if (v < 0) v = -v;
    if (v > m) m = v;
  }
  return m + 1;
}

const Rational kTight(1, Integer(1) << 100);

}  // namespace

Algebraic::Algebraic(Rational v) : poly_(UPoly::linear(1, -v).primitive()), exact_(v), approx_(to_long_double(v)), index_(1) {}

Algebraic Algebraic::root_near(const UPoly& p, const Rational& near) {
  auto roots = real_roots(p, -root_bound(p), std::nullopt);
  if (roots.empty()) throw std::domain_error("no real root to pin");
  std::size_t best = 0;
  long double best_gap = std::numeric_limits<long double>::infinity();
  const long double target = to_long_double(near);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    roots[i].refine(kTight);
    long double gap = std::fabs(roots[i].approx() - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  const RealRoot& r = roots[best];
  if (r.exact) return Algebraic(*r.exact);
  Algebraic a;
  a.poly_ = r.poly.primitive();
  a.root_ = r;
  a.approx_ = r.approx();
  a.index_ = static_cast<int>(best) + 1;
  return a;
}

Algebraic Algebraic::image(const RealRoot& t0, const UPoly& N, const UPoly& D) {
  if (t0.exact) return Algebraic(N(*t0.exact) / D(*t0.exact));
  RealRoot tight = t0;
  tight.refine(kTight);
  Rational mid = tight.exact ? *tight.exact : (tight.lo + tight.hi) / 2;
  Rational near = N(mid) / D(mid);
  UPoly img = image_polynomial(t0.poly, N, D);
  if (img.degree() < 1) return Algebraic(near);
  return root_near(img, near);
}

Rational Algebraic::rational_approx(const Rational& width) const {
  if (exact_) return *exact_;
  RealRoot r = *root_;
  r.refine(width);
  return r.exact ? *r.exact : (r.lo + r.hi) / 2;
}

std::string Algebraic::str() const {
  if (exact_) return to_string(*exact_);
  return "Root[" + poly_.str("#1") + " &, " + std::to_string(index_) + "]";
}

namespace {

std::string form_str(const RayFactor& f, const std::string& m, const std::string& n) {
  LinearForm lf = LinearForm::index(m, f.m) + LinearForm::index(n, f.n);
  return lf.str();
}

bool is_sum(const RayFactor& f) { return f.m != 0 && f.n != 0; }

bool is_scaled(const RayFactor& f) { return (f.m != 0 && f.m != 1) || (f.n != 0 && f.n != 1); }

UPoly factor_poly(const RayFactor& f) { return UPoly::linear(Rational(f.m), Rational(f.n)); }

}  // namespace

UPoly RatioFn::num_t() const {
  UPoly p(constant);
  for (const auto& f : factors)
    if (f.exp > 0) p *= factor_poly(f).pow(f.exp);
  return p;
}

UPoly RatioFn::den_t() const {
  UPoly p(Rational(1));
  for (const auto& f : factors)
    if (f.exp < 0) p *= factor_poly(f).pow(-f.exp);
  return p;
}

std::string RatioFn::str(const std::string& m, const std::string& n) const {
  if (kind == Kind::Zero) return "0";
  if (kind == Kind::Infinite) return "Infinity";
  auto render = [&](bool numerator) {
    std::vector<std::string> parts;
    std::vector<RayFactor> shown = factors;
    std::stable_sort(shown.begin(), shown.end(), [](const RayFactor& a, const RayFactor& b) { return !is_sum(a) && is_sum(b); });
    for (const auto& f : shown) {
      if ((f.exp > 0) != numerator) continue;
      int e = f.exp > 0 ? f.exp : -f.exp;
      std::string s = form_str(f, m, n);
      if (is_sum(f) || (e > 1 && is_scaled(f))) s = "(" + s + ")";
      if (e > 1) s += "^" + std::to_string(e);
      parts.push_back(s);
    }
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
    return std::make_pair(out, parts.size());
  };
  auto [num, nparts] = render(true);
  auto [den, dparts] = render(false);
  Rational c = constant < 0 ? Rational(-constant) : constant;
  Rational cn = numerator_of(c), cd = denominator_of(c);
  std::string out = constant < 0 ? "-" : "";
  if (num.empty())
    out += to_string(cn);
  else
    out += (cn == 1 ? "" : to_string(cn) + " ") + num;
  if (cd != 1) den = den.empty() ? to_string(cd) : to_string(cd) + " " + den, ++dparts;
  if (!den.empty()) out += "/" + (dparts > 1 ? "(" + den + ")" : den);
  return out;
}

namespace {

// Builds the signed leading-order ratio prod form^coef(form) with one implicit factorial form.
RatioFn leading_ratio(const std::vector<IndexForm>& num, const std::vector<IndexForm>& den, bool first) {
  std::map<std::pair<std::int64_t, std::int64_t>, int> exps;
  Rational constant = 1;
  int degree = 0;
  auto take = [&](const IndexForm& f, int side) {
    std::int64_t c = first ? f.first : f.second;
    if (c == 0) return;
    int e = static_cast<int>(side * c);
    degree += e;
    std::int64_t a = f.first, b = f.second;
    std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    a /= g;
    b /= g;
    Rational scale(g);
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
      scale = -scale;
    }
    for (int k = 0; k < (e < 0 ? -e : e); ++k) constant = e > 0 ? Rational(constant * scale) : Rational(constant / scale);
    exps[{a, b}] += e;
  };
  for (const auto& f : num) take(f, 1);
  for (const auto& f : den) take(f, -1);
  take(first ? IndexForm{1, 0} : IndexForm{0, 1}, -1);

  // rho = 1/f along the ray.
  RatioFn out;
  if (degree > 0) {
    out.kind = RatioFn::Kind::Zero;
    return out;
  }
  if (degree < 0) {
    out.kind = RatioFn::Kind::Infinite;
    return out;
  }
  out.constant = 1 / constant;
  for (const auto& [k, e] : exps)
    if (e != 0) out.factors.push_back({k.first, k.second, -e});
  return out;
}

}  // namespace

Extended detail::limit_abs(UPoly N, UPoly D, const std::optional<Rational>& at) {
  if (!at) {
    if (N.degree() < D.degree()) return {false, 0};
    if (N.degree() > D.degree()) return Extended::inf();
    Rational v = N.leading() / D.leading();
    return {false, v < 0 ? Rational(-v) : v};
  }
  UPoly lin = UPoly::linear(1, -*at);
  while (N(*at) == 0 && D(*at) == 0) {
    N = N.divmod(lin).first;
    D = D.divmod(lin).first;
  }
  if (D(*at) == 0) return Extended::inf();
  Rational v = N(*at) / D(*at);
  return {false, v < 0 ? Rational(-v) : v};
}

RatioFunctions ratio_functions(const std::vector<IndexForm>& num, const std::vector<IndexForm>& den) {
  return {leading_ratio(num, den, true), leading_ratio(num, den, false)};
}

Rectangle rectangle(const RatioFunctions& rf) {
  Rectangle rect;
  switch (rf.rho.kind) {
    case RatioFn::Kind::Zero: rect.R = {false, 0}; break;
    case RatioFn::Kind::Infinite: rect.R = Extended::inf(); break;
    case RatioFn::Kind::Finite: rect.R = detail::limit_abs(rf.rho.num_t(), rf.rho.den_t(), std::nullopt); break;
  }
  switch (rf.sigma.kind) {
    case RatioFn::Kind::Zero: rect.S = {false, 0}; break;
    case RatioFn::Kind::Infinite: rect.S = Extended::inf(); break;
    case RatioFn::Kind::Finite: rect.S = detail::limit_abs(rf.sigma.num_t(), rf.sigma.den_t(), Rational(0)); break;
  }
  return rect;
}

long double SignCase::r(long double t) const { return rn.eval(t) / rd.eval(t); }
long double SignCase::s(long double t) const { return sn.eval(t) / sd.eval(t); }

std::string SignCase::interval_str() const {
  std::string out = "t > " + to_string(lo);
  if (hi) out += " && t < " + to_string(*hi);
  return out;
}

std::vector<SignCase> sign_cases(const RatioFunctions& rf) {
  if (rf.rho.kind != RatioFn::Kind::Finite || rf.sigma.kind != RatioFn::Kind::Finite) return {};
  std::vector<Rational> cuts;
  for (const auto* fn : {&rf.rho, &rf.sigma})
    for (const auto& f : fn->factors)
      if (f.m > 0 && f.n < 0) cuts.emplace_back(-f.n, f.m);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const UPoly rn = rf.rho.num_t(), rd = rf.rho.den_t(), sn = rf.sigma.num_t(), sd = rf.sigma.den_t();
  std::vector<SignCase> out;
  Rational lo = 0;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    SignCase c;
    c.lo = lo;
    if (i < cuts.size()) c.hi = cuts[i];
    Rational probe = c.hi ? Rational((c.lo + *c.hi) / 2) : Rational(c.lo + 1);
    int er = rn.sign_at(probe) * rd.sign_at(probe), es = sn.sign_at(probe) * sd.sign_at(probe);
    c.rn = er < 0 ? -rn : rn;
    c.rd = rd;
    c.sn = es < 0 ? -sn : sn;
    c.sd = sd;
    c.r_constant = rf.rho.factors.empty();
    c.s_constant = rf.sigma.factors.empty();
    out.push_back(std::move(c));
    if (i < cuts.size()) lo = cuts[i];
  }
  return out;
}

BPoly eliminate_boundary(const SignCase& c) {
  if (c.r_constant || c.s_constant) throw Error(ErrorKind::DegenerateCurve, "boundary degenerates to a point or a segment");
  BPoly p = eliminate(c.rn, c.rd, c.sn, c.sd).without_univariate_content().normalized();
  if (p.deg_r() < 1 || p.deg_s() < 1) throw Error(ErrorKind::DegenerateCurve, "boundary has no curve part");
  return p;
}

namespace {

// n = a^2 b with b square-free (sign kept in b). Trial division up to a fixed bound; a large leftover is
// treated as square-free unless it is a perfect square.
std::pair<Integer, Integer> square_part(Integer n) {
  Integer a = 1, b = n < 0 ? -1 : 1;
  Integer m = n < 0 ? Integer(-n) : n;
  for (Integer p = 2; p * p <= m && p < 100000; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      a *= p;
    }
    if (m % p == 0) {
      m /= p;
      b *= p;
    }
  }
  Integer r = boost::multiprecision::sqrt(m);
  if (r * r == m)
    a *= r;
  else
    b *= m;
  return {a, b};
}

// Lowest-order nonzero coefficient: the sign of p on small r > 0.
Rational lowest(const UPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) return p.coeff(i);
  return 0;
}

// Scales num, den and coeff by one rational so all are integers with gcd 1.
void integerize(UPoly& num, UPoly& den, Integer& coeff) {
  Integer l = 1;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) l = lcm(l, denominator_of(c));
  Integer g = coeff * l;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) g = gcd(g, numerator_of(c * l));
  if (g < 0) g = -g;
  if (g == 0) g = 1;
  Rational scale = Rational(l) / Rational(g);
  num *= UPoly(scale);
  den *= UPoly(scale);
  coeff = coeff * l / g;
}

std::string paren(const std::string& s, const std::string& rname) {
  bool plain = s == rname || s.find_first_not_of("0123456789/") == std::string::npos;
  return plain ? s : "(" + s + ")";
}

std::string join_signed(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty())
      out = t;
    else if (!t.empty() && t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

}  // namespace

std::optional<long double> Branch::eval(long double r) const {
  long double d = den.eval(r);
  if (d == 0) return std::nullopt;
  long double v = num.eval(r);
  if (coeff != 0) {
    long double radicand = to_long_double(Rational(radicand_const)), even = 1;
    for (const auto& [g, k] : factors) {
      long double gv = g.eval(r);
      if (k % 2) radicand *= gv;
      for (int j = 0; j < k / 2; ++j) even *= gv;
    }
    if (radicand < 0) return std::nullopt;
    v += sign * to_long_double(Rational(coeff)) * std::sqrt(radicand) * even;
  }
  return v / d;
}

std::string Branch::str(const std::string& rname) const {
  if (coeff == 0 && den.degree() == 0) return (num * UPoly(1 / den.coeff(0))).str(rname);

  std::vector<std::string> terms;
  auto push_term = [&](int i) {
    if (num.coeff(i) == 0) return;
    std::vector<Rational> one(static_cast<std::size_t>(i) + 1, Rational(0));
    one.back() = num.coeff(i);
    terms.push_back(UPoly(one).str(rname));
  };
  push_term(0);
  if (coeff != 0) {
    std::vector<std::string> parts;
    std::vector<const UPoly*> odd;
    for (const auto& [g, k] : factors)
      if (k % 2) odd.push_back(&g);
    bool single = radicand_const == 1 && odd.size() == 1;
    for (const auto& [g, k] : factors) {
      std::string gs = paren(g.str(rname), rname);
      if (single && k % 2) {
        parts.push_back(k == 1 ? "Sqrt[" + g.str(rname) + "]" : gs + "^(" + std::to_string(k) + "/2)");
      } else if (k / 2 > 0) {
        parts.push_back(k / 2 == 1 ? gs : gs + "^" + std::to_string(k / 2));
      }
    }
    if (!single && (radicand_const != 1 || !odd.empty())) {
      std::string inner = radicand_const != 1 ? to_string(Rational(radicand_const)) : "";
      for (const auto* g : odd) {
        std::string gs = odd.size() > 1 || radicand_const != 1 ? paren(g->str(rname), rname) : g->str(rname);
        inner += (inner.empty() ? "" : " ") + gs;
      }
      parts.push_back("Sqrt[" + inner + "]");
    }
    std::string rad;
    for (const auto& p : parts) rad += (rad.empty() ? "" : " ") + p;
    if (rad.empty()) rad = "1";
    if (coeff != 1) rad = to_string(Rational(coeff)) + " " + rad;
    terms.push_back((sign < 0 ? "-" : "") + rad);
  }
  for (int i = 1; i <= num.degree(); ++i) push_term(i);
  std::string top = join_signed(terms);
  if (top.empty()) top = "0";
  bool top_compound = terms.size() > 1;
  if (den.degree() == 0 && den.coeff(0) == 1) return top;
  std::string bottom = den.str(rname);
  bool bottom_compound = bottom.find(' ') != std::string::npos;
  return (top_compound ? "(" + top + ")" : top) + "/" + (bottom_compound ? "(" + bottom + ")" : bottom);
}

std::vector<Branch> solve_boundary(const BPoly& curve) {
  auto cs = curve.coeffs_in_s();
  const int deg = static_cast<int>(cs.size()) - 1;
  if (deg < 1) throw Error(ErrorKind::DegenerateCurve, "boundary does not involve s");
  if (deg > 2)
    throw Error(ErrorKind::UnsolvableDegree,
                "boundary has degree " + std::to_string(deg) + " in s; no closed-form branches");
  if (deg == 1) {
    Branch b;
    b.num = -cs[0];
    b.den = cs[1];
    if (lowest(b.den) < 0) {
      b.num = -b.num;
      b.den = -b.den;
    }
    integerize(b.num, b.den, b.coeff);
    return {b};
  }
  UPoly A = cs[2], B = cs[1], C = cs[0];
  if (lowest(A) < 0) {
    A = -A;
    B = -B;
    C = -C;
  }
  UPoly disc = B * B - UPoly(4) * A * C;
  if (disc.is_zero()) {
    Branch b;
    b.num = -B;
    b.den = UPoly(2) * A;
    integerize(b.num, b.den, b.coeff);
    return {b};
  }
  std::vector<std::pair<UPoly, int>> factors;
  UPoly product(Rational(1));
  for (const auto& [f, k] : square_free(disc).factors) {
    UPoly g = f.primitive();
    Rational lead_sign = g.coeff(0) != 0 ? g.coeff(0) : g.leading();
    if (lead_sign < 0) g = -g;
    factors.emplace_back(g, k);
    product *= g.pow(k);
  }
  Rational c = disc.leading() / product.leading();
  auto [a, rad] = square_part(numerator_of(c) * denominator_of(c));
  Integer q = denominator_of(c);
  std::size_t odd = 0;
  for (const auto& [g, k] : factors) odd += k % 2;
  if (rad == -1 && odd == 1) {
    for (auto& [g, k] : factors)
      if (k % 2) g = -g;
    rad = 1;
  }
  std::vector<Branch> out;
  for (int sign : {-1, 1}) {
    Branch b;
    b.num = UPoly(Rational(-q)) * B;
    b.den = UPoly(Rational(2 * q)) * A;
    b.coeff = a;
    b.sign = sign;
    b.radicand_const = rad;
    b.factors = factors;
    integerize(b.num, b.den, b.coeff);
    out.push_back(std::move(b));
  }
  return out;
}

std::optional<long double> ImplicitCurve::eval(long double r) const {
  Rational rr(static_cast<double>(r));
  UPoly q = sign_case.rn - UPoly(rr) * sign_case.rd;
  if (q.degree() < 1) return std::nullopt;
  auto roots = real_roots(q, sign_case.lo, sign_case.hi);
  std::optional<long double> best;
  for (auto& root : roots) {
    root.refine(Rational(1, Integer(1) << 80));
    Rational t = root.exact ? *root.exact : (root.lo + root.hi) / 2;
    Rational d = sign_case.sd(t);
    if (d == 0) continue;
    long double s = to_long_double(sign_case.sn(t) / d);
    if (s < 0) s = -s;
    if (!best || s < *best) best = s;
  }
  return best;
}

}  // namespace hypcont
