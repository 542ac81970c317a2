#include "hypcont/var_expr.hpp"

#include "hypcont/linear_form.hpp"

#include <vector>

namespace hypcont {

namespace {

using Dense = std::vector<Rational>;  // coefficients in v, lowest degree first

Dense dmul(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(Dense& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Rational deval(const Dense& a, const Rational& v) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * v + *it;
  return acc;
}

// Synthetic division by (v - root); assumes root is a zero.
Dense deflate(const Dense& a, const Rational& root) {
  Dense q(a.size() - 1, Rational(0));
  Rational carry = 0;
  for (std::size_t i = a.size() - 1; i > 0; --i) {
    carry = a[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

// Writes p = c * v^i * (1 - v)^j if possible.
std::optional<VarExpr> as_monomial(Dense p, const std::string& v) {
  trim(p);
  if (p.size() == 1 && p[0] == 0) return VarExpr(Rational(0));
  std::int64_t i = 0, j = 0;
  while (p.size() > 1 && p[0] == 0) {
    p = deflate(p, 0);
    ++i;
  }
  while (p.size() > 1 && deval(p, 1) == 0) {
    p = deflate(p, 1);  // p = (v - 1) q = -(1 - v) q
    for (auto& c : p) c = -c;
    ++j;
  }
  if (p.size() != 1) return std::nullopt;
  VarExpr out(p[0]);
  if (i) out = out * VarExpr::atom(Atom{v, false}, i);
  if (j) out = out * VarExpr::atom(Atom{v, true}, j);
  return out;
}

std::string atom_text(const Atom& a, bool alone, bool latex) {
  if (!a.one_minus) return latex ? latex_symbol(a.var) : a.var;
  std::string s = "1 - " + (latex ? latex_symbol(a.var) : a.var);
  if (latex) s = "1-" + latex_symbol(a.var);
  return alone ? s : "(" + s + ")";
}

std::string power_text(const Atom& a, std::int64_t k, bool alone, bool latex) {
  std::string base = atom_text(a, alone && k == 1, latex);
  if (k == 1) return base;
  if (latex) return base + "^{" + std::to_string(k) + "}";
  return base + "^" + std::to_string(k);
}

struct Parts {
  std::vector<std::string> num, den;
};

Parts split(const VarExpr& e, bool latex, bool drop_sign) {
  Parts p;
  Rational c = e.coeff();
  if (drop_sign && c < 0) c = -c;
  Integer cn = numerator_of(c < 0 ? Rational(-c) : c);
  Integer cd = denominator_of(c);
  std::size_t n_num = 0;
  for (const auto& [a, k] : e.atoms()) n_num += k > 0 ? 1 : 0;
  if (cn != 1) p.num.push_back(cn.str());
  if (cd != 1) p.den.push_back(cd.str());
  bool num_alone = p.num.empty() && p.den.empty() && n_num == 1;
  bool den_alone = false;  // a lone (1 - y) under a fraction bar still needs parentheses
  for (const auto& [a, k] : e.atoms()) {
    if (k > 0)
      p.num.push_back(power_text(a, k, num_alone, latex));
    else
      p.den.push_back(power_text(a, -k, den_alone, latex));
  }
  return p;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string render_text(const VarExpr& e, const std::string& sep, bool drop_sign) {
  Parts p = split(e, false, drop_sign);
  std::string num = p.num.empty() ? "1" : join(p.num, sep);
  std::string out = num;
  if (!p.den.empty()) {
    std::string den = join(p.den, sep);
    if (p.den.size() > 1) den = "(" + den + ")";
    if (p.num.size() == 1 && e.atoms().size() > 1 && num.find(" - ") != std::string::npos) out = "(" + num + ")";
    out += "/" + den;
  }
  bool neg = !drop_sign && e.coeff() < 0;
  if (neg && out.find(" - ") != std::string::npos && p.num.size() == 1 && p.den.empty()) out = "(" + out + ")";
  return (neg ? "-" : "") + out;
}

}  // namespace

VarExpr VarExpr::atom(const Atom& a, std::int64_t k) {
  VarExpr e;
  if (k != 0) e.atoms_[a] = k;
  return e;
}

std::set<std::string> VarExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [a, k] : atoms_) out.insert(a.var);
  return out;
}

VarExpr VarExpr::operator*(const VarExpr& o) const {
  VarExpr r = *this;
  r.coeff_ *= o.coeff_;
  for (const auto& [a, k] : o.atoms_) r.atoms_[a] += k;
  std::erase_if(r.atoms_, [](const auto& e) { return e.second == 0; });
  if (r.coeff_ == 0) r.atoms_.clear();
  return r;
}

VarExpr VarExpr::operator-() const {
  VarExpr r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

VarExpr VarExpr::inverse() const {
  if (coeff_ == 0) throw std::domain_error("reciprocal of zero variable expression");
  VarExpr r;
  r.coeff_ = 1 / coeff_;
  for (const auto& [a, k] : atoms_) r.atoms_[a] = -k;
  return r;
}

VarExpr VarExpr::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  VarExpr r;
  for (std::int64_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<VarExpr> VarExpr::one_minus() const {
  if (atoms_.empty()) return VarExpr(Rational(1 - coeff_));
  auto vars = variables();
  if (vars.size() != 1) return std::nullopt;
  const std::string v = *vars.begin();
  Dense num{Rational(numerator_of(coeff_))};
  Dense den{Rational(denominator_of(coeff_))};
  for (const auto& [a, k] : atoms_) {
    Dense f = a.one_minus ? Dense{Rational(1), Rational(-1)} : Dense{Rational(0), Rational(1)};
    for (std::int64_t j = 0; j < (k < 0 ? -k : k); ++j) {
      if (k > 0)
        num = dmul(num, f);
      else
        den = dmul(den, f);
    }
  }
  // 1 - N/D = (D - N)/D
  Dense diff(std::max(num.size(), den.size()), Rational(0));
  for (std::size_t i = 0; i < den.size(); ++i) diff[i] += den[i];
  for (std::size_t i = 0; i < num.size(); ++i) diff[i] -= num[i];
  auto top = as_monomial(diff, v);
  auto bottom = as_monomial(den, v);
  if (!top || !bottom) return std::nullopt;
  return *top / *bottom;
}

VarExpr VarExpr::abs() const {
  VarExpr r = *this;
  if (r.coeff_ < 0) r.coeff_ = -r.coeff_;
  return r;
}

std::string VarExpr::str() const { return render_text(*this, " ", false); }

std::string VarExpr::grammar() const { return render_text(*this, "*", false); }

std::string VarExpr::latex() const {
  Parts p = split(*this, true, false);
  std::string num = p.num.empty() ? "1" : join(p.num, " ");
  std::string out = p.den.empty() ? num : "\\frac{" + num + "}{" + join(p.den, " ") + "}";
  return (coeff_ < 0 ? "-" : "") + out;
}

std::string VarExpr::abs_str() const {
  Parts p = split(*this, false, true);
  if (p.num.empty() && !p.den.empty()) {
    VarExpr d = abs().inverse();
    return "1/Abs[" + render_text(d, " ", true) + "]";
  }
  return "Abs[" + render_text(*this, " ", true) + "]";
}

std::strong_ordering VarExpr::operator<=>(const VarExpr& o) const {
  if (auto c = atoms_ <=> o.atoms_; c != 0) return c;
  if (coeff_ < o.coeff_) return std::strong_ordering::less;
  if (o.coeff_ < coeff_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hypcont
