#include "hypcont/factors.hpp"

#include <algorithm>

namespace hypcont {

namespace {

Rational int_pow(const Rational& base, Integer k) {
  bool inv = k < 0;
  if (inv) k = -k;
  Rational r = 1;
  for (Integer i = 0; i < k; ++i) r *= base;
  return inv ? Rational(1 / r) : r;
}

std::string exponent_text(const LinearForm& e) {
  std::string s = e.str();
  bool simple = (e.params().size() + e.indices().size() + (e.constant() != 0 ? 1 : 0)) == 1 &&
                s.find(' ') == std::string::npos && s.find('/') == std::string::npos;
  return simple ? s : "(" + s + ")";
}

std::string base_text(const VarExpr& b) {
  std::string s = b.str();
  bool atomic = s.find_first_of(" /-") == std::string::npos;
  return atomic ? s : "(" + s + ")";
}

std::string factorial_name(const PochKey& k) { return k.shift.indices().begin()->first.name; }

std::string wrap(const std::vector<std::string>& v, const std::string& sep, bool paren) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return paren && v.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

bool is_factorial(const PochKey& k) {
  return k.base == LinearForm(1) && k.shift.is_index_only() && k.shift.indices().size() == 1 &&
         k.shift.indices().begin()->second == 1;
}

FactorProduct FactorProduct::gamma(const LinearForm& arg, int multiplicity) {
  FactorProduct f;
  f.add_gamma(arg, multiplicity);
  return f;
}

FactorProduct FactorProduct::poch(const LinearForm& base, const LinearForm& shift, int multiplicity) {
  FactorProduct f;
  f.add_poch(base, shift, multiplicity);
  return f;
}

FactorProduct FactorProduct::factorial(const Index& i, int multiplicity) {
  return poch(LinearForm(1), LinearForm(i), multiplicity);
}

FactorProduct FactorProduct::sign(const LinearForm& exponent) {
  FactorProduct f;
  f.add_sign(exponent);
  return f;
}

FactorProduct FactorProduct::power(const VarExpr& base, const LinearForm& exponent) {
  FactorProduct f;
  f.add_power(base, exponent);
  return f;
}

std::vector<GammaFactor> FactorProduct::gamma_factors() const {
  std::vector<GammaFactor> out;
  for (const auto& [g, e] : gammas_)
    for (int i = 0; i < std::abs(e); ++i) out.push_back({g, e > 0 ? 1 : -1});
  return out;
}

std::vector<PochFactor> FactorProduct::poch_factors() const {
  std::vector<PochFactor> out;
  for (const auto& [p, e] : pochs_)
    for (int i = 0; i < std::abs(e); ++i) out.push_back({p.base, p.shift, e > 0 ? 1 : -1});
  return out;
}

bool FactorProduct::is_one() const {
  return gammas_.empty() && pochs_.empty() && sign_.is_zero() && powers_.empty() && constant_ == 1;
}

bool FactorProduct::has_index_content() const {
  for (const auto& [g, e] : gammas_)
    if (g.has_indices()) return true;
  for (const auto& [p, e] : pochs_)
    if (p.base.has_indices() || p.shift.has_indices()) return true;
  if (sign_.has_indices()) return true;
  for (const auto& [b, x] : powers_)
    if (x.has_indices()) return true;
  return false;
}

bool FactorProduct::has_index_content(std::span<const Index> idx) const {
  for (const auto& [g, e] : gammas_)
    if (g.contains_any(idx)) return true;
  for (const auto& [p, e] : pochs_)
    if (p.base.contains_any(idx) || p.shift.contains_any(idx)) return true;
  if (sign_.contains_any(idx)) return true;
  for (const auto& [b, x] : powers_)
    if (x.contains_any(idx)) return true;
  return false;
}

FactorProduct& FactorProduct::operator*=(const FactorProduct& o) {
  constant_ *= o.constant_;
  for (const auto& [g, e] : o.gammas_) add_gamma(g, e);
  for (const auto& [p, e] : o.pochs_) add_poch(p.base, p.shift, e);
  add_sign(o.sign_);
  for (const auto& [b, x] : o.powers_) add_power(b, x);
  return *this;
}

FactorProduct FactorProduct::inverse() const {
  FactorProduct f(1 / constant_);
  for (const auto& [g, e] : gammas_) f.gammas_[g] = -e;
  for (const auto& [p, e] : pochs_) f.pochs_[p] = -e;
  // (-1)^(-L) = (-1)^L for integer L; kept formal as -L.
  f.sign_ = -sign_;
  for (const auto& [b, x] : powers_) f.powers_[b] = -x;
  return f;
}

void FactorProduct::add_gamma(const LinearForm& arg, int mult) {
  if (mult == 0) return;
  int& e = gammas_[arg];
  e += mult;
  if (e == 0) gammas_.erase(arg);
}

void FactorProduct::add_poch(const LinearForm& base, const LinearForm& shift, int mult) {
  if (mult == 0 || shift.is_zero()) return;
  PochKey key{base, shift};
  int& e = pochs_[key];
  e += mult;
  if (e == 0) pochs_.erase(key);
}

void FactorProduct::add_sign(const LinearForm& exponent) {
  sign_ += exponent;
  if (sign_.is_constant() && is_integer(sign_.constant())) {
    if (numerator_of(sign_.constant()) % 2 != 0) constant_ = -constant_;
    sign_ = LinearForm();
  }
}

void FactorProduct::add_power(const VarExpr& base_in, const LinearForm& exponent_in) {
  if (exponent_in.is_zero() || base_in.is_one()) return;
  if (base_in.coeff() == 0) throw std::domain_error("power of zero");
  VarExpr base = base_in;
  LinearForm exponent = exponent_in;
  if (base.is_constant()) {
    if (base.coeff() == -1) {
      add_sign(exponent);
      return;
    }
    if (exponent.is_constant() && is_integer(exponent.constant())) {
      constant_ *= int_pow(base.coeff(), numerator_of(exponent.constant()));
      return;
    }
    Rational c = base.coeff() < 0 ? Rational(-base.coeff()) : base.coeff();
    if (c < 1) {
      base = base.inverse();
      exponent = -exponent;
    }
  } else if (base.atoms().begin()->second < 0) {
    base = base.inverse();
    exponent = -exponent;
  }
  LinearForm& e = powers_[base];
  e += exponent;
  if (e.is_zero()) powers_.erase(base);
}

FactorProduct FactorProduct::rename(const std::map<Index, Index>& m) const {
  return map_forms([&](const LinearForm& f) { return f.rename(m); });
}

std::string FactorProduct::str(const std::string& extra) const {
  std::vector<std::string> num, den;
  Integer cn = numerator_of(constant_), cd = denominator_of(constant_);
  bool neg = cn < 0;
  if (neg) cn = -cn;
  if (cn != 1) num.push_back(cn.str());
  if (cd != 1) den.push_back(cd.str());
  if (!sign_.is_zero()) num.push_back("(-1)^" + exponent_text(sign_));
  for (const auto& [b, x] : powers_) num.push_back(base_text(b) + "^" + exponent_text(x));
  if (!extra.empty()) num.push_back(extra);
  for (const auto& [p, e] : pochs_)
    if (is_factorial(p) && e < 0)
      for (int i = 0; i < -e; ++i) den.push_back(factorial_name(p) + "!");
  for (const auto& [g, e] : gammas_)
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? num : den).push_back("Gamma[" + g.str() + "]");
  for (const auto& [p, e] : pochs_) {
    if (is_factorial(p) && e < 0) continue;
    for (int i = 0; i < std::abs(e); ++i)
      (e > 0 ? num : den).push_back("Pochhammer[" + p.base.str() + ", " + p.shift.str() + "]");
  }
  std::string s;
  if (den.empty())
    s = num.empty() ? "1" : wrap(num, " ", false);
  else
    s = (num.empty() ? "1" : wrap(num, " ", true)) + "/" + wrap(den, " ", true);
  return neg ? "-" + (den.empty() && num.size() <= 1 ? s : "(" + s + ")") : s;
}

std::string FactorProduct::latex(const std::string& extra) const {
  std::vector<std::string> num, den;
  Integer cn = numerator_of(constant_), cd = denominator_of(constant_);
  bool neg = cn < 0;
  if (neg) cn = -cn;
  if (cn != 1) num.push_back(cn.str());
  if (cd != 1) den.push_back(cd.str());
  if (!sign_.is_zero()) num.push_back("(-1)^{" + sign_.latex() + "}");
  for (const auto& [b, x] : powers_) {
    std::string bs = b.latex();
    if (!b.is_constant() && (b.atoms().size() > 1 || b.coeff() != 1 || b.atoms().begin()->first.one_minus ||
                             b.atoms().begin()->second != 1))
      bs = "\\left(" + bs + "\\right)";
    num.push_back(bs + "^{" + x.latex() + "}");
  }
  if (!extra.empty()) num.push_back(extra);
  for (const auto& [g, e] : gammas_)
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? num : den).push_back("\\Gamma\\left(" + g.latex() + "\\right)");
  for (const auto& [p, e] : pochs_)
    for (int i = 0; i < std::abs(e); ++i) {
      std::string t = is_factorial(p) ? factorial_name(p) + "!" : "\\left(" + p.base.latex() + "\\right)_{" + p.shift.latex() + "}";
      (e > 0 ? num : den).push_back(t);
    }
  std::string n = num.empty() ? "1" : wrap(num, " ", false);
  std::string s = den.empty() ? n : "\\frac{" + n + "}{" + wrap(den, " ", false) + "}";
  return neg ? "-" + s : s;
}

std::string FactorProduct::grammar() const {
  std::vector<std::string> num, den;
  Integer cn = numerator_of(constant_), cd = denominator_of(constant_);
  if (cn != 1) num.push_back(cn.str());
  if (cd != 1) den.push_back(cd.str());
  if (!sign_.is_zero()) num.push_back("sign(" + sign_.grammar() + ")");
  for (const auto& [b, x] : powers_) num.push_back("pow(" + b.grammar() + ", " + x.grammar() + ")");
  for (const auto& [g, e] : gammas_)
    for (int i = 0; i < std::abs(e); ++i) (e > 0 ? num : den).push_back("gamma(" + g.grammar() + ")");
  for (const auto& [p, e] : pochs_)
    for (int i = 0; i < std::abs(e); ++i) {
      std::string t = is_factorial(p) ? "fact(" + factorial_name(p) + ")"
                                      : "poch(" + p.base.grammar() + ", " + p.shift.grammar() + ")";
      (e > 0 ? num : den).push_back(t);
    }
  std::string n = num.empty() ? "1" : wrap(num, "*", false);
  if (den.empty()) return n;
  return n + "/(" + wrap(den, "*", false) + ")";
}

}  // namespace hypcont
