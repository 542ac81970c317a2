#include "hypcont/olsson.hpp"

#include "hypcont/rewrite.hpp"

#include <algorithm>
#include <array>

namespace hypcont {

namespace {

Error unsupported(const std::string& what) { return Error(ErrorKind::UnsupportedSubseries, what); }

std::size_t symbol_count(const LinearForm& f) {
  return f.params().size() + f.indices().size() + (f.constant() != 0 ? 1 : 0);
}

// Bare symbols before compound forms, as in {b1, a + p}.
void sort_params(std::vector<LinearForm>& v) {
  std::stable_sort(v.begin(), v.end(), [](const LinearForm& a, const LinearForm& b) {
    auto ka = symbol_count(a), kb = symbol_count(b);
    if (ka != kb) return ka < kb;
    return a.str() < b.str();
  });
}

std::string list_str(const std::vector<LinearForm>& v, bool latex) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + (latex ? v[i].latex() : v[i].str());
  return s;
}

FactorProduct gamma_ratio(const std::vector<LinearForm>& num, const std::vector<LinearForm>& den) {
  FactorProduct f;
  for (const auto& g : num) f.add_gamma(g, 1);
  for (const auto& g : den) f.add_gamma(g, -1);
  return f;
}

VarExpr one_minus_or_throw(const VarExpr& z) {
  auto w = z.one_minus();
  if (!w) throw unsupported("1 - (" + z.str() + ") is not a product of powers of the variables");
  return *w;
}

InnerHypForm with(const InnerHypForm& base, const FactorProduct& coeff, std::vector<LinearForm> upper,
                  std::vector<LinearForm> lower, VarExpr arg) {
  InnerHypForm out = base;
  out.outer = base.outer * coeff;
  out.upper = std::move(upper);
  out.lower = std::move(lower);
  out.arg = std::move(arg);
  return out;
}

void require_2f1(const InnerHypForm& f, Transformation t) {
  if (f.upper.size() != 2 || f.lower.size() != 1)
    throw unsupported(std::string(to_string(t)) + " needs a 2F1 inner series, got " + f.pfq_str());
}

}  // namespace

std::vector<Index> InnerHypForm::outer_indices() const {
  std::vector<Index> out = indices;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(summed));
  return out;
}

std::string InnerHypForm::pfq_str() const {
  return "HypergeometricPFQ[{" + list_str(upper, false) + "}, {" + list_str(lower, false) + "}, " + arg.str() + "]";
}

std::string InnerHypForm::str() const { return outer.str(pfq_str()); }

std::string InnerHypForm::latex() const {
  std::string pfq = "{}_{" + std::to_string(upper.size()) + "}F_{" + std::to_string(lower.size()) + "}\\left(" +
                    list_str(upper, true) + "; " + list_str(lower, true) + "; " + arg.latex() + "\\right)";
  return outer.latex(pfq);
}

std::string str(const PendingSum& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " + " : "") + ps[i].str();
  return s.empty() ? "0" : s;
}

std::string latex(const PendingSum& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " + " : "") + ps[i].latex();
  return s.empty() ? "0" : s;
}

const char* to_string(Transformation t) {
  switch (t) {
    case Transformation::One: return "one";
    case Transformation::Inf: return "inf";
    case Transformation::Pet1: return "PET1";
    case Transformation::Pet2: return "PET2";
    case Transformation::Pet3: return "PET3";
    case Transformation::PfqInf: return "pfq_inf";
  }
  return "?";
}

InnerHypForm inner_sum(int q, const std::vector<Index>& indices, const HypSeries& s) {
  if (q < 1 || static_cast<std::size_t>(q) > indices.size())
    throw Error(ErrorKind::InvalidOptions, "q must lie between 1 and the number of indices");
  const Index idx = indices[static_cast<std::size_t>(q - 1)];
  const std::array<Index, 1> one{idx};

  FactorProduct f = gamma_to_poch(s.summand(), one, true);
  f = isolate_index(f, idx);
  f = positive_poch(f, one);
  f = isolate_index(f, idx);

  InnerHypForm out;
  out.indices = indices;
  out.summed = static_cast<std::size_t>(q - 1);
  out.arg = VarExpr(Rational(1));
  FactorProduct outer(f.constant());

  for (const auto& [g, mult] : f.gammas()) {
    if (g.contains(idx)) throw unsupported("index " + idx.name + " left in Gamma[" + g.str() + "]");
    outer.add_gamma(g, mult);
  }
  for (const auto& [key, mult] : f.pochs()) {
    if (key.base.contains(idx)) throw unsupported("index " + idx.name + " in Pochhammer base " + key.base.str());
    std::int64_t c = key.shift.coeff(idx);
    if (c == 0) {
      outer.add_poch(key.base, key.shift, mult);
      continue;
    }
    if (c != 1 || key.shift != LinearForm(idx))
      throw unsupported("Pochhammer[" + key.base.str() + ", " + key.shift.str() + "] has index " + idx.name +
                        " with coefficient " + std::to_string(c));
    for (int k = 0; k < std::abs(mult); ++k) (mult > 0 ? out.upper : out.lower).push_back(key.base);
  }

  const LinearForm& sign = f.sign_exponent();
  if (sign.coeff(idx) % 2 != 0) out.arg = -out.arg;
  outer.add_sign(sign.without(one));
  for (const auto& [base, exponent] : f.powers()) {
    std::int64_t c = exponent.coeff(idx);
    if (c != 0 && c != 1 && c != -1)
      throw unsupported("variable " + base.str() + " enters with exponent " + exponent.str());
    if (c != 0) out.arg = out.arg * base.pow(c);
    outer.add_power(base, exponent.without(one));
  }
  if (out.arg.is_constant()) throw unsupported("no variable carries index " + idx.name);

  auto fact = std::find(out.lower.begin(), out.lower.end(), LinearForm(1));
  if (fact != out.lower.end())
    out.lower.erase(fact);
  else
    out.upper.push_back(LinearForm(1));
  if (out.upper.size() != out.lower.size() + 1)
    throw unsupported("sum over " + idx.name + " is not of pFp-1 shape (" + std::to_string(out.upper.size()) +
                      " upper, " + std::to_string(out.lower.size()) + " lower parameters)");
  sort_params(out.upper);
  sort_params(out.lower);
  out.outer = outer;
  return out;
}

PendingSum apply_2f1(const InnerHypForm& form, Transformation t) {
  if (t == Transformation::PfqInf || (t == Transformation::Inf && form.upper.size() != 2)) return pfq_inf(form);
  require_2f1(form, t);
  const LinearForm& a = form.upper[0];
  const LinearForm& b = form.upper[1];
  const LinearForm& c = form.lower[0];
  const VarExpr& z = form.arg;
  const LinearForm one(1);

  switch (t) {
    case Transformation::One: {
      VarExpr w = one_minus_or_throw(z);
      FactorProduct k1 = gamma_ratio({c, c - a - b}, {c - a, c - b});
      FactorProduct k2 = gamma_ratio({c, a + b - c}, {a, b}) * FactorProduct::power(w, c - a - b);
      return {with(form, k1, {a, b}, {a + b - c + one}, w),
              with(form, k2, {c - a, c - b}, {c - a - b + one}, w)};
    }
    case Transformation::Inf: {
      VarExpr w = z.inverse();
      FactorProduct k1 = gamma_ratio({c, b - a}, {b, c - a}) * FactorProduct::power(-z, -a);
      FactorProduct k2 = gamma_ratio({c, a - b}, {a, c - b}) * FactorProduct::power(-z, -b);
      return {with(form, k1, {a, a - c + one}, {a - b + one}, w), with(form, k2, {b, b - c + one}, {b - a + one}, w)};
    }
    case Transformation::Pet3: {
      VarExpr w = one_minus_or_throw(z);
      return {with(form, FactorProduct::power(w, c - a - b), {c - a, c - b}, {c}, z)};
    }
    case Transformation::Pet1:
    case Transformation::Pet2: {
      VarExpr w = one_minus_or_throw(z);
      const LinearForm& lead = t == Transformation::Pet1 ? a : b;
      const LinearForm& other = t == Transformation::Pet1 ? b : a;
      return {with(form, FactorProduct::power(w, -lead), {lead, c - other}, {c}, -(z / w))};
    }
    case Transformation::PfqInf: break;
  }
  return pfq_inf(form);
}

PendingSum pfq_inf(const InnerHypForm& form) {
  if (form.upper.size() != form.lower.size() + 1 || form.upper.size() < 2)
    throw unsupported("continuation at infinity needs a pFp-1 inner series, got " + form.pfq_str());
  const auto& a = form.upper;
  const auto& b = form.lower;
  const LinearForm one(1);
  PendingSum out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<LinearForm> gnum, gden, upper{a[k]}, lower;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == k) continue;
      gnum.push_back(a[j] - a[k]);
      gden.push_back(a[j]);
      lower.push_back(one + a[k] - a[j]);
    }
    for (const auto& bi : b) {
      gnum.push_back(bi);
      gden.push_back(bi - a[k]);
      upper.push_back(one + a[k] - bi);
    }
    FactorProduct coeff = gamma_ratio(gnum, gden) * FactorProduct::power(-form.arg, -a[k]);
    out.push_back(with(form, coeff, upper, lower, form.arg.inverse()));
  }
  return out;
}

namespace {

FactorProduct expanded_summand(const InnerHypForm& form) {
  const Index& k = form.summed_index();
  FactorProduct s = form.outer;
  for (const auto& u : form.upper) s.add_poch(u, LinearForm(k), 1);
  for (const auto& l : form.lower) s.add_poch(l, LinearForm(k), -1);
  s *= FactorProduct::factorial(k, -1);
  s.add_power(form.arg, LinearForm(k));
  return s;
}

}  // namespace

HypSeries expanded_series(const InnerHypForm& form) { return make_series(expanded_summand(form), form.indices); }

TermSum expand_and_sim(const PendingSum& ps) {
  TermSum out;
  for (const auto& form : ps) out.terms.push_back(split_term(sim(expanded_summand(form), form.indices), form.indices));
  return out;
}

OlssonResult olsson(int q, const std::vector<Index>& indices, const HypSeries& s,
                    const std::set<OlssonOption>& opts) {
  static const std::array<std::pair<OlssonOption, Transformation>, 5> kinds{{
      {OlssonOption::One, Transformation::One},
      {OlssonOption::Inf, Transformation::Inf},
      {OlssonOption::Pet1, Transformation::Pet1},
      {OlssonOption::Pet2, Transformation::Pet2},
      {OlssonOption::Pet3, Transformation::Pet3},
  }};
  std::optional<Transformation> t;
  int chosen = opts.count(OlssonOption::Sum) ? 1 : 0;
  for (const auto& [o, k] : kinds)
    if (opts.count(o)) {
      ++chosen;
      t = k;
    }
  if (chosen > 1) throw Error(ErrorKind::InvalidOptions, "at most one of sum, one, inf, PET1, PET2, PET3 may be set");

  OlssonResult r;
  InnerHypForm form = inner_sum(q, indices, s);
  r.pending = t ? apply_2f1(form, *t) : PendingSum{form};
  if (opts.count(OlssonOption::Sim) || opts.count(OlssonOption::Roc)) r.terms = expand_and_sim(r.pending);
  if (opts.count(OlssonOption::Roc)) r.region = common_roc(callroc(*r.terms));
  return r;
}

std::string OlssonResult::str() const {
  std::string body = terms ? hypcont::str(*terms) : hypcont::str(pending);
  if (!region) return body;
  return "{" + region->str() + ", " + body + "}";
}

std::string str(const TermSum& ts) {
  std::string s;
  for (std::size_t i = 0; i < ts.terms.size(); ++i) {
    const Term& t = ts.terms[i];
    std::string series = t.series.str();
    std::string part = t.prefactor.is_one() ? series : t.prefactor.str() + " " + (series == "1" ? "" : series);
    s += (i ? " + " : "") + part;
  }
  return s.empty() ? "0" : s;
}

std::string latex(const TermSum& ts) {
  std::string s;
  for (std::size_t i = 0; i < ts.terms.size(); ++i) {
    const Term& t = ts.terms[i];
    std::string sum = "\\sum_{";
    for (std::size_t j = 0; j < t.series.indices.size(); ++j) sum += (j ? "," : "") + t.series.indices[j].name;
    sum += "=0}^{\\infty} " + t.series.latex();
    s += (i ? " + " : "") + (t.prefactor.is_one() ? "" : t.prefactor.latex() + " ") + sum;
  }
  return s.empty() ? "0" : s;
}

}  // namespace hypcont
