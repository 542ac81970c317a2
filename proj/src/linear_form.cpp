#include "hypcont/linear_form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypcont {

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

enum class Style { Text, Grammar, Latex };

// Renders `coeff * sym` with the sign stripped; returns whether it was negative.
std::string term(const Rational& coeff, const std::string& sym, Style style, bool& negative) {
  negative = coeff < 0;
  Rational a = negative ? Rational(-coeff) : coeff;
  Integer num = numerator_of(a);
  Integer den = denominator_of(a);
  std::string s = style == Style::Latex ? latex_symbol(sym) : sym;
  std::string out;
  if (num != 1) out = num.str() + (style == Style::Grammar ? "*" : (style == Style::Latex ? "\\," : " "));
  out += s;
  if (den != 1) {
    if (style == Style::Latex) return "\\frac{" + (num != 1 ? num.str() + "\\," : "") + s + "}{" + den.str() + "}";
    out += "/" + den.str();
  }
  return out;
}

std::string render(const LinearForm& f, Style style) {
  std::vector<std::pair<bool, std::string>> terms;
  if (f.constant() != 0) {
    bool neg = f.constant() < 0;
    Rational a = neg ? Rational(-f.constant()) : f.constant();
    std::string s;
    if (style == Style::Latex && !is_integer(a))
      s = "\\frac{" + numerator_of(a).str() + "}{" + denominator_of(a).str() + "}";
    else
      s = to_string(a);
    terms.emplace_back(neg, s);
  }
  for (const auto& [p, c] : f.params()) {
    bool neg = false;
    std::string s = term(c, p.name, style, neg);
    terms.emplace_back(neg, s);
  }
  for (const auto& [i, c] : f.indices()) {
    bool neg = false;
    std::string s = term(Rational(c), i.name, style, neg);
    terms.emplace_back(neg, s);
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [neg, s] = terms[k];
    if (k == 0)
      out += (neg ? "-" : "") + s;
    else
      out += (neg ? " - " : " + ") + s;
  }
  return out;
}

}  // namespace

LinearForm LinearForm::param(const std::string& name, const Rational& c) {
  LinearForm f;
  if (c != 0) f.params_[Param{name}] = c;
  return f;
}

LinearForm LinearForm::index(const std::string& name, std::int64_t c) {
  LinearForm f;
  if (c != 0) f.indices_[Index{name}] = c;
  return f;
}

Rational LinearForm::coeff(const Param& p) const {
  auto it = params_.find(p);
  return it == params_.end() ? Rational(0) : it->second;
}

std::int64_t LinearForm::coeff(const Index& i) const {
  auto it = indices_.find(i);
  return it == indices_.end() ? 0 : it->second;
}

bool LinearForm::contains_any(std::span<const Index> idx) const {
  return std::any_of(idx.begin(), idx.end(), [&](const Index& i) { return contains(i); });
}

LinearForm LinearForm::index_part() const {
  LinearForm f;
  f.indices_ = indices_;
  return f;
}

LinearForm LinearForm::index_part(std::span<const Index> idx) const {
  LinearForm f;
  for (const auto& i : idx) {
    auto it = indices_.find(i);
    if (it != indices_.end()) f.indices_[i] = it->second;
  }
  return f;
}

LinearForm LinearForm::free_part() const {
  LinearForm f;
  f.constant_ = constant_;
  f.params_ = params_;
  return f;
}

LinearForm LinearForm::without(std::span<const Index> idx) const {
  LinearForm f = *this;
  for (const auto& i : idx) f.indices_.erase(i);
  return f;
}

std::int64_t LinearForm::index_content() const {
  std::int64_t g = 0;
  for (const auto& [i, c] : indices_) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

bool LinearForm::all_index_coeffs_positive() const {
  return !indices_.empty() &&
         std::all_of(indices_.begin(), indices_.end(), [](const auto& e) { return e.second > 0; });
}

bool LinearForm::all_index_coeffs_negative() const {
  return !indices_.empty() &&
         std::all_of(indices_.begin(), indices_.end(), [](const auto& e) { return e.second < 0; });
}

LinearForm LinearForm::operator-() const { return scaled(std::int64_t{-1}); }

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [p, c] : o.params_) params_[p] += c;
  for (const auto& [i, c] : o.indices_) indices_[i] += c;
  prune();
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm LinearForm::scaled(std::int64_t k) const {
  LinearForm f;
  if (k == 0) return f;
  f.constant_ = constant_ * k;
  for (const auto& [p, c] : params_) f.params_[p] = c * k;
  for (const auto& [i, c] : indices_) f.indices_[i] = c * k;
  return f;
}

LinearForm LinearForm::scaled(const Rational& q) const {
  LinearForm f;
  if (q == 0) return f;
  f.constant_ = constant_ * q;
  for (const auto& [p, c] : params_) f.params_[p] = c * q;
  for (const auto& [i, c] : indices_) {
    Rational v = Rational(c) * q;
    if (!is_integer(v)) throw std::domain_error("index coefficient would become fractional");
    f.indices_[i] = numerator_of(v).convert_to<std::int64_t>();
  }
  return f;
}

std::variant<Rational, LinearForm> LinearForm::substitute(const Bindings& b) const {
  LinearForm f = bind(b);
  if (f.is_constant()) return f.constant_;
  return f;
}

LinearForm LinearForm::bind(const Bindings& b) const {
  LinearForm f;
  f.constant_ = constant_;
  for (const auto& [p, c] : params_) {
    auto it = b.find(p.name);
    if (it != b.end())
      f.constant_ += c * it->second;
    else
      f.params_[p] = c;
  }
  for (const auto& [i, c] : indices_) {
    auto it = b.find(i.name);
    if (it != b.end())
      f.constant_ += Rational(c) * it->second;
    else
      f.indices_[i] = c;
  }
  f.prune();
  return f;
}

LinearForm LinearForm::rename(const std::map<Index, Index>& m) const {
  LinearForm f;
  f.constant_ = constant_;
  f.params_ = params_;
  for (const auto& [i, c] : indices_) {
    auto it = m.find(i);
    f.indices_[it == m.end() ? i : it->second] += c;
  }
  f.prune();
  return f;
}

LinearForm LinearForm::replace(const Index& i, const LinearForm& repl) const {
  std::int64_t c = coeff(i);
  if (c == 0) return *this;
  LinearForm f = *this;
  f.indices_.erase(i);
  return f + repl.scaled(c);
}

std::string LinearForm::str() const { return render(*this, Style::Text); }
std::string LinearForm::grammar() const { return render(*this, Style::Grammar); }
std::string LinearForm::latex() const { return render(*this, Style::Latex); }

std::strong_ordering LinearForm::operator<=>(const LinearForm& o) const {
  if (auto c = cmp(constant_, o.constant_); c != 0) return c;
  auto pa = params_.begin(), pb = o.params_.begin();
  for (; pa != params_.end() && pb != o.params_.end(); ++pa, ++pb) {
    if (auto c = pa->first <=> pb->first; c != 0) return c;
    if (auto c = cmp(pa->second, pb->second); c != 0) return c;
  }
  if (auto c = params_.size() <=> o.params_.size(); c != 0) return c;
  return indices_ <=> o.indices_;
}

void LinearForm::prune() {
  std::erase_if(params_, [](const auto& e) { return e.second == 0; });
  std::erase_if(indices_, [](const auto& e) { return e.second == 0; });
}

std::vector<Index> make_indices(std::initializer_list<const char*> names) {
  std::vector<Index> out;
  for (const char* n : names) out.push_back(Index{n});
  return out;
}

std::string latex_symbol(const std::string& name) {
  if (name.size() > 2 && name.ends_with("_p")) return latex_symbol(name.substr(0, name.size() - 2)) + "'";
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k > 0 && k < name.size()) return name.substr(0, k) + "_{" + name.substr(k) + "}";
  return name;
}

}  // namespace hypcont
