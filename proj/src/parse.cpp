#include "hypcont/parse.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hypcont {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<Index>& indices) : text_(text) {
    for (const auto& i : indices) indices_.insert(i.name);
  }

  FactorProduct factors() {
    FactorProduct f = product();
    finish();
    return f;
  }
  LinearForm form() {
    LinearForm f = form_sum();
    finish();
    return f;
  }
  VarExpr var() {
    VarExpr v = var_sum();
    finish();
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> indices_;

  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(at + 1, what); }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "', found " + found());
  }
  void finish() {
    if (peek() != '\0') fail("unexpected " + found());
  }

  std::string identifier() {
    if (!ident_start(peek())) fail("expected a name, found " + found());
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  // Affine forms.

  LinearForm form_sum() {
    LinearForm out = form_product();
    while (true) {
      if (accept('+'))
        out += form_product();
      else if (accept('-'))
        out -= form_product();
      else
        return out;
    }
  }

  LinearForm form_product() {
    LinearForm out = form_unary();
    while (true) {
      std::size_t at = (peek(), pos_);
      // A number written against a name or a parenthesis multiplies it: "2m", "3(m - n)".
      if (out.is_constant() && (ident_start(peek()) || peek() == '(')) {
        out = scale(form_primary(), out.constant(), at);
      } else if (accept('*')) {
        LinearForm r = form_unary();
        if (r.is_constant())
          out = scale(out, r.constant(), at);
        else if (out.is_constant())
          out = scale(r, out.constant(), at);
        else
          fail("product of two non-constant forms", at);
      } else if (accept('/')) {
        LinearForm r = form_unary();
        if (!r.is_constant()) fail("division by a non-constant form", at);
        if (r.constant() == 0) fail("division by zero", at);
        out = scale(out, Rational(1) / r.constant(), at);
      } else {
        return out;
      }
    }
  }

  LinearForm scale(const LinearForm& f, const Rational& q, std::size_t at) const {
    try {
      return f.scaled(q);
    } catch (const std::domain_error&) {
      fail("index coefficients must be integers", at);
    }
  }

  LinearForm form_unary() {
    if (accept('-')) return -form_unary();
    if (accept('+')) return form_unary();
    return form_primary();
  }

  LinearForm form_primary() {
    char c = peek();
    if (digit(c)) return LinearForm(number());
    if (accept('(')) {
      LinearForm f = form_sum();
      expect(')');
      return f;
    }
    if (ident_start(c)) {
      std::size_t at = pos_;
      std::string name = identifier();
      if (peek() == '(') fail("function call '" + name + "' inside a linear form", at);
      if (indices_.count(name)) return LinearForm(Index{name});
      return LinearForm(Param{name});
    }
    fail("expected a linear form, found " + found());
  }

  // Variable monomials.

  VarExpr var_sum() {
    std::size_t at = (peek(), pos_);
    VarExpr out = var_product();
    while (true) {
      std::size_t op = (peek(), pos_);
      bool minus = accept('-');
      if (!minus && !accept('+')) return out;
      VarExpr r = var_product();
      if (!minus || !out.is_one()) fail("only 1 - v is allowed as a sum of variables", op);
      auto w = r.one_minus();
      if (!w) fail("1 - (...) is not a monomial in v and 1 - v", at);
      out = *w;
    }
  }

  VarExpr var_product() {
    VarExpr out = var_unary();
    while (true) {
      if (accept('*'))
        out = out * var_unary();
      else if (accept('/')) {
        std::size_t at = pos_;
        VarExpr r = var_unary();
        if (r.is_constant() && r.coeff() == 0) fail("division by zero", at);
        out = out / r;
      } else {
        return out;
      }
    }
  }

  VarExpr var_unary() {
    if (accept('-')) return -var_unary();
    return var_power();
  }

  VarExpr var_power() {
    VarExpr base = var_primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    if (!digit(peek())) fail("expected an integer exponent, found " + found());
    std::size_t at = pos_;
    Rational k = number();
    if (!is_integer(k)) fail("expected an integer exponent", at);
    auto e = static_cast<std::int64_t>(numerator_of(k));
    if (e == 0) return VarExpr(1);
    if (base.is_constant() && base.coeff() == 0 && neg) fail("division by zero", at);
    return base.pow(neg ? -e : e);
  }

  VarExpr var_primary() {
    char c = peek();
    if (digit(c)) return VarExpr(number());
    if (accept('(')) {
      VarExpr v = var_sum();
      expect(')');
      return v;
    }
    if (ident_start(c)) {
      std::size_t at = pos_;
      std::string name = identifier();
      if (peek() == '(') fail("function call '" + name + "' inside a variable expression", at);
      return VarExpr::var(name);
    }
    fail("expected a variable expression, found " + found());
  }

  // Factor products.

  FactorProduct product() {
    FactorProduct out = unary();
    while (true) {
      if (accept('*')) {
        out *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        FactorProduct r = unary();
        if (r.constant() == 0) fail("division by zero", at);
        out /= r;
      } else {
        return out;
      }
    }
  }

  FactorProduct unary() {
    if (accept('-')) {
      FactorProduct f = unary();
      f.scale(-1);
      return f;
    }
    return primary();
  }

  FactorProduct primary() {
    char c = peek();
    if (digit(c)) return FactorProduct(number());
    if (accept('(')) {
      FactorProduct f = product();
      expect(')');
      return f;
    }
    if (!ident_start(c)) fail("expected a factor, found " + found());
    std::size_t at = pos_;
    std::string name = identifier();
    if (peek() != '(') fail("bare name '" + name + "'; write pow(" + name + ", ...) for a variable", at);
    expect('(');
    FactorProduct out;
    if (name == "poch") {
      LinearForm base = form_sum();
      expect(',');
      LinearForm shift = form_sum();
      out = FactorProduct::poch(base, shift);
    } else if (name == "gamma") {
      out = FactorProduct::gamma(form_sum());
    } else if (name == "fact") {
      std::size_t arg = (peek(), pos_);
      std::string idx = identifier();
      if (!indices_.count(idx)) fail("'" + idx + "' is not a summation index", arg);
      out = FactorProduct::factorial(Index{idx});
    } else if (name == "pow") {
      VarExpr base = var_sum();
      expect(',');
      LinearForm e = form_sum();
      out = FactorProduct::power(base, e);
    } else if (name == "sign") {
      out = FactorProduct::sign(form_sum());
    } else {
      fail("unknown function '" + name + "'", at);
    }
    expect(')');
    return out;
  }
};

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

// Re-raises a parse error inside a list item with its column in the whole text.
template <class Fn>
auto item(std::string_view text, std::string_view part, Fn fn) {
  try {
    return fn(part);
  } catch (const ParseError& e) {
    std::size_t offset = static_cast<std::size_t>(part.data() - text.data());
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(e.column() + offset, msg);
  }
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// "name=value" pairs; `value` converts the right-hand side.
template <class T, class Fn>
std::map<std::string, T> assignments(std::string_view text, Fn value) {
  std::map<std::string, T> out;
  if (trim(text).empty()) return out;
  for (auto part : split_list(text)) {
    std::size_t offset = static_cast<std::size_t>(part.data() - text.data());
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ParseError(offset + 1, "expected name=value");
    std::string name = trim(part.substr(0, eq));
    if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char))
      throw ParseError(offset + 1, "invalid name '" + name + "'");
    std::string rhs = trim(part.substr(eq + 1));
    try {
      out[name] = value(rhs);
    } catch (const std::exception&) {
      throw ParseError(offset + eq + 2, "invalid value '" + rhs + "'");
    }
  }
  return out;
}

}  // namespace

FactorProduct parse_factors(std::string_view text, const std::vector<Index>& indices) {
  return Parser(text, indices).factors();
}

HypSeries parse_series(std::string_view text, const std::vector<Index>& indices) {
  return make_series(parse_factors(text, indices), indices);
}

LinearForm parse_form(std::string_view text, const std::vector<Index>& indices) {
  return Parser(text, indices).form();
}

VarExpr parse_var(std::string_view text) { return Parser(text, {}).var(); }

std::vector<Index> parse_indices(std::string_view text) {
  std::vector<Index> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!ident_start(c)) throw ParseError(i + 1, "expected an index name");
    std::size_t start = i;
    while (i < text.size() && ident_char(text[i])) ++i;
    Index idx{std::string(text.substr(start, i - start))};
    if (std::find(out.begin(), out.end(), idx) != out.end())
      throw ParseError(start + 1, "repeated index '" + idx.name + "'");
    out.push_back(idx);
  }
  if (out.empty()) throw ParseError(1, "no summation indices");
  return out;
}

std::vector<LinearForm> parse_form_list(std::string_view text, const std::vector<Index>& indices) {
  std::vector<LinearForm> out;
  if (trim(text).empty()) return out;
  for (auto part : split_list(text))
    out.push_back(item(text, part, [&](std::string_view p) { return parse_form(p, indices); }));
  return out;
}

std::vector<VarExpr> parse_var_list(std::string_view text) {
  std::vector<VarExpr> out;
  for (auto part : split_list(text))
    out.push_back(item(text, part, [](std::string_view p) { return parse_var(p); }));
  return out;
}

Bindings parse_bindings(std::string_view text) {
  return assignments<Rational>(text, [](const std::string& s) { return parse_rational(s); });
}

std::map<std::string, double> parse_point(std::string_view text) {
  return assignments<double>(text, [](const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  });
}

std::string grammar(const HypSeries& s) { return s.summand().grammar(); }

std::string terms_to_json(const TermSum& ts) {
  nlohmann::ordered_json out;
  out["schema"] = "hypcont.terms/1";
  out["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : ts.terms) {
    nlohmann::ordered_json j;
    j["prefactor"] = t.prefactor.grammar();
    nlohmann::ordered_json idx = nlohmann::ordered_json::array();
    for (const auto& i : t.series.indices) idx.push_back(i.name);
    j["indices"] = idx;
    j["summand"] = grammar(t.series);
    out["terms"].push_back(j);
  }
  return out.dump(2);
}

TermSum terms_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 1 : e.byte, "invalid JSON");
  }
  auto bad = [](const std::string& what) { return Error(ErrorKind::Parse, "terms JSON: " + what); };
  if (!j.is_object() || j.value("schema", "") != "hypcont.terms/1") throw bad("missing schema hypcont.terms/1");
  if (!j.contains("terms") || !j["terms"].is_array()) throw bad("missing terms array");
  TermSum ts;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("prefactor") || !t.contains("indices") || !t.contains("summand"))
      throw bad("each term needs prefactor, indices and summand");
    std::vector<Index> idx;
    for (const auto& n : t["indices"]) idx.push_back(Index{n.get<std::string>()});
    FactorProduct pre = parse_factors(t["prefactor"].get<std::string>(), {});
    ts.terms.push_back(Term{pre, parse_series(t["summand"].get<std::string>(), idx)});
  }
  return ts;
}

}  // namespace hypcont
