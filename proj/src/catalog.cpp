#include "hypcont/catalog.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <numeric>

namespace hypcont {

namespace {

using Forms = std::vector<FormVec>;

struct Key {
  int n_vars;
  Forms numerator;
  Forms denominator;
  bool operator==(const Key&) const = default;
};

bool first_negative(const FormVec& f) {
  for (auto c : f)
    if (c != 0) return c < 0;
  return false;
}

FormVec negated(FormVec f) {
  for (auto& c : f) c = -c;
  return f;
}

// (b)_L = (-1)^L / (1-b)_{-L}: a form whose first non-zero coefficient is negative moves to the
// other side negated. Sorting makes the result a multiset key.
Key canonical_key(const Forms& num, const Forms& den, int n_vars) {
  Key k{n_vars, {}, {}};
  for (const auto& f : num) (first_negative(f) ? k.denominator : k.numerator).push_back(first_negative(f) ? negated(f) : f);
  for (const auto& f : den) (first_negative(f) ? k.numerator : k.denominator).push_back(first_negative(f) ? negated(f) : f);
  std::sort(k.numerator.begin(), k.numerator.end());
  std::sort(k.denominator.begin(), k.denominator.end());
  return k;
}

FormVec permuted(const FormVec& f, const std::vector<int>& perm) {
  FormVec out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(perm[i])] = f[i];
  return out;
}

Forms permuted(const Forms& fs, const std::vector<int>& perm) {
  Forms out;
  for (const auto& f : fs) out.push_back(permuted(f, perm));
  return out;
}

FormVec to_vec(const LinearForm& f, const std::vector<Index>& indices) {
  FormVec v;
  for (const auto& i : indices) v.push_back(f.coeff(i));
  return v;
}

Pattern make(const std::string& name, Forms num, Forms den, std::vector<std::string> slots) {
  return Pattern{name, std::move(num), std::move(den), 2, std::move(slots)};
}

std::vector<Pattern> builtin_patterns() {
  const FormVec M{1, 0}, N{0, 1}, MN{1, 1}, NmM{-1, 1}, MmN{1, -1}, M2N{2, 1}, M2mN{2, -1}, N2mM{-1, 2};
  return {
      make("F1", {MN, M, N}, {MN}, {"a", "b", "b'", "c"}),
      make("F2", {MN, M, N}, {M, N}, {"a", "b1", "b2", "c1", "c2"}),
      make("F3", {M, N, M, N}, {MN}, {"a", "a'", "b", "b'", "c"}),
      make("F4", {MN, MN}, {M, N}, {"a", "b", "c", "c'"}),
      make("G1", {MN, NmM, MmN}, {}, {"a", "b", "b'"}),
      make("G2", {M, N, NmM, MmN}, {}, {"a", "a'", "b", "b'"}),
      make("G3", {N2mM, M2mN}, {}, {"a", "a'"}),
      make("H1", {MmN, MN, N}, {M}, {"a", "b", "c", "d"}),
      make("H2", {MmN, M, N, N}, {M}, {"a", "b", "c", "d", "e"}),
      make("H3", {M2N, N}, {MN}, {"a", "b", "c"}),
      make("H4", {M2N, N}, {M, N}, {"a", "b", "c", "d"}),
      make("H5", {M2N, NmM}, {N}, {"a", "b", "c"}),
      make("H6", {M2mN, NmM, N}, {}, {"a", "b", "c"}),
      make("H7", {M2mN, N, N}, {M}, {"a", "b", "c", "d"}),
      make("Phi1", {MN, M}, {MN}, {"a", "b", "c"}),
      make("Phi2", {M, N}, {MN}, {"b", "b'", "c"}),
      make("Phi3", {M}, {MN}, {"b", "c"}),
      make("Psi1", {MN, M}, {M, N}, {"a", "b", "c", "c'"}),
      make("Psi2", {MN}, {M, N}, {"a", "c", "c'"}),
      make("Xi1", {M, N, M}, {MN}, {"a", "a'", "b", "c"}),
      make("Xi2", {M, M}, {MN}, {"a", "b", "c"}),
  };
}

// Lauricella F_A..F_D in n >= 3 variables.
std::optional<std::string> lauricella(const Forms& num, const Forms& den, int n) {
  FormVec sum(static_cast<std::size_t>(n), 1);
  Forms units;
  for (int i = 0; i < n; ++i) {
    FormVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    units.push_back(e);
  }
  auto cat = [](Forms a, const Forms& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  Key k = canonical_key(num, den, n);
  const std::pair<const char*, Key> cands[] = {
      {"FA", canonical_key(cat({sum}, units), units, n)},
      {"FB", canonical_key(cat(units, units), {sum}, n)},
      {"FC", canonical_key({sum, sum}, units, n)},
      {"FD", canonical_key(cat({sum}, units), {sum}, n)},
  };
  for (const auto& [name, key] : cands)
    if (key == k) return std::string(name);
  return std::nullopt;
}

bool is_kdf_form(const FormVec& f) { return f == FormVec{1, 0} || f == FormVec{0, 1} || f == FormVec{1, 1}; }

struct KdfShape {
  std::array<int, 3> num{};  // counts of m+n, m, n
  std::array<int, 3> den{};
  std::string name() const {
    return "KdF[" + std::to_string(num[0]) + ":" + std::to_string(num[1]) + ":" + std::to_string(num[2]) + "; " +
           std::to_string(den[0]) + ":" + std::to_string(den[1]) + ":" + std::to_string(den[2]) + "]";
  }
};

int kdf_slot(const FormVec& f) { return f == FormVec{1, 1} ? 0 : (f == FormVec{1, 0} ? 1 : 2); }

std::optional<KdfShape> kdf_shape(const Forms& num, const Forms& den) {
  KdfShape s;
  for (const auto& f : num) {
    if (!is_kdf_form(f)) return std::nullopt;
    ++s.num[static_cast<std::size_t>(kdf_slot(f))];
  }
  for (const auto& f : den) {
    if (!is_kdf_form(f)) return std::nullopt;
    ++s.den[static_cast<std::size_t>(kdf_slot(f))];
  }
  return s;
}

// Split, normalize, split again: the index-free prefactor and the normalized series.
Term prepare(const Term& t) {
  Term first = split_term(t.series.summand(), t.series.indices);
  HypSeries norm = normalize_first_index_positive(first.series);
  Term second = split_term(norm.summand(), norm.indices);
  second.prefactor *= t.prefactor * first.prefactor;
  return second;
}

}  // namespace

std::vector<Index> canonical_indices(int n_vars) {
  std::vector<Index> out;
  const char* names[] = {"m", "n", "p"};
  for (int i = 0; i < n_vars; ++i) out.push_back(Index{i < 3 ? names[i] : "m" + std::to_string(i + 1)});
  return out;
}

Catalog::Catalog() : builtin_(builtin_patterns()) {}

Catalog::Catalog(std::filesystem::path path) : builtin_(builtin_patterns()), path_(std::move(path)) {
  std::ifstream in(*path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = nlohmann::json::parse(line);
    Pattern p;
    p.name = j.at("name").get<std::string>();
    p.numerator = j.at("num_forms").get<Forms>();
    p.denominator = j.at("den_forms").get<Forms>();
    p.n_vars = j.at("n_vars").get<int>();
    user_.push_back(std::move(p));
  }
}

std::filesystem::path Catalog::default_path() {
  if (const char* env = std::getenv("HYP_CATALOG"); env && *env) return env;
  return "hyp_catalog.jsonl";
}

std::optional<std::string> Catalog::lookup(const Forms& num, const Forms& den, int n_vars) const {
  std::vector<int> perm(static_cast<std::size_t>(n_vars));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<const Pattern*, Key>> keys;
  for (const auto* list : {&builtin_, &user_})
    for (const auto& p : *list)
      if (p.n_vars == n_vars) keys.emplace_back(&p, canonical_key(p.numerator, p.denominator, p.n_vars));
  do {
    Key k = canonical_key(permuted(num, perm), permuted(den, perm), n_vars);
    for (const auto& [p, key] : keys)
      if (key == k) return p->name;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

void Catalog::add(const Pattern& p) {
  if (auto existing = lookup(p.numerator, p.denominator, p.n_vars)) {
    if (*existing == p.name) return;
    throw Error(ErrorKind::DuplicatePattern, "pattern already stored as \"" + *existing + "\"");
  }
  user_.push_back(Pattern{p.name, p.numerator, p.denominator, p.n_vars, {}});
  save();
}

void Catalog::remove(const std::string& name) {
  auto it = std::remove_if(user_.begin(), user_.end(), [&](const Pattern& p) { return p.name == name; });
  if (it == user_.end()) throw Error(ErrorKind::UnknownPattern, "no user pattern named \"" + name + "\"");
  user_.erase(it, user_.end());
  save();
}

void Catalog::save() const {
  if (!path_) return;
  auto tmp = *path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write catalog " + tmp.string());
    for (const auto& p : user_) {
      nlohmann::ordered_json j;
      j["name"] = p.name;
      j["num_forms"] = p.numerator;
      j["den_forms"] = p.denominator;
      j["n_vars"] = p.n_vars;
      out << j.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, *path_);
}

Pattern pattern_from_forms(const std::string& name, const std::vector<LinearForm>& numerator,
                           const std::vector<LinearForm>& denominator) {
  int n_vars = 2;
  auto check = [&](const LinearForm& f) {
    if (!f.is_index_only()) throw Error(ErrorKind::InvalidOptions, "pattern form " + f.str() + " is not index-only");
    for (const auto& [i, c] : f.indices()) {
      if (i.name == "p") n_vars = 3;
      else if (i.name != "m" && i.name != "n")
        throw Error(ErrorKind::InvalidOptions, "pattern forms must use the indices m, n (and p), got " + i.name);
    }
  };
  for (const auto& f : numerator) check(f);
  for (const auto& f : denominator) check(f);
  auto idx = canonical_indices(n_vars);
  Pattern p{name, {}, {}, n_vars, {}};
  for (const auto& f : numerator) p.numerator.push_back(to_vec(f, idx));
  for (const auto& f : denominator) p.denominator.push_back(to_vec(f, idx));
  return p;
}

std::string Recognition::str() const {
  std::string body = prefactor.str() + ", " + series.str() + "}";
  if (name) return "{\"" + *name + "\", " + body;
  return "Unknown series!\n" + chars.forms_str() + "\n{" + body;
}

Recognition serrecog(const Term& t, const Catalog& catalog) {
  Term prepared = prepare(t);
  Recognition r{std::nullopt, prepared.prefactor, prepared.series, ordered(characteristic_list(prepared.series))};
  const auto& idx = prepared.series.indices;
  int n = static_cast<int>(idx.size());
  Forms num, den;
  for (const auto& f : r.chars.numerator) num.push_back(to_vec(f, idx));
  for (const auto& f : r.chars.denominator) den.push_back(to_vec(f, idx));

  if (n == 1) {
    bool plain = std::all_of(num.begin(), num.end(), [](const FormVec& f) { return f[0] == 1; }) &&
                 std::all_of(den.begin(), den.end(), [](const FormVec& f) { return f[0] == 1; });
    if (plain) r.name = std::to_string(num.size()) + "F" + std::to_string(den.size());
    return r;
  }
  if (n <= 3) r.name = catalog.lookup(num, den, n);
  if (!r.name && n >= 3) r.name = lauricella(num, den, n);
  if (!r.name && n == 2)
    if (auto shape = kdf_shape(num, den)) r.name = shape->name();
  return r;
}

Recognition serrecog(const HypSeries& s, const Catalog& catalog) { return serrecog(Term{FactorProduct(), s}, catalog); }

std::vector<Recognition> serrecog(const TermSum& ts, const Catalog& catalog) {
  std::vector<Recognition> out;
  for (const auto& t : ts.terms) out.push_back(serrecog(t, catalog));
  return out;
}

std::string NamedCall::str() const {
  std::string s = name + "[";
  bool first = true;
  for (const auto& p : params) {
    s += (first ? "" : ", ") + p;
    first = false;
  }
  for (const auto& v : vars) {
    s += (first ? "" : ", ") + v.str();
    first = false;
  }
  return s + "]";
}

namespace {

struct Entry {
  bool numerator;
  FormVec form;
  LinearForm base;
  bool used = false;
};

// Canonical orientation of one Pochhammer: returns whether it was flipped.
bool orient(bool& numerator, FormVec& form) {
  if (!first_negative(form)) return false;
  numerator = !numerator;
  form = negated(form);
  return true;
}

}  // namespace

NamedCall serrecog2var(const HypSeries& s, const Catalog& catalog) {
  if (s.indices.size() != 2) throw Error(ErrorKind::NotTwoVariable, "serrecog2var needs exactly two indices");
  Term prepared = prepare(Term{FactorProduct(), s});
  const HypSeries& series = prepared.series;
  CharacteristicList chars = characteristic_list(series);
  Forms num, den;
  for (const auto& f : chars.numerator) num.push_back(to_vec(f, series.indices));
  for (const auto& f : chars.denominator) den.push_back(to_vec(f, series.indices));

  // Series Pochhammers with their bases, minus one factorial per index.
  std::vector<Entry> entries;
  std::vector<Index> factorial_left = series.indices;
  for (const auto& [key, mult] : series.factors.pochs()) {
    if (!key.shift.has_indices()) continue;
    int count = std::abs(mult);
    if (mult < 0 && is_factorial(key)) {
      auto it = std::find(factorial_left.begin(), factorial_left.end(), key.shift.indices().begin()->first);
      if (it != factorial_left.end()) {
        factorial_left.erase(it);
        --count;
      }
    }
    for (int k = 0; k < count; ++k) entries.push_back({mult > 0, to_vec(key.shift, series.indices), key.base});
  }

  for (const auto& pat : catalog.builtin()) {
    if (pat.slots.empty()) continue;
    Key want = canonical_key(pat.numerator, pat.denominator, 2);
    for (std::vector<int> perm : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
      if (canonical_key(permuted(num, perm), permuted(den, perm), 2) != want) continue;
      std::vector<Entry> pool = entries;
      std::array<std::int64_t, 2> flips{0, 0};  // per canonical index
      for (auto& e : pool) {
        e.form = permuted(e.form, perm);
        if (orient(e.numerator, e.form)) {
          e.base = LinearForm(1) - e.base;
          for (int i = 0; i < 2; ++i) flips[static_cast<std::size_t>(i)] += e.form[static_cast<std::size_t>(i)];
        }
      }
      NamedCall call{pat.name, {}, {}};
      auto bind = [&](const FormVec& raw, bool numerator) {
        FormVec form = raw;
        bool flipped = orient(numerator, form);
        if (flipped)
          for (int i = 0; i < 2; ++i) flips[static_cast<std::size_t>(i)] += form[static_cast<std::size_t>(i)];
        for (auto& e : pool) {
          if (e.used || e.numerator != numerator || e.form != form) continue;
          e.used = true;
          call.params.push_back((flipped ? LinearForm(1) - e.base : e.base).str());
          return;
        }
        throw std::logic_error("slot binding failed for " + pat.name);
      };
      for (const auto& f : pat.numerator) bind(f, true);
      for (const auto& f : pat.denominator) bind(f, false);
      call.vars.resize(2);
      for (std::size_t k = 0; k < 2; ++k) {
        auto target = static_cast<std::size_t>(perm[k]);
        VarExpr v = series.vars[k].expr;
        call.vars[target] = flips[target] % 2 != 0 ? -v : v;
      }
      return call;
    }
  }

  auto shape = kdf_shape(num, den);
  if (!shape)
    throw Error(ErrorKind::UnknownSeries, "not an Appell, Horn or Kampe de Feriet series: " + ordered(chars).forms_str());
  std::array<std::vector<std::string>, 3> up, down;
  for (const auto& e : entries)
    (e.numerator ? up : down)[static_cast<std::size_t>(kdf_slot(e.form))].push_back(e.base.str());
  NamedCall call{shape->name(), {}, {series.vars[0].expr, series.vars[1].expr}};
  for (const auto* side : {&up, &down})
    for (const auto& group : *side) {
      std::string g = "{";
      for (std::size_t i = 0; i < group.size(); ++i) g += (i ? ", " : "") + group[i];
      call.params.push_back(g + "}");
    }
  return call;
}

}  // namespace hypcont
