#pragma once

#include "hypcont/series.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hypcont {

/// Index-only form as integer coefficients over canonical indices (m, n, p, ...).
using FormVec = std::vector<std::int64_t>;

struct Pattern {
  std::string name;
  std::vector<FormVec> numerator;
  std::vector<FormVec> denominator;
  int n_vars = 2;
  /// Parameter slot names in call order, one per Pochhammer: numerator slots first in `numerator`
  /// order, then denominator slots. Empty for user patterns.
  std::vector<std::string> slots;
};

/// Canonical index names for an n-variable pattern: m, n, p, then m4, m5, ...
std::vector<Index> canonical_indices(int n_vars);

/// Built-in Appell, Horn and Humbert patterns plus any user patterns read from a JSON-lines file.
/// Lauricella F_A..F_D and single-variable pFq are recognized structurally, not stored.
class Catalog {
 public:
  Catalog();
  /// Built-ins plus the user file at `path` (missing file means no user patterns).
  explicit Catalog(std::filesystem::path path);
  /// Path from HYP_CATALOG, falling back to ./hyp_catalog.jsonl.
  static std::filesystem::path default_path();

  const std::vector<Pattern>& builtin() const { return builtin_; }
  const std::vector<Pattern>& user() const { return user_; }

  /// Name of the stored pattern equal to `forms` up to index permutation and sign flips.
  std::optional<std::string> lookup(const std::vector<FormVec>& numerator, const std::vector<FormVec>& denominator,
                                    int n_vars) const;

  /// Adds a user pattern and rewrites the file. Throws DuplicatePattern if it already maps to another
  /// name; adding the same pattern under the same name is a no-op.
  void add(const Pattern& p);
  /// Removes every user pattern called `name`. Throws UnknownPattern if there is none.
  void remove(const std::string& name);

 private:
  void save() const;

  std::vector<Pattern> builtin_;
  std::vector<Pattern> user_;
  std::optional<std::filesystem::path> path_;
};

/// Pattern built from forms written over the canonical indices (m, n or m, n, p).
Pattern pattern_from_forms(const std::string& name, const std::vector<LinearForm>& numerator,
                           const std::vector<LinearForm>& denominator);

struct Recognition {
  std::optional<std::string> name;
  FactorProduct prefactor;
  HypSeries series;
  /// Ordered characteristic list of the normalized series.
  CharacteristicList chars;

  /// {"F2", 1, series} or "Unknown series!" with the list.
  std::string str() const;
};

Recognition serrecog(const Term& t, const Catalog& catalog);
Recognition serrecog(const HypSeries& s, const Catalog& catalog);
std::vector<Recognition> serrecog(const TermSum& ts, const Catalog& catalog);

struct NamedCall {
  std::string name;
  /// Parameters in slot order; for Kampe de Feriet, grouped by form as {m+n}, {m}, {n} per side.
  std::vector<std::string> params;
  std::vector<VarExpr> vars;
  std::string str() const;
};

/// Explicit two-variable recognition: F2[a, b1, b2, c1, c2, x, y] or KdF[p:q:k; l:m:n][...].
/// Throws UnknownSeries when neither a named series nor a Kampe de Feriet shape matches.
NamedCall serrecog2var(const HypSeries& s, const Catalog& catalog);

}  // namespace hypcont
